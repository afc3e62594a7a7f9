//
// Copyright (c) 2026 The aggrew authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <aggrew/semantics.hh>

#include <algorithm>
#include <map>
#include <set>

namespace aggrew {

namespace {

bool cmpHolds(std::int64_t lhs, Cmp cmp, std::int64_t rhs) {
    switch (cmp) {
        case Cmp::Lt: return lhs < rhs;
        case Cmp::Le: return lhs <= rhs;
        case Cmp::Ge: return lhs >= rhs;
        case Cmp::Gt: return lhs > rhs;
        case Cmp::Eq: return lhs == rhs;
        case Cmp::Ne: return lhs != rhs;
    }
    return false;
}

// Comparison against the +inf/-inf defaults of min/max over an empty
// selection.
bool cmpInfinity(bool positive, Cmp cmp) {
    switch (cmp) {
        case Cmp::Lt:
        case Cmp::Le: return !positive;
        case Cmp::Ge:
        case Cmp::Gt: return positive;
        case Cmp::Eq: return false;
        case Cmp::Ne: return true;
    }
    return false;
}

} // namespace

void checkCap(std::size_t universe, int cap, const char* what) {
    if (static_cast<int>(universe) > cap) {
        throw CapExceededError(std::string("oracle too large: ") + what + " needs " +
                               std::to_string(universe) + " atoms, cap is " + std::to_string(cap));
    }
}

Interpretation::Interpretation(std::vector<Atom> as) : atoms(std::move(as)) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    for (const auto& a : atoms) {
        if (a.isFalsity()) { throw std::invalid_argument("interpretation cannot contain #false"); }
    }
}

bool Interpretation::contains(const Atom& a) const {
    return std::binary_search(atoms.begin(), atoms.end(), a);
}

bool Interpretation::subsetOf(const Interpretation& other) const {
    return std::includes(other.atoms.begin(), other.atoms.end(), atoms.begin(), atoms.end());
}

Interpretation Interpretation::intersect(const std::vector<Atom>& v) const {
    std::vector<Atom> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Atom> out;
    std::set_intersection(atoms.begin(), atoms.end(), sorted.begin(), sorted.end(),
                          std::back_inserter(out));
    return Interpretation(std::move(out));
}

Interpretation Interpretation::unionWith(const std::vector<Atom>& v) const {
    std::vector<Atom> out = atoms;
    out.insert(out.end(), v.begin(), v.end());
    return Interpretation(std::move(out));
}

std::string printInterpretation(const Interpretation& i) {
    std::string out;
    for (const auto& a : i.atoms) {
        if (!out.empty()) { out += ' '; }
        out += a.name;
    }
    return out;
}

bool satisfies(const Interpretation& i, const PropLiteral& l) {
    bool base = !l.atom.isFalsity() && i.contains(l.atom);
    return l.negations % 2 == 0 ? base : !base;
}

bool satisfies(const Interpretation& i, const Aggregate& a) {
    std::int64_t sum = 0;
    std::int64_t count = 0;
    std::optional<std::int64_t> minw;
    std::optional<std::int64_t> maxw;
    for (const auto& e : a.elements) {
        if (!satisfies(i, e.literal)) { continue; }
        ++count;
        sum = checkedAdd(sum, e.weight);
        if (!minw || e.weight < *minw) { minw = e.weight; }
        if (!maxw || e.weight > *maxw) { maxw = e.weight; }
    }
    switch (a.func) {
        case AggFunc::Sum: return cmpHolds(sum, *a.cmp, *a.bound);
        case AggFunc::Avg:
            // Exact rational comparison: sum/count (.) b iff sum (.) b*count,
            // as count >= 1.
            return count >= 1 && cmpHolds(sum, *a.cmp, checkedMul(*a.bound, count));
        case AggFunc::Min:
            return minw ? cmpHolds(*minw, *a.cmp, *a.bound) : cmpInfinity(true, *a.cmp);
        case AggFunc::Max:
            return maxw ? cmpHolds(*maxw, *a.cmp, *a.bound) : cmpInfinity(false, *a.cmp);
        case AggFunc::Count: return cmpHolds(count, *a.cmp, *a.bound);
        case AggFunc::Even: return count % 2 == 0;
        case AggFunc::Odd: return count % 2 == 1;
    }
    return false;
}

bool satisfies(const Interpretation& i, const Literal& l) {
    if (const auto* p = std::get_if<PropLiteral>(&l)) { return satisfies(i, *p); }
    return satisfies(i, std::get<Aggregate>(l));
}

bool satisfiesBody(const Interpretation& i, const Rule& r) {
    for (const auto& l : r.body) {
        if (!satisfies(i, l)) { return false; }
    }
    return true;
}

bool satisfies(const Interpretation& i, const Rule& r) {
    if (!satisfiesBody(i, r)) { return true; }
    for (const auto& h : r.head) {
        if (i.contains(h)) { return true; }
    }
    return false;
}

bool satisfies(const Interpretation& i, const Program& p) {
    for (const auto& r : p.rules) {
        if (!satisfies(i, r)) { return false; }
    }
    return true;
}

namespace {

PropLiteral freezeProp(const Interpretation& i, const PropLiteral& l) {
    if (l.negations == 0) { return l; }
    return satisfies(i, l) ? PropLiteral::top() : PropLiteral::bottom();
}

} // namespace

Aggregate reduct(const Interpretation& i, const Aggregate& a) {
    Aggregate out = a;
    for (auto& e : out.elements) { e.literal = freezeProp(i, e.literal); }
    return out;
}

Literal reduct(const Interpretation& i, const Literal& l) {
    if (const auto* p = std::get_if<PropLiteral>(&l)) { return freezeProp(i, *p); }
    return reduct(i, std::get<Aggregate>(l));
}

Program reduct(const Interpretation& i, const Program& p) {
    Program out;
    for (const auto& r : p.rules) {
        if (!satisfiesBody(i, r)) { continue; }
        Rule fr;
        fr.head = r.head;
        fr.headHadFalsity = r.headHadFalsity;
        for (const auto& l : r.body) { fr.body.push_back(reduct(i, l)); }
        out.rules.push_back(std::move(fr));
    }
    return out;
}

namespace {

// Program compiled against an indexed universe so that stable model search
// runs on bitmasks. Truth under a reduct takes two masks: negative literals
// are frozen at their i-values, positive atoms read from j.
struct CompiledElement {
    std::int64_t weight;
    int atomIdx; // -1 for #false
    int negations;
};

struct CompiledAggregate {
    AggFunc func;
    Cmp cmp = Cmp::Gt;
    std::int64_t bound = 0;
    std::vector<CompiledElement> elems;
};

struct CompiledLiteral {
    bool isAgg;
    CompiledElement prop{};
    CompiledAggregate agg{};
};

struct CompiledRule {
    std::uint32_t headMask = 0;
    bool headNonempty = false;
    std::vector<CompiledLiteral> body;
};

class CompiledProgram {
public:
    CompiledProgram(const Program& p, const std::vector<Atom>& universe) {
        std::map<Atom, int> index;
        for (std::size_t k = 0; k < universe.size(); ++k) {
            index.emplace(universe[k], static_cast<int>(k));
        }
        auto idxOf = [&](const Atom& a) -> int {
            if (a.isFalsity()) { return -1; }
            auto it = index.find(a);
            if (it == index.end()) {
                throw std::invalid_argument("atom outside universe: " + a.name);
            }
            return it->second;
        };
        for (const auto& r : p.rules) {
            CompiledRule cr;
            cr.headNonempty = !r.head.empty();
            for (const auto& h : r.head) { cr.headMask |= 1u << idxOf(h); }
            for (const auto& l : r.body) {
                CompiledLiteral cl;
                if (const auto* pl = std::get_if<PropLiteral>(&l)) {
                    cl.isAgg = false;
                    cl.prop = {0, idxOf(pl->atom), pl->negations};
                } else {
                    const auto& a = std::get<Aggregate>(l);
                    cl.isAgg = true;
                    cl.agg.func = a.func;
                    if (a.cmp) {
                        cl.agg.cmp = *a.cmp;
                        cl.agg.bound = *a.bound;
                    } else {
                        cl.agg.cmp = a.func == AggFunc::Even ? Cmp::Eq : Cmp::Ne;
                    }
                    for (const auto& e : a.elements) {
                        cl.agg.elems.push_back({e.weight, idxOf(e.literal.atom), e.literal.negations});
                    }
                }
                cr.body.push_back(std::move(cl));
            }
            rules_.push_back(std::move(cr));
        }
    }

    bool isModel(std::uint32_t i) const {
        for (const auto& r : rules_) {
            if (bodyTruth(r, i, i) && (r.headMask & i) == 0) { return false; }
        }
        return true;
    }

    // j |= F(i, P), assuming isModel-irrelevant rules filtered by body truth
    // in i.
    bool modelsReduct(std::uint32_t j, std::uint32_t i) const {
        for (const auto& r : rules_) {
            if (!bodyTruth(r, i, i)) { continue; }
            if (bodyTruth(r, i, j) && (r.headMask & j) == 0) { return false; }
        }
        return true;
    }

private:
    std::vector<CompiledRule> rules_;

    static bool elementTruth(const CompiledElement& e, std::uint32_t i, std::uint32_t j) {
        if (e.negations == 0) { return e.atomIdx >= 0 && ((j >> e.atomIdx) & 1u); }
        bool base = e.atomIdx >= 0 && ((i >> e.atomIdx) & 1u);
        return e.negations % 2 == 0 ? base : !base;
    }

    static bool aggTruth(const CompiledAggregate& a, std::uint32_t i, std::uint32_t j) {
        std::int64_t sum = 0;
        std::int64_t count = 0;
        std::optional<std::int64_t> minw;
        std::optional<std::int64_t> maxw;
        for (const auto& e : a.elems) {
            if (!elementTruth(e, i, j)) { continue; }
            ++count;
            sum = checkedAdd(sum, e.weight);
            if (!minw || e.weight < *minw) { minw = e.weight; }
            if (!maxw || e.weight > *maxw) { maxw = e.weight; }
        }
        switch (a.func) {
            case AggFunc::Sum: return cmpHolds(sum, a.cmp, a.bound);
            case AggFunc::Avg: return count >= 1 && cmpHolds(sum, a.cmp, checkedMul(a.bound, count));
            case AggFunc::Min: return minw ? cmpHolds(*minw, a.cmp, a.bound) : cmpInfinity(true, a.cmp);
            case AggFunc::Max:
                return maxw ? cmpHolds(*maxw, a.cmp, a.bound) : cmpInfinity(false, a.cmp);
            case AggFunc::Count: return cmpHolds(count, a.cmp, a.bound);
            case AggFunc::Even: return count % 2 == 0;
            case AggFunc::Odd: return count % 2 == 1;
        }
        return false;
    }

    static bool bodyTruth(const CompiledRule& r, std::uint32_t i, std::uint32_t j) {
        for (const auto& l : r.body) {
            bool t = l.isAgg ? aggTruth(l.agg, i, j) : elementTruth(l.prop, i, j);
            if (!t) { return false; }
        }
        return true;
    }
};

Interpretation fromMask(std::uint32_t mask, const std::vector<Atom>& universe) {
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < universe.size(); ++k) {
        if ((mask >> k) & 1u) { atoms.push_back(universe[k]); }
    }
    return Interpretation(std::move(atoms));
}

} // namespace

std::vector<Interpretation> stableModels(const Program& p, const std::vector<Atom>* universe,
                                         int cap) {
    std::vector<Atom> u = universe ? *universe : p.atoms();
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    checkCap(u.size(), cap, "stable model enumeration");

    CompiledProgram cp(p, u);
    std::vector<Interpretation> out;
    std::uint32_t limit = u.empty() ? 1u : (1u << u.size());
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!cp.isModel(mask)) { continue; }
        bool minimal = true;
        if (mask != 0) {
            for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
                if (cp.modelsReduct(sub, mask)) {
                    minimal = false;
                    break;
                }
                if (sub == 0) { break; }
            }
        }
        if (minimal) { out.push_back(fromMask(mask, u)); }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool equivalent(const Program& p1, const Program& p2, const std::vector<Atom>& v, int cap) {
    auto sm1 = stableModels(p1, nullptr, cap);
    auto sm2 = stableModels(p2, nullptr, cap);
    if (sm1.size() != sm2.size()) { return false; }
    auto project = [&v](const std::vector<Interpretation>& sms) {
        std::set<Interpretation> out;
        for (const auto& i : sms) { out.insert(i.intersect(v)); }
        return out;
    };
    return project(sm1) == project(sm2);
}

std::vector<SEModel> seModels(const std::vector<Literal>& conj, const std::vector<Atom>& universe,
                              int cap) {
    std::vector<Atom> u = universe;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    checkCap(u.size(), cap, "SE-model enumeration");

    std::vector<SEModel> out;
    std::uint32_t limit = u.empty() ? 1u : (1u << u.size());
    for (std::uint32_t imask = 0; imask < limit; ++imask) {
        Interpretation i = fromMask(imask, u);
        bool ok = true;
        for (const auto& l : conj) {
            if (!satisfies(i, l)) {
                ok = false;
                break;
            }
        }
        if (!ok) { continue; }
        std::vector<Literal> frozen;
        for (const auto& l : conj) { frozen.push_back(reduct(i, l)); }
        std::uint32_t sub = imask;
        while (true) {
            Interpretation j = fromMask(sub, u);
            bool jok = true;
            for (const auto& l : frozen) {
                if (!satisfies(j, l)) {
                    jok = false;
                    break;
                }
            }
            if (jok) { out.push_back({std::move(j), i}); }
            if (sub == 0) { break; }
            sub = (sub - 1) & imask;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool stronglyEquivalent(const std::vector<Literal>& c1, const std::vector<Literal>& c2, int cap) {
    std::set<Atom> atoms;
    for (const auto& l : c1) {
        auto as = atomsOfLiteral(l);
        atoms.insert(as.begin(), as.end());
    }
    for (const auto& l : c2) {
        auto as = atomsOfLiteral(l);
        atoms.insert(as.begin(), as.end());
    }
    std::vector<Atom> u(atoms.begin(), atoms.end());
    return seModels(c1, u, cap) == seModels(c2, u, cap);
}

const char* printClass(AggregateClass c) {
    switch (c) {
        case AggregateClass::Monotone: return "MONOTONE";
        case AggregateClass::Convex: return "CONVEX";
        case AggregateClass::Nonconvex: return "NONCONVEX";
    }
    return "?";
}

AggregateClass classify(const Aggregate& a, int cap) {
    std::vector<Atom> u = atomsOfAggregate(a);
    checkCap(u.size(), cap, "aggregate classification");

    bool monotone = true;
    bool convex = true;
    std::uint32_t limit = u.empty() ? 1u : (1u << u.size());
    std::vector<char> sat(limit), downAny(limit), upAny(limit);
    for (std::uint32_t imask = 0; imask < limit; ++imask) {
        Interpretation i = fromMask(imask, u);
        Aggregate frozen = reduct(i, a);
        // Submasks of imask in ascending numeric order.
        std::vector<std::uint32_t> subs;
        std::uint32_t sub = imask;
        while (true) {
            subs.push_back(sub);
            if (sub == 0) { break; }
            sub = (sub - 1) & imask;
        }
        std::reverse(subs.begin(), subs.end());
        for (std::uint32_t m : subs) { sat[m] = satisfies(fromMask(m, u), frozen); }
        // downAny[m]: some subset of m satisfies the frozen aggregate.
        for (std::uint32_t m : subs) {
            char any = sat[m];
            for (std::uint32_t bits = m; bits && !any; bits &= bits - 1) {
                any |= downAny[m ^ (bits & -bits)];
            }
            downAny[m] = any;
        }
        // upAny[m]: some superset of m within imask satisfies it.
        for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
            std::uint32_t m = *it;
            char any = sat[m];
            for (std::uint32_t bits = imask & ~m; bits && !any; bits &= bits - 1) {
                any |= upAny[m | (bits & -bits)];
            }
            upAny[m] = any;
        }
        for (std::uint32_t m : subs) {
            if (sat[m]) { continue; }
            if (downAny[m]) {
                monotone = false;
                if (upAny[m]) { convex = false; }
            }
        }
        if (!convex) { break; }
    }
    if (monotone) { return AggregateClass::Monotone; }
    return convex ? AggregateClass::Convex : AggregateClass::Nonconvex;
}

} // namespace aggrew
