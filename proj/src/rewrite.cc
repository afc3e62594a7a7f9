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
#include <aggrew/rewrite.hh>

#include <aggrew/depgraph.hh>
#include <aggrew/normalize.hh>

#include <algorithm>
#include <functional>

namespace aggrew {

NormalizedSum normalizedView(const Aggregate& a) {
    if (!isNormalizedSum(a)) {
        throw std::invalid_argument("normalized view requires a sum with > or !=");
    }
    NormalizedSum v;
    v.source = a;
    v.cmp = *a.cmp;
    v.bound = *a.bound;
    // Merge weights per literal in first-occurrence order; the plain #false
    // literal is not part of Lit(A).
    std::vector<PropLiteral> order;
    std::vector<std::int64_t> totals;
    for (const auto& e : a.elements) {
        if (e.literal.atom.isFalsity() && e.literal.negations == 0) { continue; }
        auto it = std::find(order.begin(), order.end(), e.literal);
        if (it == order.end()) {
            order.push_back(e.literal);
            totals.push_back(e.weight);
        } else {
            auto k = static_cast<std::size_t>(it - order.begin());
            totals[k] = checkedAdd(totals[k], e.weight);
        }
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (totals[k] == 0) { continue; }
        WeightedLiteral wl(totals[k], order[k]);
        v.litStar.push_back(wl);
        (totals[k] > 0 ? v.litPos : v.litNeg).push_back(wl);
    }
    return v;
}

bool isNonmonotone(const NormalizedSum& v) {
    if (v.cmp == Cmp::Ne) { return true; }
    return std::any_of(v.litNeg.begin(), v.litNeg.end(),
                       [](const WeightedLiteral& e) { return e.literal.isPositiveAtom(); });
}

Atom FreshNames::makeAux() {
    Atom a("__aux_" + std::to_string(counter_++));
    allocated_.push_back(a);
    return a;
}

Atom FreshNames::makeFalsityWitness(const Atom& p) {
    Atom a("__f_" + std::to_string(counter_++) + "_" + p.name);
    allocated_.push_back(a);
    return a;
}

bool FreshNames::isReservedName(const std::string& name) { return name.rfind("__", 0) == 0; }

std::vector<Atom> AggregateRewrite::hiddenAtoms() const {
    std::vector<Atom> out = {aux};
    for (const auto& [p, pf] : falsityWitness) { out.push_back(pf); }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using WitnessFn = std::function<Atom(const Atom&)>;

// Rule (aux <- sum(...) > b') with every negative weight eliminated: atoms of
// V become falsity witnesses, everything else is negated, and the bound
// compensates the dropped negative total.
Rule auxRule(const NormalizedSum& v, const std::vector<Atom>& saturate, const Atom& aux,
             const WitnessFn& witness) {
    std::vector<WeightedLiteral> elems = v.litPos;
    std::int64_t bound = v.bound;
    for (const auto& e : v.litNeg) {
        bound = checkedSub(bound, e.weight);
        if (e.literal.isPositiveAtom() &&
            std::binary_search(saturate.begin(), saturate.end(), e.literal.atom)) {
            elems.emplace_back(checkedNeg(e.weight), PropLiteral(witness(e.literal.atom)));
        } else {
            elems.emplace_back(checkedNeg(e.weight), e.literal.negated());
        }
    }
    return Rule::make({aux}, {Literal(Aggregate(AggFunc::Sum, std::move(elems), Cmp::Gt, bound))});
}

std::vector<Atom> sortedSet(std::vector<Atom> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::pair<NormalizedSum, NormalizedSum> splitNeq(const NormalizedSum& v) {
    if (v.cmp != Cmp::Ne) { throw std::invalid_argument("splitNeq requires comparator !="); }
    Aggregate gt(AggFunc::Sum, v.litStar, Cmp::Gt, v.bound);
    std::vector<WeightedLiteral> negated;
    for (const auto& e : v.litStar) { negated.emplace_back(checkedNeg(e.weight), e.literal); }
    Aggregate lt(AggFunc::Sum, std::move(negated), Cmp::Gt, checkedNeg(v.bound));
    return {normalizedView(gt), normalizedView(lt)};
}

AggregateRewrite posProgram(const Aggregate& a, const std::vector<Atom>& v, FreshNames& names) {
    NormalizedSum view = normalizedView(a);
    AggregateRewrite rw;
    rw.aggregate = a;
    rw.saturation = sortedSet(v);
    rw.aux = names.makeAux();

    WitnessFn witness = [&](const Atom& p) {
        auto it = rw.falsityWitness.find(p);
        if (it == rw.falsityWitness.end()) {
            it = rw.falsityWitness.emplace(p, names.makeFalsityWitness(p)).first;
        }
        return it->second;
    };

    if (view.cmp == Cmp::Gt) {
        rw.posRules.push_back(auxRule(view, rw.saturation, rw.aux, witness));
    } else {
        auto [gt, lt] = splitNeq(view);
        rw.posRules.push_back(auxRule(gt, rw.saturation, rw.aux, witness));
        Rule other = auxRule(lt, rw.saturation, rw.aux, witness);
        // The two halves coincide exactly when the merged sum is empty.
        if (!(other == rw.posRules.back())) { rw.posRules.push_back(std::move(other)); }
    }
    // Saturation triple, once per witnessed atom.
    for (const auto& [p, pf] : rw.falsityWitness) {
        rw.posRules.push_back(Rule::make({pf}, {Literal(PropLiteral(p, 1))}));
        rw.posRules.push_back(Rule::make({pf}, {Literal(PropLiteral(rw.aux))}));
        rw.posRules.push_back(Rule::make({p, pf}, {Literal(PropLiteral(rw.aux, 2))}));
    }
    return rw;
}

std::vector<Rule> posGt(const NormalizedSum& v, const std::vector<Atom>& saturate,
                        FreshNames& names) {
    if (v.cmp != Cmp::Gt) { throw std::invalid_argument("posGt requires comparator >"); }
    return posProgram(v.source, saturate, names).posRules;
}

RewriteOutput rew(const Program& p, const Aggregate& a, const std::vector<Atom>& v,
                  FreshNames& names) {
    AggregateRewrite record = posProgram(a, v, names);
    RewriteOutput out;
    for (const auto& r : p.rules) {
        Rule nr;
        nr.head = r.head;
        nr.headHadFalsity = r.headHadFalsity;
        for (const auto& l : r.body) {
            const auto* agg = std::get_if<Aggregate>(&l);
            if (agg && *agg == a) {
                nr.body.emplace_back(PropLiteral(record.aux));
            } else {
                nr.body.push_back(l);
            }
        }
        out.program.rules.push_back(std::move(nr));
    }
    out.program.rules.insert(out.program.rules.end(), record.posRules.begin(),
                             record.posRules.end());
    out.hidden = record.hiddenAtoms();
    out.records.push_back(std::move(record));
    return out;
}

RewriteOutput rewriteProgram(const Program& p, RewriteMode mode) {
    RewriteOutput out;
    out.program = p;
    FreshNames names;
    // Aggregates introduced by the rewriting itself are monotone >-sums, so
    // every pass only shrinks the set of candidates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : out.program.aggregates()) {
            NormalizedSum view = normalizedView(a);
            // Negative weights on negated literals keep the aggregate
            // reduct-monotone but still block the lparse form, so they get
            // the same elimination.
            bool needsRewrite = view.cmp == Cmp::Ne || !view.litNeg.empty();
            if (!needsRewrite) { continue; }
            std::vector<Atom> v = mode == RewriteMode::Modular
                                      ? atomsOfAggregate(a)
                                      : recAtoms(buildGraph(out.program), a);
            RewriteOutput step = rew(out.program, a, v, names);
            out.program = std::move(step.program);
            out.hidden.insert(out.hidden.end(), step.hidden.begin(), step.hidden.end());
            out.records.push_back(std::move(step.records.front()));
            changed = true;
            break;
        }
    }
    std::sort(out.hidden.begin(), out.hidden.end());
    return out;
}

RewriteOutput finalizeLparse(RewriteOutput ro) {
    for (auto& r : ro.program.rules) {
        for (auto& l : r.body) {
            auto* a = std::get_if<Aggregate>(&l);
            if (!a) { continue; }
            if (a->func != AggFunc::Sum || *a->cmp != Cmp::Gt) {
                throw std::invalid_argument("finalizeLparse expects only >-sums");
            }
            for (const auto& e : a->elements) {
                if (e.weight <= 0) {
                    throw std::invalid_argument("finalizeLparse expects positive weights");
                }
            }
            std::int64_t bound = checkedAdd(*a->bound, 1);
            if (bound <= 0) {
                l = PropLiteral::top();
            } else {
                a->cmp = Cmp::Ge;
                a->bound = bound;
            }
        }
    }
    return ro;
}

Interpretation ext(const Interpretation& j, const Interpretation& i, const AggregateRewrite& rw) {
    if (!j.subsetOf(i)) { throw std::invalid_argument("ext requires j to be a subset of i"); }
    if (i.contains(rw.aux)) { throw std::invalid_argument("i must not contain the aux atom"); }
    for (const auto& [p, pf] : rw.falsityWitness) {
        if (i.contains(pf)) { throw std::invalid_argument("i must not contain falsity witnesses"); }
    }

    auto witnessesOfAbsent = [&](const Interpretation& ref) {
        std::vector<Atom> out;
        for (const auto& [p, pf] : rw.falsityWitness) {
            if (!ref.contains(p)) { out.push_back(pf); }
        }
        return out;
    };

    if (!satisfies(i, rw.aggregate)) { return j.unionWith(witnessesOfAbsent(i)); }
    if (!satisfies(j, reduct(i, rw.aggregate))) { return j.unionWith(witnessesOfAbsent(j)); }
    std::vector<Atom> add = {rw.aux};
    for (const auto& [p, pf] : rw.falsityWitness) { add.push_back(pf); }
    return j.unionWith(add);
}

} // namespace aggrew
