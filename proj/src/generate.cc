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
#include <aggrew/generate.hh>

#include <aggrew/depgraph.hh>
#include <aggrew/normalize.hh>
#include <aggrew/rewrite.hh>

#include <algorithm>
#include <cstdlib>

namespace aggrew {

std::mt19937_64 iterationRng(std::uint64_t seed, int iteration) {
    // Golden-ratio stride decorrelates consecutive iterations while keeping
    // each one reproducible in isolation.
    return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL +
                           static_cast<std::uint64_t>(iteration) + 1);
}

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PropLiteral randomPropLiteral(std::mt19937_64& rng, const std::vector<Atom>& atoms) {
    const Atom& a = atoms[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(atoms.size()) - 1))];
    int roll = pick(rng, 0, 99);
    int negs = roll < 50 ? 0 : roll < 85 ? 1 : 2;
    return PropLiteral(a, negs);
}

} // namespace

Aggregate randomAggregate(std::mt19937_64& rng, const std::vector<Atom>& atoms, int maxElements,
                          int weightRange, int boundRange) {
    auto func = static_cast<AggFunc>(pick(rng, 0, 6));
    bool unitWeights =
        func == AggFunc::Count || func == AggFunc::Even || func == AggFunc::Odd;
    int n = pick(rng, 1, maxElements);
    std::vector<WeightedLiteral> elems;
    for (int k = 0; k < n; ++k) {
        std::int64_t w = unitWeights ? 1 : pick(rng, -weightRange, weightRange);
        elems.emplace_back(w, randomPropLiteral(rng, atoms));
    }
    if (func == AggFunc::Even || func == AggFunc::Odd) {
        return Aggregate(func, std::move(elems), std::nullopt, std::nullopt);
    }
    auto cmp = static_cast<Cmp>(pick(rng, 0, 5));
    std::int64_t bound = pick(rng, -boundRange, boundRange);
    return Aggregate(func, std::move(elems), cmp, bound);
}

namespace {

// The brute-force oracle enumerates the rewritten program's universe, so a
// candidate only enters the corpus if both rewrite modes stay within the cap.
bool withinCap(const Program& p, int cap) {
    try {
        Program np = simplifyProgram(normalizeProgram(p).first);
        for (RewriteMode mode : {RewriteMode::Modular, RewriteMode::Refined}) {
            if (static_cast<int>(rewriteProgram(np, mode).program.atoms().size()) > cap) {
                return false;
            }
        }
    } catch (const OverflowError&) {
        return false;
    }
    return true;
}

Program randomProgramOnce(const FuzzConfig& c, std::mt19937_64& rng) {
    std::vector<Atom> atoms;
    for (int k = 1; k <= c.atomCount; ++k) { atoms.emplace_back("a" + std::to_string(k)); }

    Program p;
    int aggregateBudget = 2;
    int nRules = pick(rng, 1, c.ruleCount);
    for (int r = 0; r < nRules; ++r) {
        std::vector<Atom> head;
        int headRoll = pick(rng, 0, 99);
        if (headRoll >= 10) {
            head.push_back(atoms[static_cast<std::size_t>(pick(rng, 0, c.atomCount - 1))]);
            if (headRoll >= 80) {
                head.push_back(atoms[static_cast<std::size_t>(pick(rng, 0, c.atomCount - 1))]);
            }
        }
        std::vector<Literal> body;
        int nBody = pick(rng, 0, 3);
        for (int k = 0; k < nBody; ++k) {
            if (aggregateBudget > 0 && pick(rng, 0, 99) < 30) {
                --aggregateBudget;
                body.emplace_back(randomAggregate(rng, atoms, c.maxAggregateElements,
                                                  c.weightRange, c.boundRange));
            } else {
                body.emplace_back(randomPropLiteral(rng, atoms));
            }
        }
        p.rules.push_back(Rule::make(std::move(head), std::move(body)));
    }
    return p;
}

} // namespace

Program randomProgram(const FuzzConfig& c, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Program p = randomProgramOnce(c, rng);
        if (withinCap(p, c.cap)) { return p; }
    }
    throw CapExceededError("random program generation cannot fit the oracle cap");
}

std::vector<std::pair<Interpretation, Interpretation>> componentPairs(const Program& p, int cap) {
    std::vector<Atom> u = p.atoms();
    checkCap(u.size(), cap, "component-pair enumeration");
    std::vector<std::pair<Interpretation, Interpretation>> out;
    std::uint32_t limit = u.empty() ? 1u : (1u << u.size());
    for (std::uint32_t imask = 1; imask < limit; ++imask) {
        std::vector<Atom> ia;
        for (std::size_t k = 0; k < u.size(); ++k) {
            if ((imask >> k) & 1u) { ia.push_back(u[k]); }
        }
        Interpretation i(std::move(ia));
        if (!satisfies(i, p)) { continue; }
        Program red = reduct(i, p);
        for (std::uint32_t sub = (imask - 1) & imask;; sub = (sub - 1) & imask) {
            std::vector<Atom> ja;
            for (std::size_t k = 0; k < u.size(); ++k) {
                if ((sub >> k) & 1u) { ja.push_back(u[k]); }
            }
            Interpretation j(std::move(ja));
            if (satisfies(j, red)) { out.emplace_back(i, std::move(j)); }
            if (sub == 0) { break; }
        }
    }
    return out;
}

std::optional<FuzzFailure> checkProgram(const Program& p, int cap) {
    // Normalization preserves strong equivalence, aggregate by aggregate.
    for (const auto& a : p.aggregates()) {
        std::vector<Literal> conj;
        for (auto& part : normalizeAggregate(a)) { conj.emplace_back(std::move(part)); }
        if (!stronglyEquivalent({Literal(a)}, conj, cap)) {
            return FuzzFailure{"normalize-strong-equivalence", p};
        }
    }

    Program np = simplifyProgram(normalizeProgram(p).first);
    std::vector<Atom> visible = p.atoms();
    for (RewriteMode mode : {RewriteMode::Modular, RewriteMode::Refined}) {
        const char* tag = mode == RewriteMode::Modular ? "modular" : "refined";
        RewriteOutput ro = rewriteProgram(np, mode);
        for (const auto& h : ro.hidden) {
            if (std::binary_search(visible.begin(), visible.end(), h)) {
                return FuzzFailure{std::string("fresh-atom-hygiene-") + tag, p};
            }
        }
        if (!equivalent(p, ro.program, visible, cap)) {
            return FuzzFailure{std::string("faithfulness-") + tag, p};
        }
        RewriteOutput fin = finalizeLparse(std::move(ro));
        for (const auto& a : fin.program.aggregates()) {
            bool shape = a.func == AggFunc::Sum && a.cmp == Cmp::Ge && a.bound && *a.bound >= 1 &&
                         std::all_of(a.elements.begin(), a.elements.end(),
                                     [](const WeightedLiteral& e) { return e.weight >= 0; }) &&
                         classify(a, cap) == AggregateClass::Monotone;
            if (!shape) { return FuzzFailure{std::string("lparse-likeness-") + tag, p}; }
        }
        if (!equivalent(p, fin.program, visible, cap)) {
            return FuzzFailure{std::string("faithfulness-finalized-") + tag, p};
        }
    }

    for (const auto& [i, j] : componentPairs(p, cap)) {
        if (!findWitnessComponent(p, i, j)) { return FuzzFailure{"component-property", p}; }
    }
    return std::nullopt;
}

namespace {

bool failsSafely(const std::function<bool(const Program&)>& fails, const Program& p) {
    try {
        return fails(p);
    } catch (const std::exception&) {
        // A shrink candidate that errors out is not a reproducer.
        return false;
    }
}

} // namespace

Program shrinkProgram(Program p, const std::function<bool(const Program&)>& fails) {
    bool progress = true;
    while (progress) {
        progress = false;
        // Pass 1: drop whole rules.
        for (std::size_t r = 0; r < p.rules.size(); ++r) {
            Program cand = p;
            cand.rules.erase(cand.rules.begin() + static_cast<std::ptrdiff_t>(r));
            if (failsSafely(fails, cand)) {
                p = std::move(cand);
                progress = true;
                break;
            }
        }
        if (progress) { continue; }
        // Pass 2: drop aggregate elements.
        for (std::size_t r = 0; r < p.rules.size() && !progress; ++r) {
            for (std::size_t l = 0; l < p.rules[r].body.size() && !progress; ++l) {
                const auto* a = std::get_if<Aggregate>(&p.rules[r].body[l]);
                if (!a) { continue; }
                for (std::size_t e = 0; e < a->elements.size(); ++e) {
                    Program cand = p;
                    auto& ca = std::get<Aggregate>(cand.rules[r].body[l]);
                    ca.elements.erase(ca.elements.begin() + static_cast<std::ptrdiff_t>(e));
                    if (failsSafely(fails, cand)) {
                        p = std::move(cand);
                        progress = true;
                        break;
                    }
                }
            }
        }
        if (progress) { continue; }
        // Pass 3: move weights and bounds one notch toward zero.
        for (std::size_t r = 0; r < p.rules.size() && !progress; ++r) {
            for (std::size_t l = 0; l < p.rules[r].body.size() && !progress; ++l) {
                const auto* a = std::get_if<Aggregate>(&p.rules[r].body[l]);
                if (!a) { continue; }
                bool unitWeights = a->func == AggFunc::Count || a->func == AggFunc::Even ||
                                   a->func == AggFunc::Odd;
                for (std::size_t e = 0; e < a->elements.size() && !progress; ++e) {
                    std::int64_t w = a->elements[e].weight;
                    if (unitWeights || w == 0) { continue; }
                    for (std::int64_t cw : {std::int64_t{0}, w / 2, w - (w > 0 ? 1 : -1)}) {
                        if (cw == w) { continue; }
                        Program cand = p;
                        std::get<Aggregate>(cand.rules[r].body[l]).elements[e].weight = cw;
                        if (failsSafely(fails, cand)) {
                            p = std::move(cand);
                            progress = true;
                            break;
                        }
                    }
                }
                if (progress || !a->bound || *a->bound == 0) { continue; }
                std::int64_t b = *a->bound;
                for (std::int64_t cb : {std::int64_t{0}, b / 2, b - (b > 0 ? 1 : -1)}) {
                    if (cb == b) { continue; }
                    Program cand = p;
                    std::get<Aggregate>(cand.rules[r].body[l]).bound = cb;
                    if (failsSafely(fails, cand)) {
                        p = std::move(cand);
                        progress = true;
                        break;
                    }
                }
            }
        }
    }
    return p;
}

FuzzResult runFuzz(const FuzzConfig& c) {
    FuzzResult result;
    for (int iter = 0; iter < c.iterations; ++iter) {
        std::mt19937_64 rng = iterationRng(c.seed, iter);
        Program p = randomProgram(c, rng);
        std::optional<FuzzFailure> failure = checkProgram(p, c.cap);
        ++result.iterationsRun;
        if (failure) {
            std::string check = failure->check;
            auto stillFails = [&](const Program& cand) {
                auto f = checkProgram(cand, c.cap);
                return f && f->check == check;
            };
            failure->program = shrinkProgram(failure->program, stillFails);
            result.failure = std::move(failure);
            result.failingIteration = iter;
            return result;
        }
    }
    return result;
}

Program gssProgram(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v,
                   std::int64_t b) {
    if (u.empty() || v.empty()) {
        throw std::invalid_argument("gss requires nonempty weight lists");
    }
    std::int64_t magnitude = 0;
    for (std::int64_t w : u) { magnitude = checkedAdd(magnitude, w < 0 ? checkedNeg(w) : w); }
    for (std::int64_t w : v) { magnitude = checkedAdd(magnitude, w < 0 ? checkedNeg(w) : w); }
    (void)magnitude;

    Atom unequal("unequal");
    Program p;
    std::vector<WeightedLiteral> elems;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Atom xi("x" + std::to_string(i + 1));
        p.rules.push_back(Rule::make({xi}, {Literal(PropLiteral(xi, 2))}));
        elems.emplace_back(u[i], PropLiteral(xi));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        Atom yj("y" + std::to_string(j + 1));
        p.rules.push_back(Rule::make({yj}, {Literal(PropLiteral(unequal))}));
        elems.emplace_back(v[j], PropLiteral(yj));
    }
    p.rules.push_back(Rule::make({}, {Literal(PropLiteral(unequal, 1))}));
    p.rules.push_back(
        Rule::make({unequal}, {Literal(Aggregate(AggFunc::Sum, std::move(elems), Cmp::Ne, b))}));
    return p;
}

} // namespace aggrew
