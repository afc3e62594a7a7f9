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
#include <aggrew/normalize.hh>

#include <algorithm>

namespace aggrew {

namespace {

Aggregate makeSum(std::vector<WeightedLiteral> elems, Cmp cmp, std::int64_t bound) {
    return Aggregate(AggFunc::Sum, std::move(elems), cmp, bound);
}

std::vector<WeightedLiteral> negatedWeights(const std::vector<WeightedLiteral>& elems) {
    std::vector<WeightedLiteral> out;
    out.reserve(elems.size());
    for (const auto& e : elems) { out.emplace_back(checkedNeg(e.weight), e.literal); }
    return out;
}

void record(NormalizationTrace* trace, char id, const Aggregate& before,
            const std::vector<Aggregate>& after) {
    if (trace) { trace->steps.push_back({id, before, after}); }
}

Cmp flipForMax(Cmp c) {
    switch (c) {
        case Cmp::Lt: return Cmp::Gt;
        case Cmp::Le: return Cmp::Ge;
        case Cmp::Ge: return Cmp::Le;
        case Cmp::Gt: return Cmp::Lt;
        case Cmp::Eq: return Cmp::Eq;
        case Cmp::Ne: return Cmp::Ne;
    }
    return c;
}

std::vector<Aggregate> normalize(const Aggregate& a, NormalizationTrace* trace);

// (A)-(D): sum with comparator other than > or != becomes one or two >-sums.
std::vector<Aggregate> normalizeSum(const Aggregate& a, NormalizationTrace* trace) {
    std::int64_t b = *a.bound;
    switch (*a.cmp) {
        case Cmp::Gt:
        case Cmp::Ne: return {a};
        case Cmp::Lt: {
            std::vector<Aggregate> out = {makeSum(negatedWeights(a.elements), Cmp::Gt, checkedNeg(b))};
            record(trace, 'A', a, out);
            return out;
        }
        case Cmp::Le: {
            std::vector<Aggregate> out = {
                makeSum(negatedWeights(a.elements), Cmp::Gt, checkedSub(checkedNeg(b), 1))};
            record(trace, 'B', a, out);
            return out;
        }
        case Cmp::Ge: {
            std::vector<Aggregate> out = {makeSum(a.elements, Cmp::Gt, checkedSub(b, 1))};
            record(trace, 'C', a, out);
            return out;
        }
        case Cmp::Eq: {
            std::vector<Aggregate> out = {
                makeSum(a.elements, Cmp::Gt, checkedSub(b, 1)),
                makeSum(negatedWeights(a.elements), Cmp::Gt, checkedSub(checkedNeg(b), 1))};
            record(trace, 'D', a, out);
            return out;
        }
    }
    return {a};
}

// (F)-(K): min against each comparator.
std::vector<Aggregate> normalizeMin(const Aggregate& a, NormalizationTrace* trace) {
    std::int64_t b = *a.bound;
    std::int64_t n = static_cast<std::int64_t>(a.elements.size());
    std::vector<WeightedLiteral> elems;
    char id = '?';
    Cmp cmp = Cmp::Gt;
    std::int64_t bound = 0;
    switch (*a.cmp) {
        case Cmp::Lt: // (F)
            id = 'F';
            bound = 0;
            for (const auto& e : a.elements) {
                if (e.weight < b) { elems.emplace_back(1, e.literal); }
            }
            break;
        case Cmp::Le: // (G)
            id = 'G';
            bound = 0;
            for (const auto& e : a.elements) {
                if (e.weight <= b) { elems.emplace_back(1, e.literal); }
            }
            break;
        case Cmp::Ge: // (H)
            id = 'H';
            bound = -1;
            for (const auto& e : a.elements) {
                if (e.weight < b) { elems.emplace_back(-1, e.literal); }
            }
            break;
        case Cmp::Gt: // (I)
            id = 'I';
            bound = -1;
            for (const auto& e : a.elements) {
                if (e.weight <= b) { elems.emplace_back(-1, e.literal); }
            }
            break;
        case Cmp::Eq: // (J): weight 1 - n*(b - w_i) over elements with w_i <= b
            id = 'J';
            bound = 0;
            for (const auto& e : a.elements) {
                if (e.weight <= b) {
                    elems.emplace_back(checkedSub(1, checkedMul(n, checkedSub(b, e.weight))),
                                       e.literal);
                }
            }
            break;
        case Cmp::Ne: // (K): weight n*(b - w_i) - 1 over elements with w_i <= b
            id = 'K';
            bound = -1;
            for (const auto& e : a.elements) {
                if (e.weight <= b) {
                    elems.emplace_back(checkedSub(checkedMul(n, checkedSub(b, e.weight)), 1),
                                       e.literal);
                }
            }
            break;
    }
    std::vector<Aggregate> out = {makeSum(std::move(elems), cmp, bound)};
    record(trace, id, a, out);
    return out;
}

std::vector<Aggregate> normalize(const Aggregate& a, NormalizationTrace* trace) {
    switch (a.func) {
        case AggFunc::Sum: return normalizeSum(a, trace);
        case AggFunc::Min: {
            auto out = normalizeMin(a, trace);
            // (J)'s weights may turn out nonpositive only; the result is
            // already a >-sum either way.
            return out;
        }
        case AggFunc::Max: {
            // (L): max to min with negated weights, flipped comparator, and
            // negated bound.
            Aggregate asMin(AggFunc::Min, negatedWeights(a.elements), flipForMax(*a.cmp),
                            checkedNeg(*a.bound));
            record(trace, 'L', a, {asMin});
            return normalize(asMin, trace);
        }
        case AggFunc::Count: {
            // (M): unit-weight sum.
            Aggregate asSum = makeSum(a.elements, *a.cmp, *a.bound);
            record(trace, 'M', a, {asSum});
            return normalize(asSum, trace);
        }
        case AggFunc::Avg: {
            // (E): shifted sum against 0 plus a nonemptiness sum.
            std::vector<WeightedLiteral> shifted;
            for (const auto& e : a.elements) {
                shifted.emplace_back(checkedSub(e.weight, *a.bound), e.literal);
            }
            std::vector<WeightedLiteral> units;
            for (const auto& e : a.elements) { units.emplace_back(1, e.literal); }
            Aggregate first = makeSum(std::move(shifted), *a.cmp, 0);
            Aggregate nonempty = makeSum(std::move(units), Cmp::Gt, 0);
            record(trace, 'E', a, {first, nonempty});
            std::vector<Aggregate> out = normalize(first, trace);
            out.push_back(std::move(nonempty));
            return out;
        }
        case AggFunc::Even: {
            // (N): one !=-sum per odd cardinality up to n.
            std::int64_t n = static_cast<std::int64_t>(a.elements.size());
            std::vector<WeightedLiteral> units;
            for (const auto& e : a.elements) { units.emplace_back(1, e.literal); }
            std::vector<Aggregate> out;
            for (std::int64_t i = 1; i <= (n + 1) / 2; ++i) {
                out.push_back(makeSum(units, Cmp::Ne, 2 * i - 1));
            }
            record(trace, 'N', a, out);
            return out;
        }
        case AggFunc::Odd: {
            // (O): one !=-sum per even cardinality up to n.
            std::int64_t n = static_cast<std::int64_t>(a.elements.size());
            std::vector<WeightedLiteral> units;
            for (const auto& e : a.elements) { units.emplace_back(1, e.literal); }
            std::vector<Aggregate> out;
            for (std::int64_t i = 0; i <= n / 2; ++i) {
                out.push_back(makeSum(units, Cmp::Ne, 2 * i));
            }
            record(trace, 'O', a, out);
            return out;
        }
    }
    return {a};
}

} // namespace

bool isNormalizedSum(const Aggregate& a) {
    return a.func == AggFunc::Sum && a.cmp && (*a.cmp == Cmp::Gt || *a.cmp == Cmp::Ne);
}

std::vector<Aggregate> normalizeAggregate(const Aggregate& a, NormalizationTrace* trace) {
    return normalize(a, trace);
}

std::pair<Program, std::vector<NormalizationTrace>> normalizeProgram(const Program& p) {
    Program out;
    std::vector<NormalizationTrace> traces;
    for (const auto& r : p.rules) {
        Rule nr;
        nr.head = r.head;
        nr.headHadFalsity = r.headHadFalsity;
        for (const auto& l : r.body) {
            if (const auto* a = std::get_if<Aggregate>(&l)) {
                NormalizationTrace trace;
                for (auto& conj : normalizeAggregate(*a, &trace)) {
                    nr.body.emplace_back(std::move(conj));
                }
                traces.push_back(std::move(trace));
            } else {
                nr.body.push_back(l);
            }
        }
        out.rules.push_back(std::move(nr));
    }
    return {std::move(out), std::move(traces)};
}

Aggregate simplifyMerged(const Aggregate& a) {
    if (!isNormalizedSum(a)) {
        throw std::invalid_argument("simplifyMerged expects a normalized sum");
    }
    std::int64_t bound = *a.bound;
    // First-occurrence order keeps the output deterministic.
    std::vector<PropLiteral> order;
    std::vector<std::int64_t> totals;
    for (const auto& e : a.elements) {
        if (e.literal.atom.isFalsity()) {
            if (e.literal.negations % 2 == 1) {
                // Always true (also in reducts): shift into the bound.
                bound = checkedSub(bound, e.weight);
            }
            // Even negations on #false are never satisfied: drop.
            continue;
        }
        auto it = std::find(order.begin(), order.end(), e.literal);
        if (it == order.end()) {
            order.push_back(e.literal);
            totals.push_back(e.weight);
        } else {
            totals[static_cast<std::size_t>(it - order.begin())] =
                checkedAdd(totals[static_cast<std::size_t>(it - order.begin())], e.weight);
        }
    }
    std::vector<WeightedLiteral> elems;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (totals[k] != 0) { elems.emplace_back(totals[k], order[k]); }
    }
    return makeSum(std::move(elems), *a.cmp, bound);
}

Program simplifyProgram(const Program& p) {
    Program out;
    for (const auto& r : p.rules) {
        Rule nr;
        nr.head = r.head;
        nr.headHadFalsity = r.headHadFalsity;
        for (const auto& l : r.body) {
            if (const auto* a = std::get_if<Aggregate>(&l)) {
                nr.body.emplace_back(simplifyMerged(*a));
            } else {
                nr.body.push_back(l);
            }
        }
        out.rules.push_back(std::move(nr));
    }
    return out;
}

} // namespace aggrew
