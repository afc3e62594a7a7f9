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
#ifndef AGGREW_NORMALIZE_HH
#define AGGREW_NORMALIZE_HH

#include <aggrew/ast.hh>

#include <utility>

namespace aggrew {

// One applied identity: which rule fired (A..O), on what, and the conjuncts
// it produced.
struct NormStep {
    char ruleId;
    Aggregate before;
    std::vector<Aggregate> after;
};

struct NormalizationTrace {
    std::vector<NormStep> steps;
};

// Maps any aggregate to a strongly equivalent conjunction of sum aggregates
// whose comparator is > or !=.
std::vector<Aggregate> normalizeAggregate(const Aggregate& a, NormalizationTrace* trace = nullptr);

// Replaces every body aggregate by its normalized conjunction, splicing the
// conjuncts in place; rule count is unchanged.
std::pair<Program, std::vector<NormalizationTrace>> normalizeProgram(const Program& p);

// Merges duplicate literals by summing weights, drops zero totals, and folds
// constant #false-rooted literals away (into the bound for the always-true
// ones). Input must be a normalized sum; idempotent.
Aggregate simplifyMerged(const Aggregate& a);

// simplifyMerged over every body aggregate of an already normalized program.
Program simplifyProgram(const Program& p);

bool isNormalizedSum(const Aggregate& a);

} // namespace aggrew

#endif // AGGREW_NORMALIZE_HH
