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
#ifndef AGGREW_GENERATE_HH
#define AGGREW_GENERATE_HH

#include <aggrew/ast.hh>
#include <aggrew/semantics.hh>

#include <functional>
#include <optional>
#include <random>
#include <string>

namespace aggrew {

struct FuzzConfig {
    int atomCount = 5;
    int ruleCount = 6;
    int maxAggregateElements = 4;
    int weightRange = 3; // weights drawn from [-weightRange, weightRange]
    int boundRange = 6;  // bounds drawn from [-boundRange, boundRange]
    int iterations = 100;
    std::uint64_t seed = 1;
    int cap = kDefaultCap;
};

// Deterministic per-iteration generator state derived from the base seed.
std::mt19937_64 iterationRng(std::uint64_t seed, int iteration);

Aggregate randomAggregate(std::mt19937_64& rng, const std::vector<Atom>& atoms, int maxElements,
                          int weightRange, int boundRange);

// Uniform mix of facts, normal rules, constraints, and <=2-atom disjunctive
// heads; at most two aggregate literals per program.
Program randomProgram(const FuzzConfig& c, std::mt19937_64& rng);

struct FuzzFailure {
    std::string check;
    Program program;
};

// All soundness checks on one program: per-aggregate normalization strong
// equivalence, faithfulness of both rewrite modes, lparse-likeness of the
// finalized output, fresh-atom hygiene, and the component property on every
// (i, j) pair meeting its preconditions.
std::optional<FuzzFailure> checkProgram(const Program& p, int cap = kDefaultCap);

// Greedy minimization: rule removal, then aggregate-element removal, then
// weight/bound shrink toward zero; keeps any step on which fails() stays true.
Program shrinkProgram(Program p, const std::function<bool(const Program&)>& fails);

struct FuzzResult {
    int iterationsRun = 0;
    std::optional<FuzzFailure> failure; // program already shrunk
    int failingIteration = -1;
};

FuzzResult runFuzz(const FuzzConfig& c);

// Generalized-Subset-Sum encoding: one choice atom x_i per u weight, one
// universally constrained atom y_j per v weight, and the inequality test.
Program gssProgram(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v,
                   std::int64_t b);

// All (i, j) pairs with i a model of p, j a strict subset of i, and j a model
// of the reduct of p by i.
std::vector<std::pair<Interpretation, Interpretation>> componentPairs(const Program& p,
                                                                      int cap = kDefaultCap);

} // namespace aggrew

#endif // AGGREW_GENERATE_HH
