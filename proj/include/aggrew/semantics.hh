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
#ifndef AGGREW_SEMANTICS_HH
#define AGGREW_SEMANTICS_HH

#include <aggrew/ast.hh>

namespace aggrew {

// Brute-force enumeration is capped at this many universe atoms unless a
// caller overrides it.
inline constexpr int kDefaultCap = 22;

// Throws CapExceededError when a brute-force universe exceeds the cap.
void checkCap(std::size_t universe, int cap, const char* what);

// Set of atoms, sorted and duplicate-free; never contains #false.
struct Interpretation {
    std::vector<Atom> atoms;

    Interpretation() = default;
    explicit Interpretation(std::vector<Atom> as);

    bool contains(const Atom& a) const;
    bool subsetOf(const Interpretation& other) const;
    Interpretation intersect(const std::vector<Atom>& v) const;
    Interpretation unionWith(const std::vector<Atom>& v) const;

    auto operator<=>(const Interpretation&) const = default;
};

std::string printInterpretation(const Interpretation& i);

// Pair (here, there) with here <= there.
struct SEModel {
    Interpretation here;
    Interpretation there;

    auto operator<=>(const SEModel&) const = default;
};

bool satisfies(const Interpretation& i, const PropLiteral& l);
bool satisfies(const Interpretation& i, const Aggregate& a);
bool satisfies(const Interpretation& i, const Literal& l);
bool satisfiesBody(const Interpretation& i, const Rule& r);
bool satisfies(const Interpretation& i, const Rule& r);
bool satisfies(const Interpretation& i, const Program& p);

Literal reduct(const Interpretation& i, const Literal& l);
Aggregate reduct(const Interpretation& i, const Aggregate& a);
// Drops rules whose body is false in i and freezes maximal negative literals
// at their i-values.
Program reduct(const Interpretation& i, const Program& p);

std::vector<Interpretation> stableModels(const Program& p,
                                         const std::vector<Atom>* universe = nullptr,
                                         int cap = kDefaultCap);

// P and P' agree on the number of stable models and on their projections to
// the context v.
bool equivalent(const Program& p1, const Program& p2, const std::vector<Atom>& v,
                int cap = kDefaultCap);

std::vector<SEModel> seModels(const std::vector<Literal>& conj, const std::vector<Atom>& universe,
                              int cap = kDefaultCap);

bool stronglyEquivalent(const std::vector<Literal>& c1, const std::vector<Literal>& c2,
                        int cap = kDefaultCap);

enum class AggregateClass { Monotone, Convex, Nonconvex };

const char* printClass(AggregateClass c);

// Classification in program reducts, quantified over the atoms occurring in
// the aggregate; satisfaction is invariant to all other atoms.
AggregateClass classify(const Aggregate& a, int cap = kDefaultCap);

} // namespace aggrew

#endif // AGGREW_SEMANTICS_HH
