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
#ifndef AGGREW_REWRITE_HH
#define AGGREW_REWRITE_HH

#include <aggrew/ast.hh>
#include <aggrew/semantics.hh>

#include <map>

namespace aggrew {

// Merged-weight view of a normalized sum: one entry per distinct literal,
// zero totals and #false-rooted literals removed. litStar is the disjoint
// union of litPos (positive totals) and litNeg (negative totals).
struct NormalizedSum {
    Aggregate source;
    std::vector<WeightedLiteral> litStar;
    std::vector<WeightedLiteral> litPos;
    std::vector<WeightedLiteral> litNeg;
    Cmp cmp = Cmp::Gt;
    std::int64_t bound = 0;
};

NormalizedSum normalizedView(const Aggregate& a);

// Syntactic test: some plain atom carries a negative merged weight, or the
// comparator is !=. Deliberately ignores semantic special cases.
bool isNonmonotone(const NormalizedSum& v);

// Supplier of fresh atoms, with provenance. Names use the reserved "__"
// prefix, so they cannot collide with parsed user atoms.
class FreshNames {
public:
    Atom makeAux();
    Atom makeFalsityWitness(const Atom& p);

    const std::vector<Atom>& allocated() const { return allocated_; }
    static bool isReservedName(const std::string& name);

private:
    int counter_ = 0;
    std::vector<Atom> allocated_;
};

// Bookkeeping for one eliminated aggregate: its aux atom, the saturation set
// V, the p -> p^F map (At^F(A,V)), and the emitted saturation subprogram.
struct AggregateRewrite {
    Aggregate aggregate;
    Atom aux;
    std::vector<Atom> saturation;
    std::map<Atom, Atom> falsityWitness;
    std::vector<Rule> posRules;

    std::vector<Atom> hiddenAtoms() const;
};

struct RewriteOutput {
    Program program;
    std::vector<Atom> hidden;
    std::vector<AggregateRewrite> records;
};

// Saturation subprogram for a >-sum: the monotone aux rule plus the three
// saturation rules per negatively weighted atom of V.
std::vector<Rule> posGt(const NormalizedSum& v, const std::vector<Atom>& saturate,
                        FreshNames& names);

// Splits a !=-sum into its > half and its negated-weights > half.
std::pair<NormalizedSum, NormalizedSum> splitNeq(const NormalizedSum& v);

// Saturation subprogram for any normalized sum; the != case emits both
// halves sharing one aux and one falsity witness per atom.
AggregateRewrite posProgram(const Aggregate& a, const std::vector<Atom>& v, FreshNames& names);

// Union of the saturation subprogram and p with every occurrence of a
// replaced by the aux atom.
RewriteOutput rew(const Program& p, const Aggregate& a, const std::vector<Atom>& v,
                  FreshNames& names);

enum class RewriteMode { Modular, Refined };

// Full pipeline over a normalized, merged program: eliminates every sum that
// carries a negative merged weight or compares with !=. Modular mode
// saturates all atoms of the aggregate; refined mode recomputes the
// dependency graph and saturates only the aggregate's component.
RewriteOutput rewriteProgram(const Program& p, RewriteMode mode);

// Turns every remaining >-sum into >= b+1; trivially satisfied aggregates
// (b+1 <= 0) become the always-true literal ~#false.
RewriteOutput finalizeLparse(RewriteOutput ro);

// ext(J, I): the three-case extension of J relative to I with the aux and
// falsity-witness atoms of rw.
Interpretation ext(const Interpretation& j, const Interpretation& i, const AggregateRewrite& rw);

} // namespace aggrew

#endif // AGGREW_REWRITE_HH
