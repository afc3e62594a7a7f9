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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <aggrew/depgraph.hh>
#include <aggrew/generate.hh>
#include <aggrew/normalize.hh>
#include <aggrew/rewrite.hh>
#include <aggrew/textio.hh>

#include <algorithm>

using namespace aggrew;

namespace {

Program prog(const std::string& text) { return parseProgram(text, ParseOptions{true}); }

Aggregate agg(const std::string& text) {
    return std::get<Aggregate>(prog("a0 :- " + text + ".").rules[0].body[0]);
}

Interpretation interp(const std::vector<std::string>& names) {
    std::vector<Atom> atoms;
    for (const auto& n : names) { atoms.emplace_back(n); }
    return Interpretation(std::move(atoms));
}

std::vector<Atom> atomSet(const std::vector<std::string>& names) {
    std::vector<Atom> atoms;
    for (const auto& n : names) { atoms.emplace_back(n); }
    return atoms;
}

// Substitutes NAME placeholders, then parses; lets expected programs be
// written against the listings while using the actually allocated fresh
// names.
Program expect(std::string text, const std::vector<std::pair<std::string, std::string>>& subst) {
    for (const auto& [from, to] : subst) {
        for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from)) {
            text.replace(pos, from.size(), to);
        }
    }
    return prog(text);
}

bool sameRuleSet(Program a, Program b) {
    std::sort(a.rules.begin(), a.rules.end());
    std::sort(b.rules.begin(), b.rules.end());
    return a == b;
}

const char* kPi3 =
    "p :- #sum[1:p, -1:q] > -1.\n"
    "p :- q.\n"
    "q :- p.\n";

} // namespace

TEST_CASE("merged views of normalized sums") {
    NormalizedSum v = normalizedView(agg("#sum[1:p, -1:p, -2:q, 3:q] > -1"));
    CHECK(v.litStar == std::vector<WeightedLiteral>{{1, PropLiteral(Atom("q"))}});
    CHECK(v.litPos == v.litStar);
    CHECK(v.litNeg.empty());
    CHECK(v.bound == -1);

    v = normalizedView(agg("#sum[1:p, -1:q] > -1"));
    CHECK(v.litPos == std::vector<WeightedLiteral>{{1, PropLiteral(Atom("p"))}});
    CHECK(v.litNeg == std::vector<WeightedLiteral>{{-1, PropLiteral(Atom("q"))}});

    v = normalizedView(agg("#sum[] != 0"));
    CHECK(v.litStar.empty());
    CHECK(v.litPos.empty());
    CHECK(v.litNeg.empty());

    CHECK_THROWS_AS(normalizedView(agg("#sum[1:p] >= 0")), std::invalid_argument);
    CHECK_THROWS_AS(normalizedView(agg("#count[p] > 0")), std::invalid_argument);
}

TEST_CASE("syntactic non-monotonicity") {
    CHECK(isNonmonotone(normalizedView(agg("#sum[1:p, -1:q] > -1"))));
    CHECK_FALSE(isNonmonotone(normalizedView(agg("#sum[1:p, 1:q] > 0"))));
    CHECK(isNonmonotone(normalizedView(agg("#sum[1:p] != 1"))));
    // Negative weight on a negated literal does not make it non-monotone.
    CHECK_FALSE(isNonmonotone(normalizedView(agg("#sum[1:p, -1:~q] > 0"))));
}

TEST_CASE("fresh names are reserved and provenanced") {
    FreshNames names;
    Atom aux = names.makeAux();
    Atom qf = names.makeFalsityWitness(Atom("q"));
    CHECK(aux.name == "__aux_0");
    CHECK(qf.name == "__f_1_q");
    CHECK(FreshNames::isReservedName(aux.name));
    CHECK(FreshNames::isReservedName(qf.name));
    CHECK_FALSE(FreshNames::isReservedName("aux"));
    CHECK(names.allocated() == std::vector<Atom>{aux, qf});
}

TEST_CASE("saturation block for a > sum") {
    // Full saturation: witness machinery for q.
    FreshNames names;
    AggregateRewrite rw = posProgram(agg("#sum[1:p, -1:q] > -1"), atomSet({"p", "q"}), names);
    Program expected = expect(
        "AUX :- #sum[1:p, 1:QF] > 0.\n"
        "QF :- ~q.\n"
        "QF :- AUX.\n"
        "q | QF :- ~~AUX.\n",
        {{"AUX", rw.aux.name}, {"QF", rw.falsityWitness.at(Atom("q")).name}});
    CHECK(Program{rw.posRules} == expected);
    CHECK(rw.hiddenAtoms().size() == 2);

    // q outside V: mapped to ~q instead, no witness rules.
    FreshNames names2;
    AggregateRewrite partial = posProgram(agg("#sum[1:p, -1:q] > -1"), atomSet({"p"}), names2);
    CHECK(Program{partial.posRules} ==
          expect("AUX :- #sum[1:p, 1:~q] > 0.\n", {{"AUX", partial.aux.name}}));
    CHECK(partial.falsityWitness.empty());

    // Monotone: single rule, no fresh witnesses.
    FreshNames names3;
    AggregateRewrite mono = posProgram(agg("#sum[2:p] > 1"), atomSet({"p"}), names3);
    CHECK(Program{mono.posRules} == expect("AUX :- #sum[2:p] > 1.\n", {{"AUX", mono.aux.name}}));
}

TEST_CASE("splitting a != sum") {
    auto [gt, lt] = splitNeq(normalizedView(agg("#sum[1:x1, 2:x2, 2:y1, 3:y2] != 5")));
    CHECK(gt.source == agg("#sum[1:x1, 2:x2, 2:y1, 3:y2] > 5"));
    CHECK(lt.source == agg("#sum[-1:x1, -2:x2, -2:y1, -3:y2] > -5"));

    auto [g0, l0] = splitNeq(normalizedView(agg("#sum[] != 0")));
    CHECK(g0.source == agg("#sum[] > 0"));
    CHECK(l0.source == agg("#sum[] > 0"));

    auto [g1, l1] = splitNeq(normalizedView(agg("#sum[-1:p] != -1")));
    CHECK(g1.source == agg("#sum[-1:p] > -1"));
    CHECK(l1.source == agg("#sum[1:p] > 1"));
    // I |= A iff I |= A_> or I |= A_<.
    for (const auto& i : {interp({}), interp({"p"})}) {
        CHECK(satisfies(i, agg("#sum[-1:p] != -1")) ==
              (satisfies(i, g1.source) || satisfies(i, l1.source)));
    }

    CHECK_THROWS_AS(splitNeq(normalizedView(agg("#sum[1:p] > 0"))), std::invalid_argument);
}

TEST_CASE("saturation block for a != sum shares aux and witnesses") {
    FreshNames names;
    Aggregate a = agg("#sum[1:x1, 2:x2, 2:y1, 3:y2] != 5");
    AggregateRewrite rw = posProgram(a, atomSet({"x1", "x2", "y1", "y2"}), names);
    // Two aux rules plus the saturation triple for each of the four atoms.
    CHECK(rw.posRules.size() == 2 + 3 * 4);
    CHECK(rw.falsityWitness.size() == 4);
    Program expected = expect(
        "AUX :- #sum[1:x1, 2:x2, 2:y1, 3:y2] > 5.\n"
        "AUX :- #sum[1:X1F, 2:X2F, 2:Y1F, 3:Y2F] > 3.\n"
        "X1F :- ~x1.\nX1F :- AUX.\nx1 | X1F :- ~~AUX.\n"
        "X2F :- ~x2.\nX2F :- AUX.\nx2 | X2F :- ~~AUX.\n"
        "Y1F :- ~y1.\nY1F :- AUX.\ny1 | Y1F :- ~~AUX.\n"
        "Y2F :- ~y2.\nY2F :- AUX.\ny2 | Y2F :- ~~AUX.\n",
        {{"AUX", rw.aux.name},
         {"X1F", rw.falsityWitness.at(Atom("x1")).name},
         {"X2F", rw.falsityWitness.at(Atom("x2")).name},
         {"Y1F", rw.falsityWitness.at(Atom("y1")).name},
         {"Y2F", rw.falsityWitness.at(Atom("y2")).name}});
    CHECK(sameRuleSet(Program{rw.posRules}, expected));
}

TEST_CASE("rewriting one aggregate inside a program") {
    Program pi3 = prog(kPi3);
    Aggregate a = pi3.aggregates()[0];
    FreshNames names;
    RewriteOutput out = rew(pi3, a, atomSet({"p", "q"}), names);
    const AggregateRewrite& rw = out.records[0];
    Program expected = expect(
        "p :- AUX.\n"
        "p :- q.\n"
        "q :- p.\n"
        "AUX :- #sum[1:p, 1:QF] > 0.\n"
        "QF :- ~q.\n"
        "QF :- AUX.\n"
        "q | QF :- ~~AUX.\n",
        {{"AUX", rw.aux.name}, {"QF", rw.falsityWitness.at(Atom("q")).name}});
    CHECK(out.program == expected);
    CHECK(stableModels(out.program) ==
          std::vector<Interpretation>{
              interp({"p", "q", rw.aux.name, rw.falsityWitness.at(Atom("q")).name})});
    CHECK(out.hidden == rw.hiddenAtoms());
}

TEST_CASE("refined rewriting of the acyclic variant avoids disjunction") {
    Program pi3p = prog(
        "p :- #sum[1:p, -1:q] > -1.\n"
        "p :- q.\n");
    RewriteOutput out = rewriteProgram(pi3p, RewriteMode::Refined);
    const AggregateRewrite& rw = out.records[0];
    CHECK(rw.saturation == atomSet({"p"}));
    Program expected = expect(
        "p :- AUX.\n"
        "p :- q.\n"
        "AUX :- #sum[1:p, 1:~q] > 0.\n",
        {{"AUX", rw.aux.name}});
    CHECK(out.program == expected);
    CHECK(stableModels(out.program) == std::vector<Interpretation>{interp({"p", rw.aux.name})});
    for (const auto& r : out.program.rules) { CHECK(r.head.size() <= 1); }
}

TEST_CASE("full pipeline on the subset-sum program") {
    Program pi1 = gssProgram({1, 2}, {2, 3}, 5);
    std::vector<Atom> visible = pi1.atoms();

    RewriteOutput mod = rewriteProgram(pi1, RewriteMode::Modular);
    CHECK(mod.records.size() == 1);
    CHECK(mod.records[0].saturation == atomSet({"x1", "x2", "y1", "y2"}));
    CHECK(mod.program.rules.size() == 6 + 2 + 12);
    CHECK(equivalent(pi1, mod.program, visible));

    RewriteOutput ref = rewriteProgram(pi1, RewriteMode::Refined);
    const AggregateRewrite& rw = ref.records[0];
    CHECK(rw.saturation == atomSet({"unequal", "y1", "y2"}));
    Program expected = expect(
        "x1 :- ~~x1.\n"
        "x2 :- ~~x2.\n"
        "y1 :- unequal.\n"
        "y2 :- unequal.\n"
        ":- ~unequal.\n"
        "unequal :- AUX.\n"
        "AUX :- #sum[1:x1, 2:x2, 2:y1, 3:y2] > 5.\n"
        "AUX :- #sum[1:~x1, 2:~x2, 2:Y1F, 3:Y2F] > 3.\n"
        "Y1F :- ~y1.\nY1F :- AUX.\nY1F | y1 :- ~~AUX.\n"
        "Y2F :- ~y2.\nY2F :- AUX.\nY2F | y2 :- ~~AUX.\n",
        {{"AUX", rw.aux.name},
         {"Y1F", rw.falsityWitness.at(Atom("y1")).name},
         {"Y2F", rw.falsityWitness.at(Atom("y2")).name}});
    CHECK(ref.program == expected);
    CHECK(stableModels(ref.program) ==
          std::vector<Interpretation>{interp({"x1", "unequal", "y1", "y2", rw.aux.name,
                                              rw.falsityWitness.at(Atom("y1")).name,
                                              rw.falsityWitness.at(Atom("y2")).name})});
    CHECK(equivalent(pi1, ref.program, visible));
}

TEST_CASE("monotone aggregates are left in place") {
    Program p = prog("a :- #sum[1:p, 1:q] > 0.\np :- ~q.\n");
    for (RewriteMode mode : {RewriteMode::Modular, RewriteMode::Refined}) {
        RewriteOutput out = rewriteProgram(p, mode);
        CHECK(out.program == p);
        CHECK(out.records.empty());
        CHECK(out.hidden.empty());
    }
}

TEST_CASE("negative weights on negated literals are still eliminated") {
    // Reduct-monotone, but not of lparse shape; the pipeline removes it and
    // finalization then succeeds.
    Program p = prog("a :- #sum[1:p, -1:~q] > 0.\np.\n");
    RewriteOutput out = rewriteProgram(p, RewriteMode::Modular);
    CHECK_FALSE(out.records.empty());
    CHECK(equivalent(p, out.program, p.atoms()));
    CHECK_NOTHROW(finalizeLparse(out));
}

TEST_CASE("finalization to lparse form") {
    FreshNames names;
    Program p = prog("a :- #sum[1:p, 1:q] > 0.\nb :- #sum[1:p] > -2.\n");
    RewriteOutput ro;
    ro.program = p;
    Program fin = finalizeLparse(ro).program;
    CHECK(fin.rules[0] == prog("a :- #sum[1:p, 1:q] >= 1.").rules[0]);
    // Bound -1 <= 0: trivially satisfied, becomes ~#false.
    CHECK(fin.rules[1] == prog("b :- ~#false.").rules[0]);

    RewriteOutput bad;
    bad.program = prog("a :- #sum[-1:p] > 0.");
    CHECK_THROWS_AS(finalizeLparse(bad), std::invalid_argument);
    bad.program = prog("a :- #sum[1:p] != 0.");
    CHECK_THROWS_AS(finalizeLparse(bad), std::invalid_argument);

    // The worked pipeline keeps its meaning through finalization.
    Program pi1 = gssProgram({1, 2}, {2, 3}, 5);
    RewriteOutput mod = finalizeLparse(rewriteProgram(pi1, RewriteMode::Modular));
    for (const auto& a : mod.program.aggregates()) {
        CHECK(a.cmp == Cmp::Ge);
        CHECK((*a.bound == 6 || *a.bound == 4));
    }
    CHECK(equivalent(pi1, mod.program, pi1.atoms()));
}

TEST_CASE("ext reproduces the worked example") {
    Program pi1 = gssProgram({1, 2}, {2, 3}, 5);
    Aggregate a = pi1.aggregates()[0];
    FreshNames names;
    AggregateRewrite rw = posProgram(a, atomSet({"unequal", "y1", "y2"}), names);
    std::string aux = rw.aux.name;
    std::string y1f = rw.falsityWitness.at(Atom("y1")).name;
    std::string y2f = rw.falsityWitness.at(Atom("y2")).name;

    Interpretation i = interp({"x2", "unequal", "y1", "y2"});
    Interpretation j = interp({"x2", "y2"});
    // I |= A (2+2+3 = 7 != 5) and I |= F(I,A), so ext(I,I) saturates.
    CHECK(ext(i, i, rw) == interp({"x2", "unequal", "y1", "y2", aux, y1f, y2f}));
    // J |/= F(I,A): sum over J is 2+3 = 5.
    CHECK(ext(j, i, rw) == interp({"x2", "y2", y1f}));

    // First case: I |/= A, J = I.
    Interpretation five = interp({"x2", "y2"}); // 2 + 3 = 5
    CHECK(ext(five, five, rw) == interp({"x2", "y2", y1f}));

    // Precondition violations.
    CHECK_THROWS_AS(ext(i, j, rw), std::invalid_argument);
    Interpretation tainted = interp({"x2", aux});
    CHECK_THROWS_AS(ext(tainted, tainted, rw), std::invalid_argument);
}

TEST_CASE("ext is the minimal saturated extension on random aggregates") {
    // For every model i' of pos(A, V): with i = i' minus the fresh atoms,
    // ext(i, i) is contained in i' and models the reduct by i'.
    for (int iter = 0; iter < 150; ++iter) {
        std::mt19937_64 rng = iterationRng(41, iter);
        std::vector<Atom> atoms = {Atom("a1"), Atom("a2"), Atom("a3")};
        Aggregate raw = randomAggregate(rng, atoms, 3, 3, 6);
        for (Aggregate a : normalizeAggregate(raw)) {
            a = simplifyMerged(a);
            FreshNames names;
            AggregateRewrite rw = posProgram(a, atomsOfAggregate(a), names);
            Program pos{rw.posRules};
            std::vector<Atom> u = pos.atoms();
            for (const auto& at : atoms) {
                if (std::find(u.begin(), u.end(), at) == u.end()) { u.push_back(at); }
            }
            std::sort(u.begin(), u.end());
            std::uint32_t limit = 1u << u.size();
            std::vector<Atom> hidden = rw.hiddenAtoms();
            for (std::uint32_t mask = 0; mask < limit; ++mask) {
                std::vector<Atom> in;
                for (std::size_t k = 0; k < u.size(); ++k) {
                    if ((mask >> k) & 1u) { in.push_back(u[k]); }
                }
                Interpretation iPrime(std::move(in));
                if (!satisfies(iPrime, pos)) { continue; }
                std::vector<Atom> proj;
                for (const auto& at : iPrime.atoms) {
                    if (std::find(hidden.begin(), hidden.end(), at) == hidden.end()) {
                        proj.push_back(at);
                    }
                }
                Interpretation i(std::move(proj));
                Interpretation e = ext(i, i, rw);
                CHECK(e.subsetOf(iPrime));
                CHECK(satisfies(e, reduct(iPrime, pos)));
            }
        }
    }
}

TEST_CASE("modularity: context rules pass through untouched") {
    FuzzConfig c;
    int checked = 0;
    for (int iter = 0; checked < 60 && iter < 500; ++iter) {
        std::mt19937_64 rng = iterationRng(43, iter);
        Program base = simplifyProgram(normalizeProgram(randomProgram(c, rng)).first);
        if (base.aggregates().empty()) { continue; }
        Aggregate a = base.aggregates()[0];

        FuzzConfig cc = c;
        std::mt19937_64 rng2 = iterationRng(44, iter);
        Program context = simplifyProgram(normalizeProgram(randomProgram(cc, rng2)).first);
        auto ctxAggs = context.aggregates();
        if (std::find(ctxAggs.begin(), ctxAggs.end(), a) != ctxAggs.end()) { continue; }

        Program unioned = base;
        unioned.rules.insert(unioned.rules.end(), context.rules.begin(), context.rules.end());

        FreshNames n1, n2;
        std::vector<Atom> v = atomsOfAggregate(a);
        Program whole = rew(unioned, a, v, n1).program;
        Program part = rew(base, a, v, n2).program;
        part.rules.insert(part.rules.end(), context.rules.begin(), context.rules.end());
        CHECK(sameRuleSet(whole, part));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("faithfulness and hygiene on random programs") {
    FuzzConfig c;
    for (int iter = 0; iter < 150; ++iter) {
        std::mt19937_64 rng = iterationRng(47, iter);
        Program p = randomProgram(c, rng);
        Program np = simplifyProgram(normalizeProgram(p).first);
        std::vector<Atom> visible = p.atoms();
        for (RewriteMode mode : {RewriteMode::Modular, RewriteMode::Refined}) {
            RewriteOutput out = rewriteProgram(np, mode);
            CHECK(equivalent(p, out.program, visible));
            for (const auto& h : out.hidden) {
                CHECK(FreshNames::isReservedName(h.name));
                CHECK_FALSE(std::binary_search(visible.begin(), visible.end(), h));
            }
            // Distinct aggregates get disjoint fresh-atom sets.
            std::vector<Atom> all;
            for (const auto& r : out.records) {
                auto h = r.hiddenAtoms();
                all.insert(all.end(), h.begin(), h.end());
            }
            std::sort(all.begin(), all.end());
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            // Every remaining aggregate is a monotone >-sum.
            for (const auto& a : out.program.aggregates()) {
                NormalizedSum view = normalizedView(a);
                CHECK(view.cmp == Cmp::Gt);
                CHECK(view.litNeg.empty());
            }
        }
    }
}
