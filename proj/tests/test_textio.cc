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

#include <aggrew/generate.hh>
#include <aggrew/textio.hh>

using namespace aggrew;

namespace {

const char* kPi1 =
    "x1 :- ~~x1.\n"
    "x2 :- ~~x2.\n"
    "y1 :- unequal.\n"
    "y2 :- unequal.\n"
    ":- ~unequal.\n"
    "unequal :- #sum[1:x1, 2:x2, 2:y1, 3:y2] != 5.\n";

} // namespace

TEST_CASE("parsing rules, constraints, and double negation") {
    Program p = parseProgram("p :- ~~p.");
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].head == std::vector<Atom>{Atom("p")});
    CHECK(std::get<PropLiteral>(p.rules[0].body[0]) == PropLiteral(Atom("p"), 2));

    Program c = parseProgram(":- ~unequal.");
    CHECK(c.rules[0].head.empty());
    CHECK(std::get<PropLiteral>(c.rules[0].body[0]) == PropLiteral(Atom("unequal"), 1));

    Program a = parseProgram("unequal :- #sum[1:x1, 2:x2, 2:y1, 3:y2] != 5.");
    const auto& ag = std::get<Aggregate>(a.rules[0].body[0]);
    CHECK(ag.func == AggFunc::Sum);
    CHECK(ag.cmp == Cmp::Ne);
    CHECK(ag.bound == 5);
    REQUIRE(ag.elements.size() == 4);
    CHECK(ag.elements[0] == WeightedLiteral(1, PropLiteral(Atom("x1"))));
    CHECK(ag.elements[3] == WeightedLiteral(3, PropLiteral(Atom("y2"))));
}

TEST_CASE("parsing every aggregate form") {
    Program p = parseProgram(
        "a :- #avg[5:p, 3:p, 2:q, 7:q] >= 4.\n"
        "b :- #min[-1:p, 2:~q] < 0.\n"
        "c :- #max[1:p] <= 3.\n"
        "d :- #count[p, ~q, r] = 2.\n"
        "e :- #even[p, q].\n"
        "f :- #odd[p].\n"
        "g :- #sum[] >= 0.\n");
    REQUIRE(p.rules.size() == 7);
    CHECK(std::get<Aggregate>(p.rules[0].body[0]).func == AggFunc::Avg);
    CHECK(std::get<Aggregate>(p.rules[1].body[0]).elements[1].literal.negations == 1);
    CHECK(std::get<Aggregate>(p.rules[2].body[0]).cmp == Cmp::Le);
    CHECK(std::get<Aggregate>(p.rules[3].body[0]).elements[0].weight == 1);
    CHECK_FALSE(std::get<Aggregate>(p.rules[4].body[0]).cmp.has_value());
    CHECK(std::get<Aggregate>(p.rules[6].body[0]).elements.empty());
}

TEST_CASE("falsity atom in heads and bodies") {
    Program p = parseProgram("#false :- p.\n#false.\nq :- #false.\n");
    CHECK(p.rules[0].head.empty());
    CHECK(p.rules[0].headHadFalsity);
    CHECK(p.rules[1].head.empty());
    CHECK(std::get<PropLiteral>(p.rules[2].body[0]) == PropLiteral::bottom());
    CHECK(printRule(p.rules[0]) == ":- p.");
}

TEST_CASE("comments and whitespace are insignificant") {
    Program a = parseProgram("% comment\n  p\n :-\n q , ~ r . % trailing\n");
    Program b = parseProgram("p:-q,~r.");
    CHECK(a == b);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parseProgram("p :- q"), ParseError);       // missing dot
    CHECK_THROWS_AS(parseProgram("p :- ~#sum[1:q] > 0."), ParseError); // negated aggregate
    CHECK_THROWS_AS(parseProgram("p :- #even[q] > 1."), ParseError);   // parity with comparator
    CHECK_THROWS_AS(parseProgram("p :- #odd[q] = 0."), ParseError);
    CHECK_THROWS_AS(parseProgram("p :- #sum[99999999999999999999:q] > 0."), ParseError);
    CHECK_THROWS_AS(parseProgram("p :- #count[2:q] > 0."), ParseError); // weights in count
    CHECK_THROWS_AS(parseProgram("P :- q."), ParseError);               // uppercase start
    try {
        parseProgram("p :- q.\nr :- .");
    } catch (const ParseError& e) {
        CHECK(e.span.line == 2);
    }
}

TEST_CASE("reserved names are opt-in") {
    CHECK_THROWS_AS(parseProgram("__aux_0 :- p."), ParseError);
    CHECK_THROWS_AS(parseProgram("p :- __f_1_q."), ParseError);
    Program p = parseProgram("p :- __aux_0.", ParseOptions{true});
    CHECK(std::get<PropLiteral>(p.rules[0].body[0]).atom == Atom("__aux_0"));
}

TEST_CASE("printing canonical forms") {
    CHECK(printPropLiteral(PropLiteral::top()) == "~#false");
    CHECK(printRule(parseProgram(":- p, ~q.").rules[0]) == ":- p, ~q.");
    CHECK(printRule(parseProgram("p | q.").rules[0]) == "p | q.");
    Program a = parseProgram("a :- #sum[1:p, -1:q] > -1.");
    CHECK(printAggregate(std::get<Aggregate>(a.rules[0].body[0])) == "#sum[1:p, -1:q] > -1");
}

TEST_CASE("round-trip is the identity on canonical text") {
    std::string once = printProgram(parseProgram(kPi1));
    std::string twice = printProgram(parseProgram(once));
    CHECK(once == twice);
    CHECK(once == kPi1);
    CHECK(parseProgram(once) == parseProgram(kPi1));
}

TEST_CASE("round-trip holds on generated programs") {
    FuzzConfig c;
    for (int iter = 0; iter < 200; ++iter) {
        std::mt19937_64 rng = iterationRng(42, iter);
        Program p = randomProgram(c, rng);
        std::string text = printProgram(p);
        CHECK(parseProgram(text) == p);
        CHECK(printProgram(parseProgram(text)) == text);
    }
}
