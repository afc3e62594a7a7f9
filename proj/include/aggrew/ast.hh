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
#ifndef AGGREW_AST_HH
#define AGGREW_AST_HH

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aggrew {

class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// All weight/bound arithmetic goes through these; wraparound would silently
// change aggregate semantics.
inline std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) { throw OverflowError("integer overflow in addition"); }
    return r;
}
inline std::int64_t checkedSub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) { throw OverflowError("integer overflow in subtraction"); }
    return r;
}
inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) { throw OverflowError("integer overflow in multiplication"); }
    return r;
}
inline std::int64_t checkedNeg(std::int64_t a) { return checkedSub(0, a); }

// Propositional atom, identified by name. The falsity constant is the
// reserved name "#false".
struct Atom {
    std::string name;

    Atom() = default;
    explicit Atom(std::string n) : name(std::move(n)) {
        if (name.empty()) { throw std::invalid_argument("atom name must be nonempty"); }
    }

    static Atom falsity() { return Atom("#false"); }
    bool isFalsity() const { return name == "#false"; }

    auto operator<=>(const Atom&) const = default;
};

// Atom preceded by zero or more negation-as-failure symbols. Stacked
// negations are kept as written; collapsing them is a semantic step, not a
// syntactic one.
struct PropLiteral {
    Atom atom;
    int negations = 0;

    PropLiteral() = default;
    explicit PropLiteral(Atom a, int negs = 0) : atom(std::move(a)), negations(negs) {
        if (negs < 0) { throw std::invalid_argument("negation count must be nonnegative"); }
    }

    static PropLiteral top() { return PropLiteral(Atom::falsity(), 1); }
    static PropLiteral bottom() { return PropLiteral(Atom::falsity(), 0); }

    PropLiteral negated() const { return PropLiteral(atom, negations + 1); }
    bool isPositiveAtom() const { return negations == 0 && !atom.isFalsity(); }

    auto operator<=>(const PropLiteral&) const = default;
};

enum class AggFunc { Sum, Avg, Min, Max, Count, Even, Odd };
enum class Cmp { Lt, Le, Ge, Gt, Eq, Ne };

struct WeightedLiteral {
    std::int64_t weight = 0;
    PropLiteral literal;

    WeightedLiteral() = default;
    WeightedLiteral(std::int64_t w, PropLiteral l) : weight(w), literal(std::move(l)) {}

    auto operator<=>(const WeightedLiteral&) const = default;
};

// Aggregate literal. Elements form a true multiset; structural equality
// ignores element order but not multiplicity. Count/even/odd store weight 1
// per element; even/odd have neither comparator nor bound.
struct Aggregate {
    AggFunc func = AggFunc::Sum;
    std::vector<WeightedLiteral> elements;
    std::optional<Cmp> cmp;
    std::optional<std::int64_t> bound;

    Aggregate() = default;
    Aggregate(AggFunc f, std::vector<WeightedLiteral> elems, std::optional<Cmp> c,
              std::optional<std::int64_t> b);

    std::vector<WeightedLiteral> sortedElements() const;

    bool operator==(const Aggregate& other) const;
    bool operator<(const Aggregate& other) const;
    bool operator!=(const Aggregate& other) const { return !(*this == other); }
};

using Literal = std::variant<PropLiteral, Aggregate>;

bool literalEq(const Literal& a, const Literal& b);
bool literalLess(const Literal& a, const Literal& b);

// Rule p1 | ... | pm :- body. The head is stored as a sorted set with the
// falsity atom stripped; headHadFalsity records its syntactic presence.
struct Rule {
    std::vector<Atom> head;
    std::vector<Literal> body;
    bool headHadFalsity = false;

    static Rule make(std::vector<Atom> rawHead, std::vector<Literal> body);

    bool operator==(const Rule& other) const;
    bool operator<(const Rule& other) const;
};

struct Program {
    std::vector<Rule> rules;

    // At(P): atoms other than #false occurring anywhere, sorted.
    std::vector<Atom> atoms() const;
    // Ag(P): structurally distinct aggregates, in first-occurrence order.
    std::vector<Aggregate> aggregates() const;
    // Symbol count: head atoms + propositional body literals + aggregate
    // elements + aggregate bounds.
    std::size_t size() const;

    bool operator==(const Program& other) const { return rules == other.rules; }
};

std::vector<Atom> atomsOfLiteral(const Literal& l);
std::vector<Atom> atomsOfAggregate(const Aggregate& a);

} // namespace aggrew

#endif // AGGREW_AST_HH
