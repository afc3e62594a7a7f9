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
#include <aggrew/ast.hh>

#include <algorithm>
#include <set>
#include <tuple>

namespace aggrew {

Aggregate::Aggregate(AggFunc f, std::vector<WeightedLiteral> elems, std::optional<Cmp> c,
                     std::optional<std::int64_t> b)
    : func(f), elements(std::move(elems)), cmp(c), bound(b) {
    bool parity = func == AggFunc::Even || func == AggFunc::Odd;
    if (parity && (cmp || bound)) {
        throw std::invalid_argument("even/odd aggregates take no comparator or bound");
    }
    if (!parity && (!cmp || !bound)) {
        throw std::invalid_argument("aggregate requires comparator and bound");
    }
    if (func == AggFunc::Count || parity) {
        for (const auto& e : elements) {
            if (e.weight != 1) {
                throw std::invalid_argument("count/even/odd elements carry weight 1");
            }
        }
    }
}

std::vector<WeightedLiteral> Aggregate::sortedElements() const {
    std::vector<WeightedLiteral> s = elements;
    std::sort(s.begin(), s.end());
    return s;
}

bool Aggregate::operator==(const Aggregate& other) const {
    return func == other.func && cmp == other.cmp && bound == other.bound &&
           sortedElements() == other.sortedElements();
}

bool Aggregate::operator<(const Aggregate& other) const {
    auto key = [](const Aggregate& a) {
        return std::make_tuple(a.func, a.cmp, a.bound, a.sortedElements());
    };
    return key(*this) < key(other);
}

bool literalEq(const Literal& a, const Literal& b) {
    if (a.index() != b.index()) { return false; }
    if (std::holds_alternative<PropLiteral>(a)) {
        return std::get<PropLiteral>(a) == std::get<PropLiteral>(b);
    }
    return std::get<Aggregate>(a) == std::get<Aggregate>(b);
}

bool literalLess(const Literal& a, const Literal& b) {
    if (a.index() != b.index()) { return a.index() < b.index(); }
    if (std::holds_alternative<PropLiteral>(a)) {
        return std::get<PropLiteral>(a) < std::get<PropLiteral>(b);
    }
    return std::get<Aggregate>(a) < std::get<Aggregate>(b);
}

Rule Rule::make(std::vector<Atom> rawHead, std::vector<Literal> body) {
    Rule r;
    r.body = std::move(body);
    for (auto& a : rawHead) {
        if (a.isFalsity()) {
            r.headHadFalsity = true;
        } else {
            r.head.push_back(std::move(a));
        }
    }
    std::sort(r.head.begin(), r.head.end());
    r.head.erase(std::unique(r.head.begin(), r.head.end()), r.head.end());
    return r;
}

bool Rule::operator==(const Rule& other) const {
    if (head != other.head || body.size() != other.body.size()) { return false; }
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (!literalEq(body[i], other.body[i])) { return false; }
    }
    return true;
}

bool Rule::operator<(const Rule& other) const {
    if (head != other.head) { return head < other.head; }
    return std::lexicographical_compare(body.begin(), body.end(), other.body.begin(),
                                        other.body.end(), literalLess);
}

std::vector<Atom> atomsOfAggregate(const Aggregate& a) {
    std::set<Atom> out;
    for (const auto& e : a.elements) {
        if (!e.literal.atom.isFalsity()) { out.insert(e.literal.atom); }
    }
    return {out.begin(), out.end()};
}

std::vector<Atom> atomsOfLiteral(const Literal& l) {
    if (const auto* p = std::get_if<PropLiteral>(&l)) {
        if (p->atom.isFalsity()) { return {}; }
        return {p->atom};
    }
    return atomsOfAggregate(std::get<Aggregate>(l));
}

std::vector<Atom> Program::atoms() const {
    std::set<Atom> out;
    for (const auto& r : rules) {
        out.insert(r.head.begin(), r.head.end());
        for (const auto& l : r.body) {
            auto as = atomsOfLiteral(l);
            out.insert(as.begin(), as.end());
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Aggregate> Program::aggregates() const {
    std::vector<Aggregate> out;
    for (const auto& r : rules) {
        for (const auto& l : r.body) {
            if (const auto* a = std::get_if<Aggregate>(&l)) {
                if (std::find(out.begin(), out.end(), *a) == out.end()) { out.push_back(*a); }
            }
        }
    }
    return out;
}

std::size_t Program::size() const {
    std::size_t n = 0;
    for (const auto& r : rules) {
        n += r.head.size();
        for (const auto& l : r.body) {
            if (const auto* a = std::get_if<Aggregate>(&l)) {
                n += a->elements.size() + (a->bound ? 1 : 0);
            } else {
                n += 1;
            }
        }
    }
    return n;
}

} // namespace aggrew
