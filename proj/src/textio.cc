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
#include <aggrew/textio.hh>

#include <cctype>
#include <charconv>
#include <sstream>

namespace aggrew {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

    Program program() {
        Program p;
        skipWs();
        while (!atEnd()) {
            p.rules.push_back(rule());
            skipWs();
        }
        return p;
    }

private:
    std::string_view text_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    SourceSpan here() const { return {line_, col_}; }
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skipWs() {
        while (!atEnd()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (!atEnd() && peek() != '\n') { advance(); }
            } else {
                break;
            }
        }
    }

    bool tryConsume(std::string_view tok) {
        if (text_.substr(pos_, tok.size()) != tok) { return false; }
        for (std::size_t i = 0; i < tok.size(); ++i) { advance(); }
        return true;
    }

    void expect(std::string_view tok, const char* what) {
        skipWs();
        if (!tryConsume(tok)) { fail(std::string("expected ") + what); }
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(here(), msg); }

    Atom atom() {
        skipWs();
        SourceSpan start = here();
        if (tryConsume("#false")) { return Atom::falsity(); }
        char c = peek();
        bool reserved = c == '_';
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '_')) {
            fail("expected atom");
        }
        if (reserved && !opts_.allowReserved) {
            fail("atom names starting with '_' are reserved");
        }
        std::string name;
        while (!atEnd()) {
            c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name.push_back(advance());
            } else {
                break;
            }
        }
        if (name.empty()) { throw ParseError(start, "expected atom"); }
        return Atom(std::move(name));
    }

    PropLiteral propLiteral() {
        skipWs();
        int negs = 0;
        while (true) {
            skipWs();
            if (tryConsume("~")) {
                ++negs;
            } else {
                break;
            }
        }
        return PropLiteral(atom(), negs);
    }

    std::int64_t integer() {
        skipWs();
        SourceSpan start = here();
        std::size_t begin = pos_;
        if (peek() == '-') { advance(); }
        while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) { advance(); }
        std::string_view digits = text_.substr(begin, pos_ - begin);
        if (digits.empty() || digits == "-") { throw ParseError(start, "expected integer"); }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec == std::errc::result_out_of_range) {
            throw ParseError(start, "integer literal out of 64-bit range");
        }
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ParseError(start, "malformed integer");
        }
        return value;
    }

    std::optional<Cmp> tryCmp() {
        skipWs();
        if (tryConsume("<=")) { return Cmp::Le; }
        if (tryConsume(">=")) { return Cmp::Ge; }
        if (tryConsume("!=")) { return Cmp::Ne; }
        if (tryConsume("<")) { return Cmp::Lt; }
        if (tryConsume(">")) { return Cmp::Gt; }
        if (tryConsume("=")) { return Cmp::Eq; }
        return std::nullopt;
    }

    Aggregate aggregate() {
        skipWs();
        AggFunc func;
        bool weighted = false;
        if (tryConsume("#sum")) {
            func = AggFunc::Sum;
            weighted = true;
        } else if (tryConsume("#avg")) {
            func = AggFunc::Avg;
            weighted = true;
        } else if (tryConsume("#min")) {
            func = AggFunc::Min;
            weighted = true;
        } else if (tryConsume("#max")) {
            func = AggFunc::Max;
            weighted = true;
        } else if (tryConsume("#count")) {
            func = AggFunc::Count;
        } else if (tryConsume("#even")) {
            func = AggFunc::Even;
        } else if (tryConsume("#odd")) {
            func = AggFunc::Odd;
        } else {
            fail("expected aggregate function");
        }
        expect("[", "'['");
        std::vector<WeightedLiteral> elems;
        skipWs();
        if (peek() != ']') {
            while (true) {
                if (weighted) {
                    std::int64_t w = integer();
                    expect(":", "':'");
                    elems.emplace_back(w, propLiteral());
                } else {
                    elems.emplace_back(1, propLiteral());
                }
                skipWs();
                if (!tryConsume(",")) { break; }
            }
        }
        expect("]", "']'");
        bool parity = func == AggFunc::Even || func == AggFunc::Odd;
        SourceSpan afterBracket = here();
        std::optional<Cmp> cmp = tryCmp();
        if (parity) {
            if (cmp) {
                throw ParseError(afterBracket, "even/odd aggregates take no comparator");
            }
            return Aggregate(func, std::move(elems), std::nullopt, std::nullopt);
        }
        if (!cmp) { fail("expected comparator"); }
        std::int64_t b = integer();
        return Aggregate(func, std::move(elems), cmp, b);
    }

    Literal literal() {
        skipWs();
        SourceSpan start = here();
        if (peek() == '~') {
            // Lookahead past negations; the grammar forbids ~ on aggregates.
            std::size_t p = pos_;
            while (p < text_.size() &&
                   (text_[p] == '~' || std::isspace(static_cast<unsigned char>(text_[p])))) {
                ++p;
            }
            if (p < text_.size() && text_[p] == '#' && text_.substr(p, 6) != "#false") {
                throw ParseError(start, "negation cannot be applied to an aggregate");
            }
            return propLiteral();
        }
        if (peek() == '#' && text_.substr(pos_, 6) != "#false") { return aggregate(); }
        return propLiteral();
    }

    Rule rule() {
        skipWs();
        std::vector<Atom> head;
        std::vector<Literal> body;
        bool constraint = false;
        if (tryConsume(":-")) {
            constraint = true;
        } else {
            head.push_back(atom());
            while (true) {
                skipWs();
                if (tryConsume("|")) {
                    head.push_back(atom());
                } else {
                    break;
                }
            }
            skipWs();
            if (tryConsume(":-")) { constraint = false; }
            else if (tryConsume(".")) {
                return Rule::make(std::move(head), {});
            } else {
                fail("expected ':-' or '.'");
            }
            body.push_back(literal());
            while (true) {
                skipWs();
                if (tryConsume(",")) {
                    body.push_back(literal());
                } else {
                    break;
                }
            }
            expect(".", "'.'");
            return Rule::make(std::move(head), std::move(body));
        }
        // ":- body." constraint; an empty body is not in the grammar.
        (void)constraint;
        body.push_back(literal());
        while (true) {
            skipWs();
            if (tryConsume(",")) {
                body.push_back(literal());
            } else {
                break;
            }
        }
        expect(".", "'.'");
        Rule r = Rule::make({}, std::move(body));
        r.headHadFalsity = true;
        return r;
    }
};

const char* funcName(AggFunc f) {
    switch (f) {
        case AggFunc::Sum: return "#sum";
        case AggFunc::Avg: return "#avg";
        case AggFunc::Min: return "#min";
        case AggFunc::Max: return "#max";
        case AggFunc::Count: return "#count";
        case AggFunc::Even: return "#even";
        case AggFunc::Odd: return "#odd";
    }
    return "?";
}

const char* cmpName(Cmp c) {
    switch (c) {
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Ge: return ">=";
        case Cmp::Gt: return ">";
        case Cmp::Eq: return "=";
        case Cmp::Ne: return "!=";
    }
    return "?";
}

} // namespace

Program parseProgram(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).program();
}

std::string printPropLiteral(const PropLiteral& l) {
    std::string out(static_cast<std::size_t>(l.negations), '~');
    out += l.atom.name;
    return out;
}

std::string printAggregate(const Aggregate& a) {
    bool weighted = a.func == AggFunc::Sum || a.func == AggFunc::Avg ||
                    a.func == AggFunc::Min || a.func == AggFunc::Max;
    std::ostringstream out;
    out << funcName(a.func) << '[';
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
        if (i > 0) { out << ", "; }
        if (weighted) { out << a.elements[i].weight << ':'; }
        out << printPropLiteral(a.elements[i].literal);
    }
    out << ']';
    if (a.cmp) { out << ' ' << cmpName(*a.cmp) << ' ' << *a.bound; }
    return out.str();
}

std::string printLiteral(const Literal& l) {
    if (const auto* p = std::get_if<PropLiteral>(&l)) { return printPropLiteral(*p); }
    return printAggregate(std::get<Aggregate>(l));
}

std::string printRule(const Rule& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        if (i > 0) { out << " | "; }
        out << r.head[i].name;
    }
    if (r.head.empty() && r.body.empty()) {
        out << "#false";
    }
    if (!r.body.empty()) {
        if (!r.head.empty()) { out << ' '; }
        out << ":- ";
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (i > 0) { out << ", "; }
            out << printLiteral(r.body[i]);
        }
    }
    out << '.';
    return out.str();
}

std::string printProgram(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += printRule(r);
        out += '\n';
    }
    return out;
}

} // namespace aggrew
