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
#ifndef AGGREW_TEXTIO_HH
#define AGGREW_TEXTIO_HH

#include <aggrew/ast.hh>

#include <string>
#include <string_view>

namespace aggrew {

struct SourceSpan {
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan s, const std::string& what)
        : std::runtime_error(std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + what),
          span(s) {}
    SourceSpan span;
};

struct ParseOptions {
    // Atom names starting with "__" are reserved for fresh atoms introduced
    // by the rewriting; accepting them is opt-in so that rewritten programs
    // can be re-read.
    bool allowReserved = false;
};

Program parseProgram(std::string_view text, const ParseOptions& opts = {});

std::string printPropLiteral(const PropLiteral& l);
std::string printAggregate(const Aggregate& a);
std::string printLiteral(const Literal& l);
std::string printRule(const Rule& r);
// Canonical text, one rule per line with trailing newline; parse(print(p))
// is structurally equal to p.
std::string printProgram(const Program& p);

} // namespace aggrew

#endif // AGGREW_TEXTIO_HH
