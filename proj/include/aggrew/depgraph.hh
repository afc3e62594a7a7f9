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
#ifndef AGGREW_DEPGRAPH_HH
#define AGGREW_DEPGRAPH_HH

#include <aggrew/ast.hh>
#include <aggrew/semantics.hh>

#include <optional>
#include <string>

namespace aggrew {

using Vertex = std::variant<Atom, Aggregate>;

// Positive dependency graph over At(P) + Ag(P) with its SCC decomposition.
// Component indices are assigned in reverse topological order.
struct DependencyGraph {
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> arcs;       // adjacency by vertex index
    std::vector<int> componentOf;             // vertex index -> component index
    std::vector<std::vector<int>> components; // component index -> member vertex indices

    int vertexIndex(const Vertex& v) const;
    std::vector<Atom> componentAtoms(int component) const;
};

// Requires every aggregate in p to be a normalized sum (> or !=). Arcs run
// from head atoms to positive body literals (the aggregate vertex itself for
// aggregate literals) and from aggregates to atoms carrying a positive
// (for >) or nonzero (for !=) merged weight.
DependencyGraph buildGraph(const Program& p);

// rec(P, A): atoms sharing A's strongly connected component; empty when A is
// not a vertex.
std::vector<Atom> recAtoms(const DependencyGraph& g, const Aggregate& a);

std::string toDot(const DependencyGraph& g);

// Witness for the component property: given a model i of p and a strict
// subset j modeling the reduct, finds a component C with
// i cap (C \ j) != {} and i \ (C \ j) |= F(i, p). Components are taken from
// the normalized and merged form of p; the reduct is of p itself.
std::optional<std::vector<Vertex>> findWitnessComponent(const Program& p, const Interpretation& i,
                                                        const Interpretation& j);

} // namespace aggrew

#endif // AGGREW_DEPGRAPH_HH
