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
#include <aggrew/depgraph.hh>

#include <aggrew/normalize.hh>
#include <aggrew/rewrite.hh>
#include <aggrew/textio.hh>

#include <algorithm>
#include <set>
#include <sstream>

namespace aggrew {

namespace {

bool vertexEq(const Vertex& a, const Vertex& b) {
    if (a.index() != b.index()) { return false; }
    if (std::holds_alternative<Atom>(a)) { return std::get<Atom>(a) == std::get<Atom>(b); }
    return std::get<Aggregate>(a) == std::get<Aggregate>(b);
}

// Single-pass lowlink SCC search; components are emitted in reverse
// topological order of the condensation.
class Tarjan {
public:
    explicit Tarjan(const std::vector<std::vector<int>>& adj)
        : adj_(adj), index_(adj.size(), -1), lowlink_(adj.size(), 0), onStack_(adj.size(), false) {}

    void run(std::vector<int>& componentOf, std::vector<std::vector<int>>& components) {
        for (int v = 0; v < static_cast<int>(adj_.size()); ++v) {
            if (index_[v] < 0) { visit(v); }
        }
        componentOf = componentOf_;
        components = components_;
    }

private:
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> index_;
    std::vector<int> lowlink_;
    std::vector<bool> onStack_;
    std::vector<int> stack_;
    std::vector<int> componentOf_ = std::vector<int>(adj_.size(), -1);
    std::vector<std::vector<int>> components_;
    int next_ = 0;

    void visit(int v) {
        index_[v] = lowlink_[v] = next_++;
        stack_.push_back(v);
        onStack_[v] = true;
        for (int w : adj_[v]) {
            if (index_[w] < 0) {
                visit(w);
                lowlink_[v] = std::min(lowlink_[v], lowlink_[w]);
            } else if (onStack_[w]) {
                lowlink_[v] = std::min(lowlink_[v], index_[w]);
            }
        }
        if (lowlink_[v] == index_[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack_.back();
                stack_.pop_back();
                onStack_[w] = false;
                componentOf_[w] = static_cast<int>(components_.size());
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            components_.push_back(std::move(comp));
        }
    }
};

} // namespace

int DependencyGraph::vertexIndex(const Vertex& v) const {
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertexEq(vertices[k], v)) { return static_cast<int>(k); }
    }
    return -1;
}

std::vector<Atom> DependencyGraph::componentAtoms(int component) const {
    std::vector<Atom> out;
    for (int v : components[static_cast<std::size_t>(component)]) {
        if (const auto* a = std::get_if<Atom>(&vertices[static_cast<std::size_t>(v)])) {
            out.push_back(*a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DependencyGraph buildGraph(const Program& p) {
    DependencyGraph g;
    for (const auto& a : p.atoms()) { g.vertices.emplace_back(a); }
    for (const auto& agg : p.aggregates()) {
        if (!isNormalizedSum(agg)) {
            throw std::invalid_argument("dependency graph requires normalized sum aggregates");
        }
        g.vertices.emplace_back(agg);
    }
    g.arcs.assign(g.vertices.size(), {});

    std::set<std::pair<int, int>> seen;
    auto addArc = [&](int from, int to) {
        if (from < 0 || to < 0) { return; }
        if (seen.insert({from, to}).second) { g.arcs[static_cast<std::size_t>(from)].push_back(to); }
    };

    for (const auto& r : p.rules) {
        for (const auto& h : r.head) {
            int from = g.vertexIndex(Vertex(h));
            for (const auto& l : r.body) {
                if (const auto* pl = std::get_if<PropLiteral>(&l)) {
                    // Only positive atom occurrences induce arcs.
                    if (pl->isPositiveAtom()) { addArc(from, g.vertexIndex(Vertex(pl->atom))); }
                } else {
                    addArc(from, g.vertexIndex(Vertex(std::get<Aggregate>(l))));
                }
            }
        }
    }
    for (const auto& agg : p.aggregates()) {
        int from = g.vertexIndex(Vertex(agg));
        NormalizedSum v = normalizedView(agg);
        const auto& entries = v.cmp == Cmp::Gt ? v.litPos : v.litStar;
        for (const auto& e : entries) {
            if (e.literal.isPositiveAtom()) { addArc(from, g.vertexIndex(Vertex(e.literal.atom))); }
        }
    }

    Tarjan(g.arcs).run(g.componentOf, g.components);
    return g;
}

std::vector<Atom> recAtoms(const DependencyGraph& g, const Aggregate& a) {
    int v = g.vertexIndex(Vertex(a));
    if (v < 0) { return {}; }
    return g.componentAtoms(g.componentOf[static_cast<std::size_t>(v)]);
}

std::string toDot(const DependencyGraph& g) {
    std::ostringstream out;
    out << "digraph deps {\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        out << "  v" << k << " [label=\"";
        if (const auto* a = std::get_if<Atom>(&g.vertices[k])) {
            out << a->name;
        } else {
            out << printAggregate(std::get<Aggregate>(g.vertices[k]));
        }
        out << "\"];\n";
    }
    for (std::size_t k = 0; k < g.arcs.size(); ++k) {
        for (int to : g.arcs[k]) { out << "  v" << k << " -> v" << to << ";\n"; }
    }
    out << "}\n";
    return out.str();
}

std::optional<std::vector<Vertex>> findWitnessComponent(const Program& p, const Interpretation& i,
                                                        const Interpretation& j) {
    if (!satisfies(i, p)) { throw std::invalid_argument("i must be a model of the program"); }
    if (!(j.subsetOf(i) && j != i)) { throw std::invalid_argument("j must be a strict subset of i"); }
    Program red = reduct(i, p);
    if (!satisfies(j, red)) { throw std::invalid_argument("j must model the reduct"); }

    DependencyGraph g = buildGraph(simplifyProgram(normalizeProgram(p).first));
    // Atoms whose only occurrences merge to weight zero vanish from the
    // simplified program; they influence nothing, so each forms its own
    // singleton component.
    std::vector<std::vector<Atom>> componentSets;
    std::vector<std::vector<Vertex>> componentVertices;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        componentSets.push_back(g.componentAtoms(static_cast<int>(c)));
        std::vector<Vertex> vs;
        for (int v : g.components[c]) { vs.push_back(g.vertices[static_cast<std::size_t>(v)]); }
        componentVertices.push_back(std::move(vs));
    }
    for (const auto& a : p.atoms()) {
        if (g.vertexIndex(Vertex(a)) < 0) {
            componentSets.push_back({a});
            componentVertices.push_back({Vertex(a)});
        }
    }
    for (std::size_t c = 0; c < componentSets.size(); ++c) {
        const std::vector<Atom>& atoms = componentSets[c];
        // D = C \ j over atoms; aggregate vertices never occur in
        // interpretations.
        std::vector<Atom> d;
        for (const auto& a : atoms) {
            if (!j.contains(a)) { d.push_back(a); }
        }
        bool intersects = std::any_of(d.begin(), d.end(), [&](const Atom& a) { return i.contains(a); });
        if (!intersects) { continue; }
        std::vector<Atom> rest;
        for (const auto& a : i.atoms) {
            if (std::find(d.begin(), d.end(), a) == d.end()) { rest.push_back(a); }
        }
        if (satisfies(Interpretation(std::move(rest)), red)) { return componentVertices[c]; }
    }
    return std::nullopt;
}

} // namespace aggrew
