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
#include <aggrew/generate.hh>
#include <aggrew/normalize.hh>
#include <aggrew/rewrite.hh>
#include <aggrew/semantics.hh>
#include <aggrew/textio.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace aggrew;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitResource = 2;
constexpr int kExitNoModels = 10;
constexpr int kExitInequivalent = 11;
constexpr int kExitFuzz = 12;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw ParseError({0, 0}, "cannot read " + path); }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Program loadProgram(const std::string& path, bool allowReserved) {
    return parseProgram(readFile(path), ParseOptions{allowReserved});
}

void writeText(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) { throw std::runtime_error("cannot write " + path); }
    out << text;
}

struct Options {
    std::string input;
    std::string against;
    std::string output;
    std::string hiddenOut;
    std::string mode = "modular";
    std::string reproducer = "fuzz-reproducer.lp";
    std::vector<std::string> project;
    std::vector<std::int64_t> u;
    std::vector<std::int64_t> v;
    std::int64_t b = 0;
    bool noFinalize = false;
    int cap = kDefaultCap;
    FuzzConfig fuzz;
};

int cmdRewrite(const Options& o) {
    Program p = loadProgram(o.input, false);
    Program np = simplifyProgram(normalizeProgram(p).first);
    RewriteMode mode = o.mode == "refined" ? RewriteMode::Refined : RewriteMode::Modular;
    RewriteOutput ro = rewriteProgram(np, mode);
    if (!o.noFinalize) { ro = finalizeLparse(std::move(ro)); }
    writeText(o.output, printProgram(ro.program));
    if (!o.hiddenOut.empty()) {
        std::string manifest;
        for (const auto& h : ro.hidden) { manifest += h.name + "\n"; }
        writeText(o.hiddenOut, manifest);
    }
    return kExitOk;
}

int cmdSolve(const Options& o) {
    Program p = loadProgram(o.input, true);
    auto models = stableModels(p, nullptr, o.cap);
    for (const auto& m : models) { std::cout << printInterpretation(m) << "\n"; }
    std::cout << "count: " << models.size() << "\n";
    return models.empty() ? kExitNoModels : kExitOk;
}

int cmdCheck(const Options& o) {
    Program p1 = loadProgram(o.input, true);
    Program p2 = loadProgram(o.against, true);
    std::vector<Atom> proj;
    if (o.project.empty()) {
        proj = p1.atoms();
    } else {
        for (const auto& name : o.project) { proj.emplace_back(name); }
    }
    auto sm1 = stableModels(p1, nullptr, o.cap);
    auto sm2 = stableModels(p2, nullptr, o.cap);
    if (sm1.size() != sm2.size()) {
        std::cout << "count mismatch: " << sm1.size() << " vs " << sm2.size() << "\n";
        return kExitInequivalent;
    }
    auto project = [&proj](const std::vector<Interpretation>& sms) {
        std::set<Interpretation> out;
        for (const auto& m : sms) { out.insert(m.intersect(proj)); }
        return out;
    };
    std::set<Interpretation> s1 = project(sm1);
    std::set<Interpretation> s2 = project(sm2);
    if (s1 == s2) {
        std::cout << "equivalent\n";
        return kExitOk;
    }
    for (const auto& m : s1) {
        if (!s2.count(m)) {
            std::cout << "only in first: {" << printInterpretation(m) << "}\n";
            return kExitInequivalent;
        }
    }
    for (const auto& m : s2) {
        if (!s1.count(m)) {
            std::cout << "only in second: {" << printInterpretation(m) << "}\n";
            return kExitInequivalent;
        }
    }
    return kExitInequivalent;
}

int cmdClassify(const Options& o) {
    Program p = loadProgram(o.input, true);
    for (const auto& a : p.aggregates()) {
        std::cout << printAggregate(a) << ": " << printClass(classify(a, o.cap)) << "\n";
    }
    return kExitOk;
}

int cmdGss(const Options& o) {
    writeText(o.output, printProgram(gssProgram(o.u, o.v, o.b)));
    return kExitOk;
}

int cmdFuzz(const Options& o) {
    FuzzConfig c = o.fuzz;
    c.cap = o.cap;
    FuzzResult r = runFuzz(c);
    if (r.failure) {
        writeText(o.reproducer, printProgram(r.failure->program));
        std::cerr << "check " << r.failure->check << " failed at iteration "
                  << r.failingIteration << "; reproducer written to " << o.reproducer << "\n";
        return kExitFuzz;
    }
    std::cout << "ok: " << r.iterationsRun << " iterations\n";
    return kExitOk;
}

int cmdGraph(const Options& o) {
    Program p = loadProgram(o.input, true);
    std::cout << toDot(buildGraph(simplifyProgram(normalizeProgram(p).first)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rewrites answer-set programs with arbitrary aggregates into "
                 "monotone-sum (lparse-like) form"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--cap", o.cap, "Brute-force oracle cap (atoms)");

    auto* rewrite = app.add_subcommand("rewrite", "Rewrite a program to lparse-like form");
    rewrite->add_option("input", o.input, "Input program")->required();
    rewrite->add_option("--mode", o.mode, "Saturation set choice")
        ->check(CLI::IsMember({"modular", "refined"}));
    rewrite->add_flag("--no-finalize", o.noFinalize, "Stop before the >= finalization");
    rewrite->add_option("-o,--output", o.output, "Output path (default stdout)");
    rewrite->add_option("--emit-hidden", o.hiddenOut, "Write hidden-atom manifest here");

    auto* solve = app.add_subcommand("solve", "Enumerate stable models");
    solve->add_option("input", o.input, "Input program")->required();

    auto* check = app.add_subcommand("check", "Check projected equivalence of two programs");
    check->add_option("input", o.input, "First program")->required();
    check->add_option("against", o.against, "Second program")->required();
    check->add_option("--project", o.project, "Projection atoms (default: atoms of first)");

    auto* classify = app.add_subcommand("classify", "Classify each aggregate");
    classify->add_option("input", o.input, "Input program")->required();

    auto* gss = app.add_subcommand("gss", "Emit a Generalized-Subset-Sum encoding");
    gss->add_option("--u", o.u, "Existential weights")->required();
    gss->add_option("--v", o.v, "Universal weights")->required();
    gss->add_option("--b", o.b, "Target bound")->required();
    gss->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto* fuzz = app.add_subcommand("fuzz", "Random soundness testing");
    fuzz->add_option("--atoms", o.fuzz.atomCount, "Atoms per program");
    fuzz->add_option("--rules", o.fuzz.ruleCount, "Max rules per program");
    fuzz->add_option("--max-elements", o.fuzz.maxAggregateElements, "Max aggregate elements");
    fuzz->add_option("--weight-range", o.fuzz.weightRange, "Weights in [-w, w]");
    fuzz->add_option("--bound-range", o.fuzz.boundRange, "Bounds in [-b, b]");
    fuzz->add_option("--iterations", o.fuzz.iterations, "Iteration count");
    fuzz->add_option("--seed", o.fuzz.seed, "Base seed");
    fuzz->add_option("--reproducer", o.reproducer, "Failure reproducer path");

    auto* graph = app.add_subcommand("graph", "Dump the positive dependency graph as DOT");
    graph->add_option("input", o.input, "Input program")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rewrite->parsed()) { return cmdRewrite(o); }
        if (solve->parsed()) { return cmdSolve(o); }
        if (check->parsed()) { return cmdCheck(o); }
        if (classify->parsed()) { return cmdClassify(o); }
        if (gss->parsed()) { return cmdGss(o); }
        if (fuzz->parsed()) { return cmdFuzz(o); }
        if (graph->parsed()) { return cmdGraph(o); }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitResource;
    } catch (const CapExceededError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitOk;
}
