#include "CLI11.hpp"

#include "quartic/decomposer.hpp"
#include "quartic/embed.hpp"
#include "quartic/errors.hpp"
#include "quartic/generation.hpp"
#include "quartic/io.hpp"
#include "quartic/obstructions.hpp"
#include "quartic/oracle.hpp"
#include "quartic/solver.hpp"
#include "quartic/trail.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace quartic;

// exit codes: 0 success / true, 1 negative result, 2 usage or input error
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::optional<Format> parse_format(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "rotsys") return Format::rotsys;
    if (s == "graph6") return Format::graph6;
    if (s == "planar_code") return Format::planar_code;
    throw CLI::ValidationError("--format", "unknown format: " + s);
}

void emit_trace(const Transcript& tr) {
    for (const auto& line : tr.lines) std::cerr << "# " << line << "\n";
}

int cmd_generate(int vertices, bool count_only, int jobs, const std::string& format) {
    if (vertices < 6) {
        std::cerr << "generate: --vertices must be at least 6\n";
        return kUsage;
    }
    auto graphs = generate(vertices, jobs);
    std::vector<const PlaneGraph*> exact;
    for (const auto& g : graphs)
        if (g.n() == vertices) exact.push_back(&g);
    if (count_only) {
        std::cout << exact.size() << "\n";
        return kOk;
    }
    auto fmt = parse_format(format).value_or(Format::planar_code);
    if (fmt == Format::planar_code) write_planar_code_header(std::cout);
    for (const auto* g : exact) {
        switch (fmt) {
            case Format::planar_code: write_planar_code(std::cout, *g); break;
            case Format::graph6: std::cout << write_graph6(*g) << "\n"; break;
            case Format::rotsys: std::cout << write_rotsys(*g) << "\n"; break;
        }
    }
    return kOk;
}

int cmd_solve(const std::string& file, int k, const std::string& format, bool trace) {
    PlaneGraph g = read_graph_file(file, parse_format(format));
    if (!g.is_quartic()) {
        std::cerr << "solve: input graph is not quartic\n";
        return kUsage;
    }
    if (k != 4) {
        // only k = 4 has a constructive solver; other bounds go to the oracle
        auto t = search(g, SearchConfig{k, true, std::nullopt, std::nullopt});
        if (!t) {
            std::cout << "none\n";
            return kNegative;
        }
        std::cout << to_string(*t) << "\n";
        return kOk;
    }
    Transcript tr;
    SolveOutcome out = good_circuit(g, &tr);
    if (trace) emit_trace(tr);
    if (auto* gc = std::get_if<GoodCircuit>(&out)) {
        std::cout << to_string(gc->circuit) << "\n";
        return kOk;
    }
    if (auto* obs = std::get_if<ObstructedByF6>(&out)) {
        std::cout << "F6";
        for (VertexId v : obs->roles) std::cout << " " << v;
        std::cout << "\n";
        return kNegative;
    }
    std::cout << "disconnected\n";
    return kNegative;
}

LengthSequence parse_lengths(const std::string& s) {
    LengthSequence l;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw CLI::ValidationError("--lengths", "bad entry: " + item);
        l.push_back(v);
    }
    if (l.empty()) throw CLI::ValidationError("--lengths", "no lengths given");
    return l;
}

int cmd_decompose(const std::string& file, const std::string& lengths, int start,
                  const std::string& format) {
    PlaneGraph g = read_graph_file(file, parse_format(format));
    LengthSequence l = parse_lengths(lengths);
    try {
        PathDecomposition d = p_decomposition(g, l, start);
        for (const auto& p : d.paths) std::cout << to_string(p) << "\n";
        return kOk;
    } catch (const LengthMismatch& e) {
        std::cerr << "decompose: " << e.what() << "\n";
        return kNegative;
    } catch (const BadLengths& e) {
        std::cerr << "decompose: " << e.what() << "\n";
        return kNegative;
    } catch (const Disconnected& e) {
        std::cerr << "decompose: " << e.what() << "\n";
        return kNegative;
    }
}

Trail parse_trail_tokens(const std::vector<VertexId>& ids) {
    Trail t;
    t.verts = ids;
    t.closed = t.verts.size() >= 2 && t.verts.front() == t.verts.back();
    return t;
}

int cmd_verify_circuit(const std::string& file, const std::string& answer, int k,
                       const std::string& format) {
    PlaneGraph g = read_graph_file(file, parse_format(format));
    std::ifstream in(answer);
    if (!in) throw FormatError("cannot open " + answer);
    std::vector<VertexId> ids;
    VertexId v;
    while (in >> v) ids.push_back(v);
    Trail t = parse_trail_tokens(ids);
    auto res = verify_circuit(g, t, k);
    if (!res) {
        std::cerr << "invalid: " << res.diagnostic << "\n";
        return kNegative;
    }
    std::cout << "ok\n";
    return kOk;
}

int cmd_verify_decomposition(const std::string& file, const std::string& answer,
                             const std::string& format) {
    PlaneGraph g = read_graph_file(file, parse_format(format));
    std::ifstream in(answer);
    if (!in) throw FormatError("cannot open " + answer);
    PathDecomposition d;
    LengthSequence l;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<VertexId> ids;
        VertexId v;
        while (ls >> v) ids.push_back(v);
        if (ids.empty()) continue;
        if (ids.size() < 2) throw FormatError("a path needs at least two vertices");
        d.paths.push_back(Trail{ids, false});
        l.push_back((int)ids.size() - 1);
    }
    if (d.paths.empty()) throw FormatError("no paths in " + answer);
    d.v = d.paths.front().verts.front();
    auto res = verify_decomposition(g, d, l, d.v);
    if (!res) {
        std::cerr << "invalid: " << res.diagnostic << "\n";
        return kNegative;
    }
    std::cout << "ok\n";
    return kOk;
}

int cmd_oracle(const std::string& file, int k, bool open, std::optional<long long> budget,
               const std::string& format) {
    PlaneGraph g = read_graph_file(file, parse_format(format));
    SearchConfig cfg;
    cfg.k = k;
    cfg.closed = !open;
    cfg.cap = budget;
    try {
        auto t = search(g, cfg);
        if (!t) {
            std::cout << "none\n";
            return kNegative;
        }
        std::cout << to_string(*t) << "\n";
        return kOk;
    } catch (const BudgetExhausted&) {
        std::cout << "budget\n";
        return kNegative;
    }
}

void emit_dot(std::ostream& out, const std::string& name, const PlaneGraph& g,
              const std::vector<std::string>& labels) {
    out << "graph " << name << " {\n  layout=neato;\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.n(); ++v) {
        out << "  " << name << v << " [label=\"";
        out << (v < (VertexId)labels.size() ? labels[v] : std::to_string(v));
        out << "\"];\n";
    }
    for (const auto& [u, v] : g.edges)
        out << "  " << name << u << " -- " << name << v << ";\n";
    out << "}\n";
}

int cmd_gallery() {
    const auto& f6 = f6_pattern();
    const auto& g7 = g7_pattern();
    const auto& oct = octahedron_pattern();
    emit_dot(std::cout, "F6", f6.g, f6.role);
    emit_dot(std::cout, "G7", g7.g, g7.role);
    emit_dot(std::cout, "octahedron", oct.g, oct.role);
    // class members that can cap a 2-cut side: F6 or G7 minus one edge, and K4
    {
        Rot r = f6.g.rot;
        rot_remove_edge(r, 1, 2);  // drop edge ab
        emit_dot(std::cout, "F6_minus_ab", build(r), f6.role);
    }
    {
        Rot r = g7.g.rot;
        rot_remove_edge(r, 1, 2);
        emit_dot(std::cout, "G7_minus_ab", build(r), g7.role);
    }
    {
        Adj k4(4);
        for (VertexId u = 0; u < 4; ++u)
            for (VertexId v = 0; v < 4; ++v)
                if (u != v) k4[u].push_back(v);
        emit_dot(std::cout, "K4", embed(k4), {"v", "w", "x", "y"});
    }
    // half-edge distributions of the two-vertex cut types
    std::cout << "graph cut_types {\n  node [shape=box];\n"
                 "  a [label=\"type a: 2+2 / 2+2\"];\n"
                 "  b [label=\"type b: 3+1 / 3+1, same side\"];\n"
                 "  c [label=\"type c: 3+1 / 1+3, opposite sides\"];\n"
                 "  d [label=\"type d: cut vertices adjacent\"];\n"
                 "  e [label=\"type e: single cutvertex, 2/2\"];\n}\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quartic planar graphs: good circuits, generation, decompositions"};
    app.require_subcommand(1);
    std::string format;
    unsigned long long seed = 0;  // reserved; all subcommands are deterministic
    app.add_option("--format", format, "input/output format: rotsys, graph6, planar_code");
    app.add_option("--seed", seed, "rng seed for tools that sample (deterministic output)");

    auto* gen = app.add_subcommand("generate", "emit all 3-connected members with N vertices");
    int vertices = 0;
    bool count_only = false;
    int jobs = 1;
    gen->add_option("--vertices", vertices, "vertex count")->required();
    gen->add_flag("--count-only", count_only, "print only the isomorphism class count");
    gen->add_option("--jobs", jobs, "worker threads");

    auto* solve = app.add_subcommand("solve", "find a circuit avoiding short subcycles");
    std::string solve_file;
    int solve_k = 4;
    bool trace = false;
    solve->add_option("file", solve_file, "graph file")->required();
    solve->add_option("--k", solve_k, "forbidden subcycle length bound");
    solve->add_flag("--trace", trace, "log reduction and lift steps to stderr");

    auto* dec = app.add_subcommand("decompose", "cut an Eulerian circuit into prescribed paths");
    std::string dec_file, lengths;
    int start = 0;
    dec->add_option("file", dec_file, "graph file")->required();
    dec->add_option("--lengths", lengths, "comma-separated path lengths")->required();
    dec->add_option("--start", start, "start vertex")->required();

    auto* ver = app.add_subcommand("verify", "check a circuit or decomposition answer");
    std::string what, ver_file, answer;
    int ver_k = 4;
    ver->add_option("kind", what, "circuit or decomposition")->required();
    ver->add_option("file", ver_file, "graph file")->required();
    ver->add_option("--answer", answer, "answer file")->required();
    ver->add_option("--k", ver_k, "subcycle bound for circuit checks");

    auto* ora = app.add_subcommand("oracle", "exhaustive search, independent of the solver");
    std::string ora_file;
    int ora_k = 4;
    bool open = false;
    std::optional<long long> budget;
    long long budget_raw = -1;
    ora->add_option("file", ora_file, "graph file")->required();
    ora->add_option("--k", ora_k, "forbidden subcycle length bound");
    ora->add_flag("--open", open, "search open trails instead of closed circuits");
    ora->add_option("--budget", budget_raw, "node expansion budget");

    auto* gal = app.add_subcommand("gallery", "emit dot drawings of the fixed patterns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(vertices, count_only, jobs, format);
        if (solve->parsed()) return cmd_solve(solve_file, solve_k, format, trace);
        if (dec->parsed()) return cmd_decompose(dec_file, lengths, start, format);
        if (ver->parsed()) {
            if (what == "circuit") return cmd_verify_circuit(ver_file, answer, ver_k, format);
            if (what == "decomposition") return cmd_verify_decomposition(ver_file, answer, format);
            std::cerr << "verify: kind must be circuit or decomposition\n";
            return kUsage;
        }
        if (ora->parsed()) {
            if (budget_raw >= 0) budget = budget_raw;
            return cmd_oracle(ora_file, ora_k, open, budget, format);
        }
        if (gal->parsed()) return cmd_gallery();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionViolated& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
