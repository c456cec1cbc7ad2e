// epframe: frame-based packing/covering dichotomies for A-paths, with
// machine-checkable certificates, counterexample generators, and an
// exhaustive desk-scale oracle.
//
// Exit codes: 0 success (solve: disjoint paths found; verify: certificate
// accepted), 2 solve produced a hitting set, 3 an exhaustive search ran out
// of budget, 1 any other error.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "epframe/epsolve.hpp"
#include "epframe/errors.hpp"
#include "epframe/format.hpp"
#include "epframe/gallery.hpp"
#include "epframe/oracle.hpp"

namespace {

using namespace epframe;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHitting = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output '" + path + "'");
    out << text;
}

struct BudgetFlags {
    std::optional<long long> nodes;  // --budget or EPFRAME_BUDGET

    OracleBudget oracle(const Graph& g) const {
        OracleBudget b;
        if (nodes) {
            b.max_nodes = *nodes;
            b.max_vertices = g.vertex_count();  // explicit budget lifts the cap
        }
        return b;
    }
    SearchBudget search() const {
        SearchBudget b;
        if (nodes) b.nodes = *nodes;
        return b;
    }
};

PathSpec build_spec(const std::string& name, std::optional<int> ell, std::optional<int> m,
                    std::optional<int> d, const std::string& mode) {
    PathKind kind = parse_path_kind(name);
    Disjointness dis = Disjointness::Vertex;
    if (mode == "edge")
        dis = Disjointness::Edge;
    else if (!mode.empty() && mode != "vertex")
        throw std::invalid_argument("--mode must be vertex or edge");
    switch (kind) {
        case PathKind::Long:
            if (!ell) throw std::invalid_argument("--spec long requires --ell");
            return PathSpec::long_paths(*ell, dis);
        case PathKind::ZeroMod:
            if (!m || !d) throw std::invalid_argument("--spec zero-mod requires --m and --d");
            return PathSpec::zero_mod(*m, *d, dis);
        default: {
            PathSpec spec;
            spec.kind = kind;
            spec.disjointness = dis;
            return spec;
        }
    }
}

GroupSpec parse_group_flag(const std::string& text) {
    if (text == "Z" || text == "z") return GroupSpec::z();
    if (text.rfind("Zm", 0) == 0 || text.rfind("zm", 0) == 0) {
        std::string num = text.substr(2);
        if (!num.empty() && num[0] == ':') num = num.substr(1);
        return GroupSpec::zm(std::stoi(num));
    }
    if (text.rfind("Z2w", 0) == 0 || text.rfind("z2w", 0) == 0) {
        std::string num = text.substr(3);
        if (!num.empty() && num[0] == ':') num = num.substr(1);
        return GroupSpec::z2w(std::stoi(num));
    }
    throw std::invalid_argument("--group must be Zm<m>, Z, or Z2w<w>");
}

int run_solve(const std::string& variant, int k, std::optional<int> ell,
              const std::string& input, const std::string& output, const BudgetFlags& budget) {
    ParsedDocument doc = parse_graph(read_input(input));
    Certificate cert;
    try {
        if (variant == "gallai") {
            cert = solve_gallai(doc.graph, doc.a, k, budget.search());
        } else if (variant == "long") {
            if (!ell) {
                std::cerr << "error: --variant long requires --ell\n";
                return kExitError;
            }
            cert = solve_long(doc.graph, doc.a, k, *ell, budget.search());
        } else if (variant == "even") {
            cert = solve_even(doc.graph, doc.a, k, budget.search());
        } else if (variant == "mader-edge") {
            cert = solve_mader_edge(doc.graph, doc.a, k);
        } else {
            std::cerr << "error: unknown variant '" << variant << "'\n";
            return kExitError;
        }
    } catch (const BudgetError& ex) {
        // Exit 3 marks oracle budget exhaustion; a solver running out of its
        // search budget is a plain error.
        std::cerr << "error: " << ex.what() << '\n';
        return kExitError;
    }
    write_output(output, certificate_to_text(cert, doc.graph));
    return cert.outcome == CertOutcome::Paths ? kExitOk : kExitHitting;
}

int run_verify(const std::string& input, const std::vector<std::string>& cert_paths,
               const BudgetFlags& budget, int jobs) {
    ParsedDocument doc = parse_graph(read_input(input));
    const TerminalSet* b = doc.b ? &*doc.b : nullptr;
    const EdgeLabeling* lab = doc.labeling ? &*doc.labeling : nullptr;

    auto verify_one = [&](const std::string& path) {
        VerifyReport report;
        try {
            RawCertificate cert = parse_certificate_text(read_input(path));
            report = verify_certificate(doc.graph, doc.a, b, lab, cert,
                                        budget.oracle(doc.graph));
        } catch (const CertificateError& ex) {
            report.pass = false;
            report.violations.push_back(ex.what());
        }
        return report;
    };

    std::vector<VerifyReport> reports(cert_paths.size());
    if (jobs > 1 && cert_paths.size() > 1) {
        std::vector<std::future<VerifyReport>> futures;
        for (const std::string& path : cert_paths)
            futures.push_back(std::async(std::launch::async, verify_one, path));
        for (size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < cert_paths.size(); ++i) reports[i] = verify_one(cert_paths[i]);
    }

    bool all_pass = true;
    for (size_t i = 0; i < reports.size(); ++i) {
        if (cert_paths.size() > 1) std::cout << "certificate: " << cert_paths[i] << '\n';
        std::cout << reports[i].to_text();
        all_pass = all_pass && reports[i].pass;
    }
    return all_pass ? kExitOk : kExitError;
}

int run_gen(const std::string& family, std::optional<int> k, std::optional<int> ell,
            std::optional<int> m, std::optional<int> d, std::optional<int> s,
            std::optional<int> r, const std::string& group_text, const std::string& mu_text,
            const std::string& mode, const std::string& output) {
    auto need = [](std::optional<int> v, const char* flag) {
        if (!v) throw std::invalid_argument(std::string("missing ") + flag);
        return *v;
    };
    std::string doc;
    if (family == "clique-a") {
        doc = gen_clique_a(need(k, "--k")).document();
    } else if (family == "long-lb") {
        doc = gen_long_lb(need(k, "--k"), need(ell, "--ell")).document();
    } else if (family == "grid-mod") {
        doc = gen_grid_mod(need(m, "--m"), need(d, "--d"), need(s, "--s")).base.document();
    } else if (family == "wall-aba") {
        doc = gen_wall_aba(need(r, "--r")).document();
    } else if (family == "wall-parity") {
        Parity target = Parity::Odd;
        if (mode == "even")
            target = Parity::Even;
        else if (!mode.empty() && mode != "odd")
            throw std::invalid_argument("--mode must be even or odd for wall-parity");
        doc = gen_wall_parity(need(r, "--r"), target).base.document();
    } else if (family == "zero-wall") {
        if (group_text.empty() || mu_text.empty())
            throw std::invalid_argument("zero-wall requires --group and --mu");
        GroupSpec group = parse_group_flag(group_text);
        bool directed = mode == "directed";
        if (!mode.empty() && mode != "directed" && mode != "undirected")
            throw std::invalid_argument("--mode must be directed or undirected for zero-wall");
        doc = gen_zero_label_wall(need(r, "--r"), group, group.parse_element(mu_text), directed)
                  .base.document();
    } else if (family == "directed-grid") {
        doc = gen_directed_grid(need(s, "--s")).document();
    } else if (family == "even-ab") {
        doc = gen_even_abpath_counterexample(need(s, "--s")).base.document();
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kExitError;
    }
    write_output(output, doc);
    return kExitOk;
}

int run_oracle(const std::string& question, const std::string& spec_name, std::optional<int> ell,
               std::optional<int> m, std::optional<int> d, const std::string& mode,
               std::optional<int> k, const std::string& input, const std::string& output,
               const BudgetFlags& budget) {
    ParsedDocument doc = parse_graph(read_input(input));
    const TerminalSet* b = doc.b ? &*doc.b : nullptr;
    const EdgeLabeling* lab = doc.labeling ? &*doc.labeling : nullptr;
    PathSpec spec = build_spec(spec_name, ell, m, d, mode);
    OracleBudget ob = budget.oracle(doc.graph);

    std::ostringstream out;
    out << "question: " << question << '\n';
    out << "spec: " << path_kind_name(spec.kind) << '\n';
    out << "mode: " << (spec.disjointness == Disjointness::Vertex ? "vertex" : "edge") << '\n';
    auto print_path = [&](const Path& p) {
        out << "path:";
        for (VertexId v : p.vertices) out << ' ' << doc.graph.name(v);
        out << '\n';
    };

    if (question == "enumerate") {
        auto paths = enumerate_paths(doc.graph, doc.a, b, lab, spec, ob);
        out << "value: " << paths.size() << '\n';
        for (const Path& p : paths) print_path(p);
    } else if (question == "max-disjoint") {
        Packing packing = max_disjoint(doc.graph, doc.a, b, lab, spec, k.value_or(0), ob);
        out << "value: " << packing.size << '\n';
        for (const Path& p : packing.witness) print_path(p);
    } else if (question == "min-hitting") {
        HittingSearch hs = min_hitting_set(doc.graph, doc.a, b, lab, spec, spec.disjointness,
                                           k ? *k : -1, ob);
        if (!hs.found) {
            out << "value: none-within-cap\n";
        } else {
            out << "value: " << hs.size() << '\n';
            for (VertexId v : hs.vertices) out << "item: " << doc.graph.name(v) << '\n';
            for (EdgeId e : hs.edges) {
                const Edge& ed = doc.graph.edge(e);
                VertexId u = std::min(ed.u, ed.v), v = std::max(ed.u, ed.v);
                out << "item: " << doc.graph.name(u) << ' ' << doc.graph.name(v) << '\n';
            }
        }
    } else {
        std::cerr << "error: unknown question '" << question << "'\n";
        return kExitError;
    }
    write_output(output, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Packing/covering dichotomies for A-paths, with certificates"};
    app.require_subcommand(1);

    std::string variant, family, question, spec_name, mode, group_text, mu_text;
    std::string input, output;
    std::vector<std::string> certs;
    std::optional<int> k, ell, m, d, s, r;
    std::optional<long long> budget_flag;
    std::optional<long long> seed;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input graph document ('-' for stdin)");
        cmd->add_option("--output", output, "output location ('-' for stdout)");
        cmd->add_option("--budget", budget_flag,
                        "node budget for exhaustive searches; also lifts the oracle vertex cap");
        cmd->add_option("--seed", seed, "seed for harness-driven runs (reserved)");
        cmd->add_option("--jobs", jobs, "parallel workers for batched inputs")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* solve = app.add_subcommand("solve", "run a dichotomy solver");
    solve->add_option("--variant", variant, "gallai | long | even | mader-edge")->required();
    solve->add_option("--k", k, "packing target")->required();
    solve->add_option("--ell", ell, "length threshold (long)");
    add_common(solve);

    CLI::App* verify = app.add_subcommand("verify", "check certificates against a graph");
    verify->add_option("--cert", certs, "certificate document(s)")->required();
    add_common(verify);

    CLI::App* gen = app.add_subcommand("gen", "emit a counterexample-family instance");
    gen->add_option("--family", family,
                    "clique-a | long-lb | grid-mod | wall-aba | wall-parity | zero-wall | "
                    "directed-grid | even-ab")
        ->required();
    gen->add_option("--k", k, "family parameter k");
    gen->add_option("--ell", ell, "family parameter ell");
    gen->add_option("--m", m, "modulus");
    gen->add_option("--d", d, "residue");
    gen->add_option("--s", s, "grid side");
    gen->add_option("--r", r, "wall side");
    gen->add_option("--group", group_text, "label group: Zm<m> | Z | Z2w<w>");
    gen->add_option("--mu", mu_text, "non-zero group element");
    gen->add_option("--mode", mode, "wall-parity: even|odd; zero-wall: directed|undirected");
    add_common(gen);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground-truth queries");
    oracle->add_option("--question", question, "max-disjoint | min-hitting | enumerate")
        ->required();
    oracle->add_option("--spec", spec_name, "path kind")->required();
    oracle->add_option("--ell", ell, "length threshold (long)");
    oracle->add_option("--m", m, "modulus (zero-mod)");
    oracle->add_option("--d", d, "residue (zero-mod)");
    oracle->add_option("--mode", mode, "vertex | edge");
    oracle->add_option("--k", k, "cap for max-disjoint / min-hitting");
    add_common(oracle);

    CLI11_PARSE(app, argc, argv);

    BudgetFlags budget;
    if (budget_flag) {
        budget.nodes = *budget_flag;
    } else if (const char* env = std::getenv("EPFRAME_BUDGET")) {
        try {
            budget.nodes = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "error: EPFRAME_BUDGET is not a number\n";
            return kExitError;
        }
    }

    try {
        if (solve->parsed()) return run_solve(variant, k.value_or(0), ell, input, output, budget);
        if (verify->parsed()) return run_verify(input, certs, budget, jobs);
        if (gen->parsed())
            return run_gen(family, k, ell, m, d, s, r, group_text, mu_text, mode, output);
        if (oracle->parsed())
            return run_oracle(question, spec_name, ell, m, d, mode, k, input, output, budget);
    } catch (const BudgetError& ex) {
        std::cerr << "budget exhausted: " << ex.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
