#include "epframe/epsolve.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "epframe/extract.hpp"
#include "epframe/menger.hpp"

namespace epframe {

namespace {

void check_solver_input(const Graph& g, int k, const char* who) {
    if (g.directed()) throw std::invalid_argument(std::string(who) + ": undirected graphs only");
    if (g.has_loops()) throw std::invalid_argument(std::string(who) + ": loops are not allowed");
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

void push_frame_diagnostics(Certificate& cert, const FrameStats& stats) {
    cert.diagnostics.emplace_back("frame_components", stats.component_count);
    cert.diagnostics.emplace_back("frame_a_count", stats.a_count);
    cert.diagnostics.emplace_back("frame_degree3", static_cast<long long>(stats.degree3.size()));
    cert.diagnostics.emplace_back("frame_leaves", static_cast<long long>(stats.leaves.size()));
}

/// Disjoint leaf-to-leaf paths out of a large frame: one per component when
/// there are k components, otherwise everything the pairing lemma yields.
std::vector<Path> frame_packing(const Graph& g, const Frame& f, int k) {
    std::vector<Path> out;
    if (f.component_count >= k) {
        for (int c = 0; c < k; ++c) {
            auto paths = leaf_pair_paths(g, frame_component_subgraph(f, c));
            out.push_back(std::move(paths.front()));
        }
        return out;
    }
    for (int c = 0; c < f.component_count && static_cast<int>(out.size()) < k; ++c) {
        auto paths = leaf_pair_paths(g, frame_component_subgraph(f, c));
        for (Path& p : paths) {
            out.push_back(std::move(p));
            if (static_cast<int>(out.size()) == k) break;
        }
    }
    return out;
}

std::vector<VertexId> hitting_from_frame(const FrameStats& stats) {
    std::vector<VertexId> hit = stats.leaves;
    hit.insert(hit.end(), stats.degree3.begin(), stats.degree3.end());
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    return hit;
}

int ceil_log2(long long x) {
    int s = 0;
    while ((1LL << s) < x) ++s;
    return s;
}

}  // namespace

Certificate solve_gallai(const Graph& g, const TerminalSet& a, int k,
                         const SearchBudget& budget) {
    check_solver_input(g, k, "solve_gallai");
    Frame f = construct_frame(g, a, FrameVariant::plain(), nullptr, budget);
    FrameStats stats = frame_stats(f);

    Certificate cert;
    cert.variant = "gallai";
    cert.k = k;
    push_frame_diagnostics(cert, stats);

    // Large side: one path per component when there are k components,
    // otherwise the pairing lemma gives (a_count - c) / 2 >= k of them.
    if (stats.component_count >= k || stats.a_count >= 2 * k + stats.component_count) {
        cert.outcome = CertOutcome::Paths;
        cert.paths = frame_packing(g, f, k);
        cert.claimed_bound = k;
        if (static_cast<int>(cert.paths.size()) < k)
            throw std::logic_error("solve_gallai: packing fell short of k");
        return cert;
    }
    cert.outcome = CertOutcome::Hitting;
    cert.hit_kind = HitKind::Vertex;
    cert.hit_vertices = hitting_from_frame(stats);
    cert.claimed_bound = 4LL * k;
    if (static_cast<long long>(cert.hit_vertices.size()) >= 4LL * k)
        throw std::logic_error("solve_gallai: hitting set reached 4k");
    return cert;
}

Certificate solve_long(const Graph& g, const TerminalSet& a, int k, int ell,
                       const SearchBudget& budget) {
    check_solver_input(g, k, "solve_long");
    if (ell < 1) throw std::invalid_argument("solve_long: ell must be >= 1");
    Frame f = construct_frame(g, a, FrameVariant::long_paths(ell), nullptr, budget);
    FrameStats stats = frame_stats(f);

    Certificate cert;
    cert.variant = "long";
    cert.k = k;
    cert.ell = ell;
    push_frame_diagnostics(cert, stats);

    if (stats.component_count >= k || stats.a_count >= 2 * k + stats.component_count) {
        cert.outcome = CertOutcome::Paths;
        cert.paths = frame_packing(g, f, k);
        cert.claimed_bound = k;
        if (static_cast<int>(cert.paths.size()) < k)
            throw std::logic_error("solve_long: packing fell short of k");
        return cert;
    }

    // Branch vertices plus every forest vertex within distance ell-1 of a
    // frame A-vertex (the leaves).
    std::vector<int> leaf_dist(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<VertexId> queue;
    for (VertexId v : stats.leaves) {
        leaf_dist[static_cast<size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const Incidence& inc : f.adj[static_cast<size_t>(v)]) {
            if (leaf_dist[static_cast<size_t>(inc.to)] < 0) {
                leaf_dist[static_cast<size_t>(inc.to)] = leaf_dist[static_cast<size_t>(v)] + 1;
                queue.push_back(inc.to);
            }
        }
    }
    std::vector<VertexId> hit = stats.degree3;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (leaf_dist[static_cast<size_t>(v)] >= 0 && leaf_dist[static_cast<size_t>(v)] <= ell - 1)
            hit.push_back(v);
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());

    cert.outcome = CertOutcome::Hitting;
    cert.hit_kind = HitKind::Vertex;
    cert.hit_vertices = std::move(hit);
    cert.claimed_bound = 4LL * k * ell;
    if (static_cast<long long>(cert.hit_vertices.size()) >= 4LL * k * ell)
        throw std::logic_error("solve_long: hitting set reached 4k*ell");
    return cert;
}

Certificate solve_even(const Graph& g, const TerminalSet& a, int k,
                       const SearchBudget& budget) {
    check_solver_input(g, k, "solve_even");
    Frame f = construct_frame(g, a, FrameVariant::even(), nullptr, budget);
    FrameStats stats = frame_stats(f);

    Certificate cert;
    cert.variant = "even";
    cert.k = k;
    push_frame_diagnostics(cert, stats);

    if (stats.component_count >= k) {
        cert.outcome = CertOutcome::Paths;
        for (int c = 0; c < k; ++c) cert.paths.push_back(*f.witness[static_cast<size_t>(c)]);
        cert.claimed_bound = k;
        return cert;
    }
    if (stats.a_count >= 4 * k + 2 * stats.component_count) {
        cert.outcome = CertOutcome::Paths;
        for (int c = 0; c < f.component_count && static_cast<int>(cert.paths.size()) < k; ++c) {
            auto paths = even_component_paths(g, frame_component_subgraph(f, c), a);
            for (Path& p : paths) {
                cert.paths.push_back(std::move(p));
                if (static_cast<int>(cert.paths.size()) == k) break;
            }
        }
        cert.claimed_bound = k;
        if (static_cast<int>(cert.paths.size()) < k)
            throw std::logic_error("solve_even: extraction fell short of k");
        return cert;
    }
    cert.outcome = CertOutcome::Hitting;
    cert.hit_kind = HitKind::Vertex;
    cert.hit_vertices = hitting_from_frame(stats);
    cert.claimed_bound = 10LL * k;
    if (static_cast<long long>(cert.hit_vertices.size()) > 10LL * k)
        throw std::logic_error("solve_even: hitting set exceeded 10k");
    return cert;
}

std::vector<EdgeId> MaderTrace::cut_after(int round) const {
    std::vector<EdgeId> cut;
    for (const MaderRound& r : rounds) {
        if (r.round > round) break;
        cut.insert(cut.end(), r.added_cut.begin(), r.added_cut.end());
    }
    std::sort(cut.begin(), cut.end());
    return cut;
}

Certificate solve_mader_edge(const Graph& g, const TerminalSet& a, int k, MaderTrace* trace) {
    check_solver_input(g, k, "solve_mader_edge");

    Certificate cert;
    cert.variant = "mader-edge";
    cert.k = k;
    int rounds_bound = a.size() <= 1 ? 0 : ceil_log2(a.size());
    cert.claimed_bound = static_cast<long long>(k) * rounds_bound;
    long long statement_bound =
        k >= 2 ? static_cast<long long>(std::ceil(2.0 * k * std::log2(double(k)))) : 0;

    if (a.size() <= 1) {
        cert.outcome = CertOutcome::Hitting;
        cert.hit_kind = HitKind::Edge;
        cert.diagnostics.emplace_back("tree_phase_paths", 0);
        cert.diagnostics.emplace_back("bisection_rounds", 0);
        cert.diagnostics.emplace_back("proof_bound", cert.claimed_bound);
        cert.diagnostics.emplace_back("statement_bound_ceil", statement_bound);
        return cert;
    }

    // Phase 1: spanning-tree packing, component by component.
    std::vector<Path> packed;
    for (const std::vector<VertexId>& cell : components(g)) {
        int a_here = 0;
        for (VertexId v : cell)
            if (a.contains(v)) ++a_here;
        if (a_here < 2) continue;
        std::vector<EdgeId> tree_edges;
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        std::deque<VertexId> queue{cell.front()};
        seen[static_cast<size_t>(cell.front())] = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const Incidence& inc : g.incident(v)) {
                if (seen[static_cast<size_t>(inc.to)]) continue;
                seen[static_cast<size_t>(inc.to)] = 1;
                tree_edges.push_back(inc.edge);
                queue.push_back(inc.to);
            }
        }
        auto paths = tree_edge_disjoint_apaths(g, Subgraph::of(cell, std::move(tree_edges)), a);
        for (Path& p : paths) packed.push_back(std::move(p));
        if (static_cast<int>(packed.size()) >= k) break;
    }
    long long tree_paths = static_cast<long long>(packed.size());
    if (static_cast<int>(packed.size()) >= k) {
        packed.resize(static_cast<size_t>(k));
        cert.outcome = CertOutcome::Paths;
        cert.paths = std::move(packed);
        cert.diagnostics.emplace_back("tree_phase_paths", tree_paths);
        cert.diagnostics.emplace_back("bisection_rounds", 0);
        cert.diagnostics.emplace_back("proof_bound", static_cast<long long>(k) * rounds_bound);
        cert.diagnostics.emplace_back("statement_bound_ceil", statement_bound);
        cert.claimed_bound = k;
        return cert;
    }

    // Phase 2: global bisection. Each round either finds k edge-disjoint
    // paths between the two half-unions or extends the separator by at most
    // k-1 edges; after ceil(log2 |A|) rounds all cells are singletons.
    std::vector<std::vector<VertexId>> cells{a.members()};
    std::vector<EdgeId> separator;
    int rounds_used = 0;
    for (int round = 1; round <= rounds_bound; ++round) {
        std::vector<std::vector<VertexId>> next_cells;
        std::vector<VertexId> half1, half2;
        for (const auto& cell : cells) {
            size_t mid = (cell.size() + 1) / 2;
            std::vector<VertexId> b1(cell.begin(), cell.begin() + static_cast<long>(mid));
            std::vector<VertexId> b2(cell.begin() + static_cast<long>(mid), cell.end());
            half1.insert(half1.end(), b1.begin(), b1.end());
            half2.insert(half2.end(), b2.begin(), b2.end());
            next_cells.push_back(std::move(b1));
            if (!b2.empty()) next_cells.push_back(std::move(b2));
        }
        if (half2.empty()) break;
        ++rounds_used;
        TerminalSet s1('A', g.vertex_count(), half1);
        TerminalSet s2('A', g.vertex_count(), half2);
        CutPackPair duality = max_edge_disjoint_paths(g, s1, s2, separator);
        if (static_cast<int>(duality.paths.size()) >= k) {
            cert.outcome = CertOutcome::Paths;
            for (int i = 0; i < k; ++i) {
                // Trim to the prefix ending at the first A-vertex after the
                // start so interior A-vertices cannot occur.
                const Path& p = duality.paths[static_cast<size_t>(i)];
                size_t stop = p.vertices.size() - 1;
                for (size_t j = 1; j < p.vertices.size(); ++j)
                    if (a.contains(p.vertices[j])) { stop = j; break; }
                Path trimmed;
                trimmed.vertices.assign(p.vertices.begin(),
                                        p.vertices.begin() + static_cast<long>(stop) + 1);
                trimmed.edges.assign(p.edges.begin(), p.edges.begin() + static_cast<long>(stop));
                cert.paths.push_back(std::move(trimmed));
            }
            cert.claimed_bound = k;
            cert.diagnostics.emplace_back("tree_phase_paths", tree_paths);
            cert.diagnostics.emplace_back("bisection_rounds", rounds_used);
            cert.diagnostics.emplace_back("proof_bound", static_cast<long long>(k) * rounds_bound);
            cert.diagnostics.emplace_back("statement_bound_ceil", statement_bound);
            return cert;
        }
        if (static_cast<int>(duality.cut.size()) > k - 1)
            throw std::logic_error("solve_mader_edge: cut larger than k-1 without k paths");
        separator.insert(separator.end(), duality.cut.begin(), duality.cut.end());
        cells = std::move(next_cells);
        if (trace) trace->rounds.push_back(MaderRound{round, cells, duality.cut});
    }

    std::sort(separator.begin(), separator.end());
    separator.erase(std::unique(separator.begin(), separator.end()), separator.end());
    cert.outcome = CertOutcome::Hitting;
    cert.hit_kind = HitKind::Edge;
    cert.hit_edges = std::move(separator);
    cert.claimed_bound = static_cast<long long>(k) * rounds_bound;
    if (static_cast<long long>(cert.hit_edges.size()) > cert.claimed_bound)
        throw std::logic_error("solve_mader_edge: separator exceeded k*ceil(log2|A|)");
    cert.diagnostics.emplace_back("tree_phase_paths", tree_paths);
    cert.diagnostics.emplace_back("bisection_rounds", rounds_used);
    cert.diagnostics.emplace_back("proof_bound", cert.claimed_bound);
    cert.diagnostics.emplace_back("statement_bound_ceil", statement_bound);
    return cert;
}

}  // namespace epframe
