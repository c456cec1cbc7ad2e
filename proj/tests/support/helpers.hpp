#pragma once

#include <random>
#include <set>
#include <vector>

#include "epframe/graph.hpp"
#include "epframe/labeling.hpp"
#include "epframe/pathspec.hpp"

namespace test_support {

using namespace epframe;

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                              bool directed = false) {
    Graph g(directed);
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline TerminalSet terminals(const Graph& g, std::vector<VertexId> members, char label = 'A') {
    return TerminalSet(label, g.vertex_count(), std::move(members));
}

struct Instance {
    Graph g;
    TerminalSet a;
};

/// Loop-free random multigraph with a random terminal set; occasionally a
/// parallel edge, never a loop.
inline Instance random_graph(std::mt19937& rng, int min_n, int max_n, double p_lo = 0.15,
                             double p_hi = 0.45) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int n = size(rng);
    double p = p_lo + (p_hi - p_lo) * unit(rng);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) {
                g.add_edge(i, j);
                if (unit(rng) < 0.03) g.add_edge(i, j);  // occasional parallel edge
            }
    std::vector<VertexId> a;
    for (int i = 0; i < n; ++i)
        if (unit(rng) < 0.4) a.push_back(i);
    TerminalSet ts('A', n, a);
    return Instance{std::move(g), std::move(ts)};
}

inline Instance random_tree(std::mt19937& rng, int min_n, int max_n, double a_p = 0.45) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int n = size(rng);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(pick(rng), i);
    }
    std::vector<VertexId> a;
    for (int i = 0; i < n; ++i)
        if (unit(rng) < a_p) a.push_back(i);
    TerminalSet ts('A', n, a);
    return Instance{std::move(g), std::move(ts)};
}

/// Random tree with maximum degree 3.
inline Graph random_subcubic_tree(std::mt19937& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    int n = size(rng);
    Graph g;
    std::vector<int> degree;
    g.add_vertex("v0");
    degree.push_back(0);
    for (int i = 1; i < n; ++i) {
        std::vector<int> open;
        for (int j = 0; j < i; ++j)
            if (degree[static_cast<size_t>(j)] < 3) open.push_back(j);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(open.size()) - 1);
        int parent = open[static_cast<size_t>(pick(rng))];
        g.add_vertex("v" + std::to_string(i));
        g.add_edge(parent, i);
        degree[static_cast<size_t>(parent)]++;
        degree.push_back(1);
    }
    return g;
}

/// Reference path enumerator, recursive on purpose: the production oracle is
/// an explicit-stack search, so agreement is a genuine double-implementation
/// cross-check.
inline void ref_extend(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                       const EdgeLabeling* lab, const PathSpec& spec, Path& path,
                       std::vector<char>& used, std::vector<Path>& out) {
    VertexId here = path.back();
    for (const Incidence& inc : g.incident(here)) {
        if (g.directed() && !inc.forward) continue;
        VertexId to = inc.to;
        if (used[static_cast<size_t>(to)]) continue;
        bool ab_kind = spec.kind == PathKind::EvenAb;
        bool can_end = ab_kind ? b->contains(to) : a.contains(to);
        path.vertices.push_back(to);
        path.edges.push_back(inc.edge);
        if (can_end) {
            bool canonical = ab_kind || g.directed() || to > path.front();
            if (canonical && matches_spec(spec, g, a, b, lab, path)) out.push_back(path);
        } else if (!a.contains(to) && !(ab_kind && b->contains(to))) {
            used[static_cast<size_t>(to)] = 1;
            ref_extend(g, a, b, lab, spec, path, used, out);
            used[static_cast<size_t>(to)] = 0;
        }
        path.vertices.pop_back();
        path.edges.pop_back();
    }
}

inline std::vector<Path> ref_enumerate(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                                       const EdgeLabeling* lab, const PathSpec& spec) {
    std::vector<Path> out;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId start : a.members()) {
        Path path;
        path.vertices.push_back(start);
        used[static_cast<size_t>(start)] = 1;
        ref_extend(g, a, b, lab, spec, path, used, out);
        used[static_cast<size_t>(start)] = 0;
    }
    return out;
}

/// Canonical fingerprint of a path set, order- and orientation-insensitive.
inline std::set<std::vector<EdgeId>> path_fingerprints(const std::vector<Path>& paths) {
    std::set<std::vector<EdgeId>> out;
    for (const Path& p : paths) {
        std::vector<EdgeId> key = p.edges;
        std::vector<EdgeId> rev(key.rbegin(), key.rend());
        out.insert(std::min(key, rev));
    }
    return out;
}

/// Exhaustive maximum disjoint packing over an explicit path list; plain
/// include/exclude recursion, no clever pruning, meant for small inputs.
inline int brute_max_packing(const Graph& g, const std::vector<Path>& paths, bool vertex_mode) {
    std::vector<std::set<int>> elems;
    for (const Path& p : paths) {
        std::set<int> s;
        if (vertex_mode)
            s.insert(p.vertices.begin(), p.vertices.end());
        else
            s.insert(p.edges.begin(), p.edges.end());
        elems.push_back(std::move(s));
    }
    (void)g;
    std::vector<int> order(paths.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    int best = 0;
    auto conflict = [&](int i, int j) {
        for (int e : elems[static_cast<size_t>(i)])
            if (elems[static_cast<size_t>(j)].count(e)) return true;
        return false;
    };
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t idx) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        if (idx == order.size()) return;
        if (static_cast<int>(chosen.size() + (order.size() - idx)) <= best) return;
        bool ok = true;
        for (int c : chosen)
            if (conflict(c, static_cast<int>(idx))) { ok = false; break; }
        if (ok) {
            chosen.push_back(static_cast<int>(idx));
            self(self, idx + 1);
            chosen.pop_back();
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    return best;
}

inline bool paths_vertex_disjoint(const std::vector<Path>& paths) {
    std::set<VertexId> seen;
    for (const Path& p : paths)
        for (VertexId v : p.vertices)
            if (!seen.insert(v).second) return false;
    return true;
}

inline bool paths_edge_disjoint(const std::vector<Path>& paths) {
    std::set<EdgeId> seen;
    for (const Path& p : paths)
        for (EdgeId e : p.edges)
            if (!seen.insert(e).second) return false;
    return true;
}

}  // namespace test_support
