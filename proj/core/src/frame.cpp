#include "epframe/frame.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "epframe/errors.hpp"

namespace epframe {

FrameVariant FrameVariant::long_paths(int ell) {
    if (ell < 1) throw std::invalid_argument("long frame threshold must be >= 1");
    return {Tag::Long, ell};
}

Frame empty_frame(const Graph& g, FrameVariant variant) {
    Frame f;
    f.variant = variant;
    f.has_vertex.assign(static_cast<size_t>(g.vertex_count()), 0);
    f.has_edge.assign(static_cast<size_t>(g.edge_count()), 0);
    f.component.assign(static_cast<size_t>(g.vertex_count()), -1);
    f.degree.assign(static_cast<size_t>(g.vertex_count()), 0);
    f.adj.assign(static_cast<size_t>(g.vertex_count()), {});
    return f;
}

namespace {

void add_frame_edge(Frame& f, const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    f.has_edge[static_cast<size_t>(e)] = 1;
    f.edge_list.push_back(e);
    f.degree[static_cast<size_t>(ed.u)] += 1;
    f.degree[static_cast<size_t>(ed.v)] += 1;
    f.adj[static_cast<size_t>(ed.u)].push_back(Incidence{e, ed.v, true});
    f.adj[static_cast<size_t>(ed.v)].push_back(Incidence{e, ed.u, false});
}

/// Tree distances inside the forest from `from`, restricted to its component.
std::vector<int> forest_distances(const Frame& f, VertexId from) {
    std::vector<int> dist(f.adj.size(), -1);
    std::deque<VertexId> queue{from};
    dist[static_cast<size_t>(from)] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const Incidence& inc : f.adj[static_cast<size_t>(v)]) {
            if (dist[static_cast<size_t>(inc.to)] < 0) {
                dist[static_cast<size_t>(inc.to)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(inc.to);
            }
        }
    }
    return dist;
}

/// Multi-source BFS from every leaf: distance to the nearest leaf of the
/// same component, by vertex.
std::vector<int> distance_to_nearest_leaf(const Frame& f) {
    std::vector<int> dist(f.adj.size(), -1);
    std::deque<VertexId> queue;
    for (size_t v = 0; v < f.adj.size(); ++v) {
        if (f.has_vertex[v] && f.degree[v] == 1) {
            dist[v] = 0;
            queue.push_back(static_cast<VertexId>(v));
        }
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const Incidence& inc : f.adj[static_cast<size_t>(v)]) {
            if (dist[static_cast<size_t>(inc.to)] < 0) {
                dist[static_cast<size_t>(inc.to)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(inc.to);
            }
        }
    }
    return dist;
}

struct BfsParent {
    VertexId vertex = -1;
    EdgeId edge = -1;
};

Path rebuild_path(VertexId start, VertexId endpoint, EdgeId last_edge, VertexId last_from,
                  const std::vector<BfsParent>& parent) {
    Path p;
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    vs.push_back(endpoint);
    es.push_back(last_edge);
    VertexId cur = last_from;
    while (cur != start) {
        vs.push_back(cur);
        es.push_back(parent[static_cast<size_t>(cur)].edge);
        cur = parent[static_cast<size_t>(cur)].vertex;
    }
    vs.push_back(start);
    p.vertices.assign(vs.rbegin(), vs.rend());
    p.edges.assign(es.rbegin(), es.rend());
    return p;
}

/// Shortest A-path from some uncovered A-vertex, avoiding the frame
/// entirely. Complete for the Plain variant: any A-path will do.
std::optional<Path> bfs_new_component_plain(const Graph& g, const TerminalSet& a,
                                            const Frame& f) {
    for (VertexId start : a.members()) {
        if (f.contains_vertex(start)) continue;
        std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<BfsParent> parent(static_cast<size_t>(g.vertex_count()));
        std::deque<VertexId> queue{start};
        visited[static_cast<size_t>(start)] = 1;
        while (!queue.empty()) {
            VertexId w = queue.front();
            queue.pop_front();
            for (const Incidence& inc : g.incident(w)) {
                VertexId to = inc.to;
                if (to == start || f.contains_vertex(to)) continue;
                if (a.contains(to))
                    return rebuild_path(start, to, inc.edge, w, parent);
                if (!visited[static_cast<size_t>(to)]) {
                    visited[static_cast<size_t>(to)] = 1;
                    parent[static_cast<size_t>(to)] = {w, inc.edge};
                    queue.push_back(to);
                }
            }
        }
    }
    return std::nullopt;
}

/// Shortest A-F-path ending at a degree-2 forest vertex. Complete for the
/// Plain and Even variants, where any such attach preserves the invariants.
std::optional<Path> bfs_attach(const Graph& g, const TerminalSet& a, const Frame& f) {
    for (VertexId start : a.members()) {
        if (f.contains_vertex(start)) continue;
        std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<BfsParent> parent(static_cast<size_t>(g.vertex_count()));
        std::deque<VertexId> queue{start};
        visited[static_cast<size_t>(start)] = 1;
        while (!queue.empty()) {
            VertexId w = queue.front();
            queue.pop_front();
            for (const Incidence& inc : g.incident(w)) {
                VertexId to = inc.to;
                if (to == start) continue;
                if (f.contains_vertex(to)) {
                    if (f.degree[static_cast<size_t>(to)] == 2 && !a.contains(to))
                        return rebuild_path(start, to, inc.edge, w, parent);
                    continue;  // cannot pass through the frame
                }
                if (a.contains(to)) continue;
                if (!visited[static_cast<size_t>(to)]) {
                    visited[static_cast<size_t>(to)] = 1;
                    parent[static_cast<size_t>(to)] = {w, inc.edge};
                    queue.push_back(to);
                }
            }
        }
    }
    return std::nullopt;
}

struct DfsFrame {
    VertexId vertex;
    size_t next_incidence;
};

/// Exhaustive simple-path search from the given start vertices.
/// `accept_end(to, new_len)` decides whether ending at a fresh A-vertex
/// closes a valid NewComponent; `accept_frame(to, new_len)` whether entering
/// the frame at `to` closes a valid AttachPath (Long only); `may_extend`
/// prunes interior extension. Consumes the node budget.
template <typename AcceptEnd, typename AcceptFrame, typename MayExtend>
std::optional<Path> dfs_search(const Graph& g, const TerminalSet& a, const Frame& f,
                               const std::vector<VertexId>& starts, long long node_budget,
                               bool attach_mode, AcceptEnd accept_end, AcceptFrame accept_frame,
                               MayExtend may_extend) {
    long long nodes = 0;
    for (VertexId start : starts) {
        if (f.contains_vertex(start)) continue;
        std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<DfsFrame> stack{{start, 0}};
        Path path;
        path.vertices.push_back(start);
        on_path[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            DfsFrame& top = stack.back();
            const auto& inc = g.incident(top.vertex);
            if (top.next_incidence >= inc.size()) {
                on_path[static_cast<size_t>(top.vertex)] = 0;
                stack.pop_back();
                if (!path.edges.empty()) {
                    path.vertices.pop_back();
                    path.edges.pop_back();
                }
                continue;
            }
            const Incidence& step = inc[top.next_incidence++];
            if (++nodes > node_budget)
                throw BudgetError("frame augmentation search budget exhausted");
            VertexId to = step.to;
            int new_len = path.length() + 1;
            if (to == start || on_path[static_cast<size_t>(to)]) continue;
            if (f.contains_vertex(to)) {
                if (attach_mode && f.degree[static_cast<size_t>(to)] == 2 && !a.contains(to) &&
                    accept_frame(to, new_len)) {
                    path.vertices.push_back(to);
                    path.edges.push_back(step.edge);
                    return path;
                }
                continue;
            }
            if (a.contains(to)) {
                if (!attach_mode && accept_end(to, new_len)) {
                    path.vertices.push_back(to);
                    path.edges.push_back(step.edge);
                    return path;
                }
                continue;
            }
            if (!may_extend(to, new_len)) continue;
            path.vertices.push_back(to);
            path.edges.push_back(step.edge);
            on_path[static_cast<size_t>(to)] = 1;
            stack.push_back({to, 0});
        }
    }
    return std::nullopt;
}

/// Plain walk reachability: reach[v] is true when v satisfies `allowed` and
/// some walk through allowed vertices leads from v to a vertex satisfying
/// `target`. Used to prune dead regions out of the exhaustive searches; a
/// simple-path completion is in particular a walk, so pruning is safe.
template <typename Allowed, typename Target>
std::vector<char> walk_reach(const Graph& g, Allowed allowed, Target target) {
    std::vector<char> reach(static_cast<size_t>(g.vertex_count()), 0);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!allowed(v) || reach[static_cast<size_t>(v)]) continue;
        for (const Incidence& inc : g.incident(v)) {
            if (target(inc.to)) {
                reach[static_cast<size_t>(v)] = 1;
                queue.push_back(v);
                break;
            }
        }
    }
    while (!queue.empty()) {
        VertexId w = queue.front();
        queue.pop_front();
        for (const Incidence& inc : g.incident(w)) {
            VertexId to = inc.to;
            if (allowed(to) && !reach[static_cast<size_t>(to)]) {
                reach[static_cast<size_t>(to)] = 1;
                queue.push_back(to);
            }
        }
    }
    return reach;
}

/// Walk-parity reachability towards fresh A-targets, used to prune the
/// parity-constrained simple-path search. reach[2v + p] is true when some
/// walk of length ≡ p (mod 2) leads from v to a target through vertices
/// outside the frame and outside A.
std::vector<char> walk_parity_reach(const Graph& g, const TerminalSet& a, const Frame& f,
                                    VertexId start) {
    auto allowed = [&](VertexId v) {
        return !f.contains_vertex(v) && (!a.contains(v) || v == start);
    };
    auto is_target = [&](VertexId v) {
        return v != start && a.contains(v) && !f.contains_vertex(v);
    };
    std::vector<char> reach(static_cast<size_t>(2 * g.vertex_count()), 0);
    std::deque<std::pair<VertexId, int>> queue;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!allowed(v)) continue;
        for (const Incidence& inc : g.incident(v)) {
            if (is_target(inc.to) && !reach[static_cast<size_t>(2 * v + 1)]) {
                reach[static_cast<size_t>(2 * v + 1)] = 1;
                queue.emplace_back(v, 1);
                break;
            }
        }
    }
    while (!queue.empty()) {
        auto [w, p] = queue.front();
        queue.pop_front();
        for (const Incidence& inc : g.incident(w)) {
            VertexId to = inc.to;
            if (!allowed(to)) continue;
            size_t idx = static_cast<size_t>(2 * to + (p ^ 1));
            if (!reach[idx]) {
                reach[idx] = 1;
                queue.emplace_back(to, p ^ 1);
            }
        }
    }
    return reach;
}

std::optional<Path> find_new_component(const Graph& g, const TerminalSet& a, const Frame& f,
                                       const SearchBudget& budget) {
    int fresh_terminals = 0;
    for (VertexId v : a.members())
        if (!f.contains_vertex(v)) ++fresh_terminals;
    if (fresh_terminals < 2) return std::nullopt;  // a path needs two endpoints

    switch (f.variant.tag) {
        case FrameVariant::Tag::Plain:
            return bfs_new_component_plain(g, a, f);
        case FrameVariant::Tag::Long: {
            int ell = f.variant.min_length;
            std::vector<char> reach = walk_reach(
                g, [&](VertexId v) { return !f.contains_vertex(v) && !a.contains(v); },
                [&](VertexId v) { return a.contains(v) && !f.contains_vertex(v); });
            return dfs_search(
                g, a, f, a.members(), budget.nodes, false,
                [&](VertexId, int len) { return len >= ell; },
                [](VertexId, int) { return false; },
                [&](VertexId to, int) { return reach[static_cast<size_t>(to)] != 0; });
        }
        case FrameVariant::Tag::Even: {
            // Parity-constrained simple-path search; exponential in the worst
            // case, so it runs under the node budget with a walk-parity prune.
            // The prune table depends on the start vertex, hence one search
            // per start.
            for (VertexId start : a.members()) {
                if (f.contains_vertex(start)) continue;
                std::vector<char> reach = walk_parity_reach(g, a, f, start);
                auto found = dfs_search(
                    g, a, f, {start}, budget.nodes, false,
                    [&](VertexId, int len) { return len % 2 == 0; },
                    [](VertexId, int) { return false; },
                    [&](VertexId to, int len) {
                        return reach[static_cast<size_t>(2 * to + (len & 1))] != 0;
                    });
                if (found) return found;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string validate_frame(const Graph& g, const TerminalSet& a, const Frame& f) {
    size_t n = static_cast<size_t>(g.vertex_count());
    size_t m = static_cast<size_t>(g.edge_count());
    if (f.has_vertex.size() != n || f.has_edge.size() != m || f.component.size() != n ||
        f.degree.size() != n || f.adj.size() != n)
        return "frame arrays do not match graph dimensions";

    std::vector<char> seen_edge(m, 0);
    for (EdgeId e : f.edge_list) {
        if (e < 0 || static_cast<size_t>(e) >= m) return "frame edge out of range";
        if (seen_edge[static_cast<size_t>(e)]) return "duplicate frame edge";
        seen_edge[static_cast<size_t>(e)] = 1;
        if (!f.has_edge[static_cast<size_t>(e)]) return "edge_list/has_edge mismatch";
        const Edge& ed = g.edge(e);
        if (ed.u == ed.v) return "frame contains a loop";
        if (!f.contains_vertex(ed.u) || !f.contains_vertex(ed.v))
            return "frame edge endpoint missing from vertex set";
    }
    for (size_t e = 0; e < m; ++e)
        if (f.has_edge[e] && !seen_edge[e]) return "has_edge/edge_list mismatch";

    int vertex_total = 0;
    for (size_t v = 0; v < n; ++v) {
        if (!f.has_vertex[v]) {
            if (f.degree[v] != 0) return "degree recorded outside the frame";
            continue;
        }
        ++vertex_total;
        if (f.degree[v] == 0) return "isolated frame vertex";
        if (f.degree[v] > 3) return "frame vertex of degree > 3";
        if (f.degree[v] != static_cast<int>(f.adj[v].size())) return "degree/adjacency mismatch";
        VertexId vid = static_cast<VertexId>(v);
        bool leaf = f.degree[v] == 1;
        if (leaf && !a.contains(vid)) return "leaf '" + g.name(vid) + "' not in A";
        if (!leaf && a.contains(vid)) return "A-vertex '" + g.name(vid) + "' is not a leaf";
    }

    // Forest check and per-component bookkeeping via fresh BFS.
    std::vector<int> fresh(n, -1);
    int trees = 0;
    int edge_total = static_cast<int>(f.edge_list.size());
    for (size_t s = 0; s < n; ++s) {
        if (!f.has_vertex[s] || fresh[s] >= 0) continue;
        int id = trees++;
        std::deque<VertexId> queue{static_cast<VertexId>(s)};
        fresh[s] = id;
        int stored = f.component[s];
        if (stored < 0 || stored >= f.component_count) return "bad component label";
        int leaves = 0, deg3 = 0;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            if (f.component[static_cast<size_t>(v)] != stored)
                return "component label mismatch inside one tree";
            if (f.degree[static_cast<size_t>(v)] == 1) ++leaves;
            if (f.degree[static_cast<size_t>(v)] == 3) ++deg3;
            for (const Incidence& inc : f.adj[static_cast<size_t>(v)]) {
                if (fresh[static_cast<size_t>(inc.to)] < 0) {
                    fresh[static_cast<size_t>(inc.to)] = id;
                    queue.push_back(inc.to);
                }
            }
        }
        if (leaves - 2 != deg3) return "leaves minus 2 does not equal degree-3 count";
    }
    if (trees != f.component_count) return "component count mismatch";
    if (vertex_total - trees != edge_total) return "frame contains a cycle";

    if (f.variant.tag == FrameVariant::Tag::Long) {
        for (size_t v = 0; v < n; ++v) {
            if (!f.has_vertex[v] || f.degree[v] != 1) continue;
            std::vector<int> dist = forest_distances(f, static_cast<VertexId>(v));
            for (size_t w = v + 1; w < n; ++w) {
                if (!f.has_vertex[w] || f.degree[w] != 1) continue;
                if (dist[w] >= 0 && dist[w] < f.variant.min_length)
                    return "short leaf-to-leaf path inside a long frame";
            }
        }
    }

    if (f.variant.tag == FrameVariant::Tag::Even) {
        if (static_cast<int>(f.witness.size()) != f.component_count)
            return "witness table size mismatch";
        for (int c = 0; c < f.component_count; ++c) {
            if (!f.witness[static_cast<size_t>(c)]) return "component without an even witness";
            const Path& w = *f.witness[static_cast<size_t>(c)];
            if (!is_valid_path(g, w)) return "witness is not a valid path";
            if (w.length() % 2 != 0) return "witness path is odd";
            if (!a.contains(w.front()) || !a.contains(w.back()))
                return "witness endpoints not in A";
            for (size_t i = 1; i + 1 < w.vertices.size(); ++i)
                if (a.contains(w.vertices[i])) return "witness interior meets A";
            for (EdgeId e : w.edges)
                if (!f.contains_edge(e)) return "witness leaves the frame";
            for (VertexId v : w.vertices)
                if (f.component[static_cast<size_t>(v)] != c)
                    return "witness strays outside its component";
        }
    } else if (!f.witness.empty()) {
        return "witness table on a non-even frame";
    }
    return {};
}

std::optional<Augmentation> find_augmentation(const Graph& g, const TerminalSet& a,
                                              const Frame& f, const EdgeLabeling* lab,
                                              const SearchBudget& budget) {
    (void)lab;  // no variant currently consumes labels
    std::string violation = validate_frame(g, a, f);
    if (!violation.empty())
        throw std::invalid_argument("frame invariant violation: " + violation);

    if (auto p = find_new_component(g, a, f, budget))
        return Augmentation{Augmentation::Kind::NewComponent, std::move(*p)};

    if (f.empty()) return std::nullopt;

    switch (f.variant.tag) {
        case FrameVariant::Tag::Plain:
        case FrameVariant::Tag::Even: {
            if (auto p = bfs_attach(g, a, f))
                return Augmentation{Augmentation::Kind::AttachPath, std::move(*p)};
            return std::nullopt;
        }
        case FrameVariant::Tag::Long: {
            int ell = f.variant.min_length;
            std::vector<int> leaf_dist = distance_to_nearest_leaf(f);
            auto anchor = [&](VertexId v) {
                return f.contains_vertex(v) && f.degree[static_cast<size_t>(v)] == 2 &&
                       !a.contains(v);
            };
            std::vector<char> reach = walk_reach(
                g, [&](VertexId v) { return !f.contains_vertex(v) && !a.contains(v); }, anchor);
            auto p = dfs_search(
                g, a, f, a.members(), budget.nodes, true, [](VertexId, int) { return false; },
                [&](VertexId to, int len) {
                    return len + leaf_dist[static_cast<size_t>(to)] >= ell;
                },
                [&](VertexId to, int) { return reach[static_cast<size_t>(to)] != 0; });
            if (p) return Augmentation{Augmentation::Kind::AttachPath, std::move(*p)};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void apply_augmentation(Frame& f, const Graph& g, const Augmentation& aug) {
    const Path& p = aug.path;
    if (aug.kind == Augmentation::Kind::NewComponent) {
        int comp = f.component_count++;
        for (VertexId v : p.vertices) {
            f.has_vertex[static_cast<size_t>(v)] = 1;
            f.component[static_cast<size_t>(v)] = comp;
        }
        for (EdgeId e : p.edges) add_frame_edge(f, g, e);
        if (f.variant.tag == FrameVariant::Tag::Even)
            f.witness.push_back(p);
    } else {
        VertexId anchor = p.back();
        int comp = f.component[static_cast<size_t>(anchor)];
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            f.has_vertex[static_cast<size_t>(p.vertices[i])] = 1;
            f.component[static_cast<size_t>(p.vertices[i])] = comp;
        }
        for (EdgeId e : p.edges) add_frame_edge(f, g, e);
    }
}

Frame construct_frame(const Graph& g, const TerminalSet& a, FrameVariant variant,
                      const EdgeLabeling* lab, const SearchBudget& budget) {
    if (g.directed()) throw std::invalid_argument("frames are defined on undirected graphs");
    if (g.has_loops()) throw std::invalid_argument("frames require a loop-free graph");
    Frame f = empty_frame(g, variant);
    // Each augmentation adds at least one edge, so this terminates.
    for (int guard = 0; guard <= g.edge_count(); ++guard) {
        auto aug = find_augmentation(g, a, f, lab, budget);
        if (!aug) return f;
        apply_augmentation(f, g, *aug);
    }
    throw std::logic_error("frame construction failed to terminate");
}

FrameStats frame_stats(const Frame& f) {
    FrameStats stats;
    stats.component_count = f.component_count;
    for (size_t v = 0; v < f.degree.size(); ++v) {
        if (!f.has_vertex[v]) continue;
        if (f.degree[v] == 1) stats.leaves.push_back(static_cast<VertexId>(v));
        if (f.degree[v] == 3) stats.degree3.push_back(static_cast<VertexId>(v));
    }
    stats.a_count = static_cast<int>(stats.leaves.size());
    return stats;
}

std::string dump_frame(const Graph& g, const Frame& f) {
    std::ostringstream out;
    out << "# frame\n";
    out << "# variant=";
    switch (f.variant.tag) {
        case FrameVariant::Tag::Plain: out << "plain"; break;
        case FrameVariant::Tag::Long: out << "long ell=" << f.variant.min_length; break;
        case FrameVariant::Tag::Even: out << "even"; break;
    }
    out << '\n';
    out << "graph undirected\n";
    for (size_t v = 0; v < f.has_vertex.size(); ++v) {
        if (!f.has_vertex[v]) continue;
        out << "vertex " << g.name(static_cast<VertexId>(v));
        if (f.degree[v] == 1) out << " A";
        out << '\n';
    }
    std::vector<EdgeId> sorted = f.edge_list;
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId e : sorted)
        out << "edge " << g.name(g.edge(e).u) << ' ' << g.name(g.edge(e).v) << '\n';
    return out.str();
}

}  // namespace epframe
