#include "epframe/extract.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "epframe/errors.hpp"

namespace epframe {

Subgraph Subgraph::of(std::vector<VertexId> vertices, std::vector<EdgeId> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Subgraph{std::move(vertices), std::move(edges)};
}

Subgraph frame_component_subgraph(const Frame& f, int component) {
    Subgraph s;
    for (size_t v = 0; v < f.component.size(); ++v) {
        if (!f.has_vertex[v] || f.component[v] != component) continue;
        s.vertices.push_back(static_cast<VertexId>(v));
        for (const Incidence& inc : f.adj[v])
            if (inc.forward) s.edges.push_back(inc.edge);
    }
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

namespace {

struct TreeAdjacency {
    std::vector<char> in_tree;                 // by vertex
    std::vector<std::vector<Incidence>> adj;   // by vertex, edge-id order
    std::vector<int> degree;

    bool contains(VertexId v) const { return in_tree[static_cast<size_t>(v)] != 0; }
};

TreeAdjacency build_tree(const Graph& g, const Subgraph& t, const char* who) {
    TreeAdjacency out;
    out.in_tree.assign(static_cast<size_t>(g.vertex_count()), 0);
    out.adj.assign(static_cast<size_t>(g.vertex_count()), {});
    out.degree.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : t.vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument(std::string(who) + ": vertex out of range");
        out.in_tree[static_cast<size_t>(v)] = 1;
    }
    for (EdgeId e : t.edges) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument(std::string(who) + ": edge out of range");
        const Edge& ed = g.edge(e);
        if (ed.u == ed.v) throw std::invalid_argument(std::string(who) + ": loop in tree");
        if (!out.contains(ed.u) || !out.contains(ed.v))
            throw std::invalid_argument(std::string(who) + ": edge endpoint outside tree");
        out.adj[static_cast<size_t>(ed.u)].push_back(Incidence{e, ed.v, true});
        out.adj[static_cast<size_t>(ed.v)].push_back(Incidence{e, ed.u, false});
        out.degree[static_cast<size_t>(ed.u)] += 1;
        out.degree[static_cast<size_t>(ed.v)] += 1;
    }
    if (t.vertices.empty()) throw std::invalid_argument(std::string(who) + ": empty tree");
    if (t.edges.size() + 1 != t.vertices.size())
        throw std::invalid_argument(std::string(who) + ": not a tree (edge count)");
    // Connectivity.
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::deque<VertexId> queue{t.vertices.front()};
    seen[static_cast<size_t>(t.vertices.front())] = 1;
    size_t reached = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        ++reached;
        for (const Incidence& inc : out.adj[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(inc.to)]) {
                seen[static_cast<size_t>(inc.to)] = 1;
                queue.push_back(inc.to);
            }
        }
    }
    if (reached != t.vertices.size())
        throw std::invalid_argument(std::string(who) + ": not a tree (disconnected)");
    return out;
}

// --- leaf_pair_paths -------------------------------------------------------

struct ReducedEdge {
    VertexId a = -1;
    VertexId b = -1;
    Path seg;  // from a to b, in original vertices/edges
    bool alive = false;
};

Path seg_oriented(const ReducedEdge& re, VertexId from) {
    return from == re.a ? re.seg : reverse_path(re.seg);
}

}  // namespace

std::vector<Path> leaf_pair_paths(const Graph& g, const Subgraph& tree) {
    TreeAdjacency t = build_tree(g, tree, "leaf_pair_paths");
    for (VertexId v : tree.vertices)
        if (t.degree[static_cast<size_t>(v)] > 3)
            throw std::invalid_argument("leaf_pair_paths: tree is not subcubic");

    int leaf_count = 0;
    for (VertexId v : tree.vertices)
        if (t.degree[static_cast<size_t>(v)] == 1) ++leaf_count;
    if (leaf_count < 2)
        throw std::invalid_argument("leaf_pair_paths: tree needs at least 2 leaves");

    // Suppress degree-2 vertices into reduced edges carrying their original
    // segments.
    std::vector<char> kept(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : tree.vertices)
        kept[static_cast<size_t>(v)] = t.degree[static_cast<size_t>(v)] != 2;

    std::vector<ReducedEdge> pool;
    std::vector<std::vector<int>> at(static_cast<size_t>(g.vertex_count()));
    std::vector<char> edge_consumed(static_cast<size_t>(g.edge_count()), 0);
    for (VertexId v : tree.vertices) {
        if (!kept[static_cast<size_t>(v)]) continue;
        for (const Incidence& first : t.adj[static_cast<size_t>(v)]) {
            if (edge_consumed[static_cast<size_t>(first.edge)]) continue;
            ReducedEdge re;
            re.a = v;
            re.seg.vertices = {v, first.to};
            re.seg.edges = {first.edge};
            edge_consumed[static_cast<size_t>(first.edge)] = 1;
            VertexId cur = first.to;
            EdgeId in_edge = first.edge;
            while (!kept[static_cast<size_t>(cur)]) {
                const auto& inc = t.adj[static_cast<size_t>(cur)];
                const Incidence& next = inc[0].edge == in_edge ? inc[1] : inc[0];
                re.seg.vertices.push_back(next.to);
                re.seg.edges.push_back(next.edge);
                edge_consumed[static_cast<size_t>(next.edge)] = 1;
                in_edge = next.edge;
                cur = next.to;
            }
            re.b = cur;
            re.alive = true;
            int idx = static_cast<int>(pool.size());
            pool.push_back(std::move(re));
            at[static_cast<size_t>(v)].push_back(idx);
            at[static_cast<size_t>(cur)].push_back(idx);
        }
    }

    std::vector<char> removed(static_cast<size_t>(g.vertex_count()), 0);
    auto red_degree = [&](VertexId v) {
        int d = 0;
        for (int idx : at[static_cast<size_t>(v)])
            if (pool[static_cast<size_t>(idx)].alive) ++d;
        return d;
    };
    auto alive_kept = [&](VertexId v) {
        return kept[static_cast<size_t>(v)] && !removed[static_cast<size_t>(v)];
    };
    auto other_end = [&](int idx, VertexId v) {
        return pool[static_cast<size_t>(idx)].a == v ? pool[static_cast<size_t>(idx)].b
                                                     : pool[static_cast<size_t>(idx)].a;
    };

    std::vector<Path> out;
    int p = leaf_count;
    while (p >= 4) {
        // Depths from the smallest-id leaf.
        VertexId root = -1;
        for (VertexId v : tree.vertices)
            if (alive_kept(v) && red_degree(v) == 1) { root = v; break; }
        std::vector<int> depth(static_cast<size_t>(g.vertex_count()), -1);
        std::deque<VertexId> queue{root};
        depth[static_cast<size_t>(root)] = 0;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (int idx : at[static_cast<size_t>(v)]) {
                if (!pool[static_cast<size_t>(idx)].alive) continue;
                VertexId w = other_end(idx, v);
                if (depth[static_cast<size_t>(w)] < 0) {
                    depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        VertexId branch = -1;
        for (VertexId v : tree.vertices) {
            if (!alive_kept(v) || red_degree(v) != 3) continue;
            if (branch < 0 || depth[static_cast<size_t>(v)] > depth[static_cast<size_t>(branch)])
                branch = v;
        }
        // A deepest branch vertex is adjacent to exactly two leaves.
        int leaf_edges[2] = {-1, -1};
        int up_edge = -1;
        for (int idx : at[static_cast<size_t>(branch)]) {
            if (!pool[static_cast<size_t>(idx)].alive) continue;
            VertexId w = other_end(idx, branch);
            if (red_degree(w) == 1) {
                if (leaf_edges[0] < 0)
                    leaf_edges[0] = idx;
                else
                    leaf_edges[1] = idx;
            } else {
                up_edge = idx;
            }
        }
        if (leaf_edges[1] < 0 || up_edge < 0)
            throw std::logic_error("leaf_pair_paths: malformed reduced tree");

        Path left = seg_oriented(pool[static_cast<size_t>(leaf_edges[0])], branch);
        Path right = seg_oriented(pool[static_cast<size_t>(leaf_edges[1])], branch);
        Path produced = reverse_path(left);
        for (size_t i = 1; i < right.vertices.size(); ++i) {
            produced.vertices.push_back(right.vertices[i]);
            produced.edges.push_back(right.edges[i - 1]);
        }
        out.push_back(std::move(produced));

        VertexId l1 = other_end(leaf_edges[0], branch);
        VertexId l2 = other_end(leaf_edges[1], branch);
        VertexId up = other_end(up_edge, branch);
        pool[static_cast<size_t>(leaf_edges[0])].alive = false;
        pool[static_cast<size_t>(leaf_edges[1])].alive = false;
        pool[static_cast<size_t>(up_edge)].alive = false;
        removed[static_cast<size_t>(l1)] = 1;
        removed[static_cast<size_t>(l2)] = 1;
        removed[static_cast<size_t>(branch)] = 1;

        // The neighbour above the removed branch drops to degree 2; splice
        // its two remaining reduced edges together.
        if (red_degree(up) == 2) {
            int keep[2] = {-1, -1};
            for (int idx : at[static_cast<size_t>(up)]) {
                if (!pool[static_cast<size_t>(idx)].alive) continue;
                (keep[0] < 0 ? keep[0] : keep[1]) = idx;
            }
            ReducedEdge merged;
            VertexId x = other_end(keep[0], up);
            VertexId y = other_end(keep[1], up);
            Path into = seg_oriented(pool[static_cast<size_t>(keep[0])], x);    // x -> up
            Path outof = seg_oriented(pool[static_cast<size_t>(keep[1])], up);  // up -> y
            merged.a = x;
            merged.b = y;
            merged.seg = into;
            for (size_t i = 1; i < outof.vertices.size(); ++i) {
                merged.seg.vertices.push_back(outof.vertices[i]);
                merged.seg.edges.push_back(outof.edges[i - 1]);
            }
            merged.alive = true;
            pool[static_cast<size_t>(keep[0])].alive = false;
            pool[static_cast<size_t>(keep[1])].alive = false;
            removed[static_cast<size_t>(up)] = 1;
            int idx = static_cast<int>(pool.size());
            pool.push_back(std::move(merged));
            at[static_cast<size_t>(x)].push_back(idx);
            at[static_cast<size_t>(y)].push_back(idx);
        }
        p -= 2;
    }

    if (p == 3) {
        VertexId center = -1;
        for (VertexId v : tree.vertices)
            if (alive_kept(v) && red_degree(v) == 3) { center = v; break; }
        if (center < 0) throw std::logic_error("leaf_pair_paths: missing star center");
        int picked[2] = {-1, -1};
        for (int idx : at[static_cast<size_t>(center)]) {
            if (!pool[static_cast<size_t>(idx)].alive) continue;
            if (picked[0] < 0)
                picked[0] = idx;
            else if (picked[1] < 0)
                picked[1] = idx;
        }
        Path left = seg_oriented(pool[static_cast<size_t>(picked[0])], center);
        Path produced = reverse_path(left);
        const Path right = seg_oriented(pool[static_cast<size_t>(picked[1])], center);
        for (size_t i = 1; i < right.vertices.size(); ++i) {
            produced.vertices.push_back(right.vertices[i]);
            produced.edges.push_back(right.edges[i - 1]);
        }
        out.push_back(std::move(produced));
    } else if (p == 2) {
        for (const ReducedEdge& re : pool) {
            if (!re.alive) continue;
            if (removed[static_cast<size_t>(re.a)] || removed[static_cast<size_t>(re.b)]) continue;
            if (red_degree(re.a) == 1 && red_degree(re.b) == 1) {
                out.push_back(re.seg);
                break;
            }
        }
    }
    return out;
}

std::vector<Path> even_component_paths(const Graph& g, const Subgraph& tree,
                                       const TerminalSet& a) {
    TreeAdjacency t = build_tree(g, tree, "even_component_paths");
    std::vector<VertexId> a_in_tree;
    for (VertexId v : tree.vertices) {
        if (!a.contains(v)) continue;
        if (t.degree[static_cast<size_t>(v)] != 1 && tree.vertices.size() > 1)
            throw std::invalid_argument("even_component_paths: A-vertex '" + g.name(v) +
                                        "' is not a leaf");
        a_in_tree.push_back(v);
    }

    // Bipartition by tree distance parity from the smallest vertex.
    std::vector<int> colour(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<VertexId> queue{tree.vertices.front()};
    colour[static_cast<size_t>(tree.vertices.front())] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const Incidence& inc : t.adj[static_cast<size_t>(v)]) {
            if (colour[static_cast<size_t>(inc.to)] < 0) {
                colour[static_cast<size_t>(inc.to)] = colour[static_cast<size_t>(v)] ^ 1;
                queue.push_back(inc.to);
            }
        }
    }

    std::vector<VertexId> cls[2];
    for (VertexId v : a_in_tree) cls[colour[static_cast<size_t>(v)]].push_back(v);
    int big;
    if (cls[0].size() != cls[1].size())
        big = cls[0].size() > cls[1].size() ? 0 : 1;
    else if (cls[0].empty())
        return {};
    else
        big = colour[static_cast<size_t>(a_in_tree.front())];  // tie: class of smallest id
    const std::vector<VertexId>& chosen = cls[big];
    if (chosen.size() < 2) return {};
    std::vector<char> in_chosen(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : chosen) in_chosen[static_cast<size_t>(v)] = 1;

    // Peel every leaf outside the chosen class until only chosen leaves
    // remain.
    std::vector<int> deg = t.degree;
    std::vector<char> removed(static_cast<size_t>(g.vertex_count()), 0);
    std::deque<VertexId> peel;
    for (VertexId v : tree.vertices)
        if (deg[static_cast<size_t>(v)] == 1 && !in_chosen[static_cast<size_t>(v)])
            peel.push_back(v);
    while (!peel.empty()) {
        VertexId v = peel.front();
        peel.pop_front();
        if (removed[static_cast<size_t>(v)]) continue;
        removed[static_cast<size_t>(v)] = 1;
        for (const Incidence& inc : t.adj[static_cast<size_t>(v)]) {
            if (removed[static_cast<size_t>(inc.to)]) continue;
            if (--deg[static_cast<size_t>(inc.to)] == 1 &&
                !in_chosen[static_cast<size_t>(inc.to)])
                peel.push_back(inc.to);
        }
    }

    Subgraph pruned;
    for (VertexId v : tree.vertices)
        if (!removed[static_cast<size_t>(v)]) pruned.vertices.push_back(v);
    for (EdgeId e : tree.edges) {
        const Edge& ed = g.edge(e);
        if (!removed[static_cast<size_t>(ed.u)] && !removed[static_cast<size_t>(ed.v)])
            pruned.edges.push_back(e);
    }

    // Subcubic trees (the frame case) get the disjoint pairing; otherwise
    // pair the chosen leaves in id order through their tree paths, which
    // keeps the count but may share interior vertices.
    bool subcubic = true;
    for (VertexId v : pruned.vertices)
        if (deg[static_cast<size_t>(v)] > 3) subcubic = false;
    std::vector<Path> out;
    if (subcubic) {
        out = leaf_pair_paths(g, pruned);
    } else {
        TreeAdjacency pt = build_tree(g, pruned, "even_component_paths");
        std::vector<VertexId> alive_chosen;
        for (VertexId v : chosen)
            if (!removed[static_cast<size_t>(v)]) alive_chosen.push_back(v);
        for (size_t i = 0; i + 1 < alive_chosen.size(); i += 2) {
            // Unique tree path between the pair.
            VertexId from = alive_chosen[i], to = alive_chosen[i + 1];
            std::vector<VertexId> parent(static_cast<size_t>(g.vertex_count()), -1);
            std::vector<EdgeId> via(static_cast<size_t>(g.vertex_count()), -1);
            std::deque<VertexId> queue{from};
            parent[static_cast<size_t>(from)] = from;
            while (!queue.empty()) {
                VertexId v = queue.front();
                queue.pop_front();
                for (const Incidence& inc : pt.adj[static_cast<size_t>(v)])
                    if (parent[static_cast<size_t>(inc.to)] < 0) {
                        parent[static_cast<size_t>(inc.to)] = v;
                        via[static_cast<size_t>(inc.to)] = inc.edge;
                        queue.push_back(inc.to);
                    }
            }
            Path p;
            for (VertexId v = to; v != from; v = parent[static_cast<size_t>(v)]) {
                p.vertices.push_back(v);
                p.edges.push_back(via[static_cast<size_t>(v)]);
            }
            p.vertices.push_back(from);
            out.push_back(reverse_path(p));
        }
    }
    for (const Path& p : out) {
        if (p.length() % 2 != 0)
            throw std::logic_error("even_component_paths: produced an odd path");
        if (!in_chosen[static_cast<size_t>(p.front())] ||
            !in_chosen[static_cast<size_t>(p.back())])
            throw std::logic_error("even_component_paths: endpoint outside the chosen class");
    }
    return out;
}

std::vector<Path> tree_edge_disjoint_apaths(const Graph& g, const Subgraph& tree,
                                            const TerminalSet& a) {
    TreeAdjacency t = build_tree(g, tree, "tree_edge_disjoint_apaths");
    int a_count = 0;
    for (VertexId v : tree.vertices)
        if (a.contains(v)) ++a_count;
    if (a_count < 2)
        throw std::invalid_argument("tree_edge_disjoint_apaths: needs |A| >= 2 in the tree");

    VertexId root = tree.vertices.front();
    // Iterative post-order.
    std::vector<VertexId> order;
    std::vector<VertexId> parent(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<EdgeId> parent_edge(static_cast<size_t>(g.vertex_count()), -1);
    {
        std::vector<VertexId> stack{root};
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        seen[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (const Incidence& inc : t.adj[static_cast<size_t>(v)]) {
                if (!seen[static_cast<size_t>(inc.to)]) {
                    seen[static_cast<size_t>(inc.to)] = 1;
                    parent[static_cast<size_t>(inc.to)] = v;
                    parent_edge[static_cast<size_t>(inc.to)] = inc.edge;
                    stack.push_back(inc.to);
                }
            }
        }
        std::reverse(order.begin(), order.end());  // children before parents
    }

    std::vector<std::optional<Path>> dangle(static_cast<size_t>(g.vertex_count()));
    std::vector<Path> out;
    for (VertexId v : order) {
        std::vector<Path> arrived;
        for (const Incidence& inc : t.adj[static_cast<size_t>(v)]) {
            VertexId c = inc.to;
            if (parent[static_cast<size_t>(c)] != v || parent_edge[static_cast<size_t>(c)] != inc.edge)
                continue;  // not the tree-child relation for this edge
            if (dangle[static_cast<size_t>(c)]) {
                Path d = std::move(*dangle[static_cast<size_t>(c)]);
                d.vertices.push_back(v);
                d.edges.push_back(inc.edge);
                arrived.push_back(std::move(d));
            }
        }
        if (a.contains(v)) {
            for (Path& d : arrived) out.push_back(std::move(d));
            dangle[static_cast<size_t>(v)] = Path{{v}, {}};
        } else {
            size_t i = 0;
            for (; i + 1 < arrived.size(); i += 2) {
                // Both dangles end at v; run origin_i -> v -> origin_{i+1}.
                Path joined = arrived[i];
                Path back = reverse_path(arrived[i + 1]);
                for (size_t j = 1; j < back.vertices.size(); ++j) {
                    joined.vertices.push_back(back.vertices[j]);
                    joined.edges.push_back(back.edges[j - 1]);
                }
                out.push_back(std::move(joined));
            }
            if (i < arrived.size()) dangle[static_cast<size_t>(v)] = std::move(arrived[i]);
        }
    }

    if (static_cast<int>(out.size()) < a_count / 2)
        throw std::logic_error("tree_edge_disjoint_apaths: produced fewer than |A|/2 paths");
    return out;
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    if (c.vertices.size() < 2 || c.vertices.size() != c.edges.size()) return false;
    for (VertexId v : c.vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    std::vector<VertexId> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::vector<EdgeId> es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    for (size_t i = 0; i < c.edges.size(); ++i) {
        EdgeId eid = c.edges[i];
        if (eid < 0 || eid >= g.edge_count()) return false;
        const Edge& e = g.edge(eid);
        VertexId from = c.vertices[i];
        VertexId to = c.vertices[(i + 1) % c.vertices.size()];
        if (!((e.u == from && e.v == to) || (e.u == to && e.v == from))) return false;
    }
    return true;
}

namespace {

/// First even simple cycle inside the induced subgraph on `allowed`,
/// deterministic, bounded by the node budget.
std::optional<Cycle> find_even_cycle(const Graph& g, const std::vector<char>& allowed,
                                     long long node_budget) {
    long long nodes = 0;
    int n = g.vertex_count();
    for (VertexId base = 0; base < n; ++base) {
        if (!allowed[static_cast<size_t>(base)]) continue;
        // Simple paths from base through vertices of larger id; closing edge
        // back to base completes the cycle.
        struct StackFrame {
            VertexId vertex;
            size_t next;
        };
        std::vector<char> on_path(static_cast<size_t>(n), 0);
        std::vector<StackFrame> stack{{base, 0}};
        on_path[static_cast<size_t>(base)] = 1;
        Cycle cyc;
        cyc.vertices.push_back(base);
        while (!stack.empty()) {
            StackFrame& top = stack.back();
            const auto& inc = g.incident(top.vertex);
            if (top.next >= inc.size()) {
                on_path[static_cast<size_t>(top.vertex)] = 0;
                stack.pop_back();
                if (!cyc.edges.empty()) {
                    cyc.vertices.pop_back();
                    cyc.edges.pop_back();
                }
                continue;
            }
            const Incidence& step = inc[top.next++];
            if (++nodes > node_budget)
                throw BudgetError("even-cycle search budget exhausted");
            VertexId to = step.to;
            if (to == top.vertex) continue;  // loop edge
            if (to == base) {
                // Closing edge: must differ from the opening edge so a
                // parallel pair counts but a doubled edge does not.
                if (cyc.edges.size() == 1 && step.edge == cyc.edges[0]) continue;
                Cycle found = cyc;
                found.edges.push_back(step.edge);
                if (found.length() % 2 == 0) return found;
                continue;
            }
            if (!allowed[static_cast<size_t>(to)] || to < base ||
                on_path[static_cast<size_t>(to)])
                continue;
            cyc.vertices.push_back(to);
            cyc.edges.push_back(step.edge);
            on_path[static_cast<size_t>(to)] = 1;
            stack.push_back({to, 0});
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Cycle> hub_even_cycles(const Graph& g, VertexId hub, int k,
                                   const SearchBudget& budget) {
    if (g.directed()) throw std::invalid_argument("hub_even_cycles: undirected graphs only");
    if (g.has_loops()) throw std::invalid_argument("hub_even_cycles: loop-free graphs only");
    if (k < 1) throw std::invalid_argument("hub_even_cycles: k must be >= 1");
    if (hub < 0 || hub >= g.vertex_count())
        throw std::invalid_argument("hub_even_cycles: hub out of range");
    if (g.degree(hub) < 6 * k)
        throw std::invalid_argument("hub_even_cycles: hub degree below 6k");

    // Components of g - hub.
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int comp_count = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (s == hub || comp[static_cast<size_t>(s)] >= 0) continue;
        int id = comp_count++;
        std::deque<VertexId> queue{s};
        comp[static_cast<size_t>(s)] = id;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const Incidence& inc : g.incident(v)) {
                if (inc.to == hub || comp[static_cast<size_t>(inc.to)] >= 0) continue;
                comp[static_cast<size_t>(inc.to)] = id;
                queue.push_back(inc.to);
            }
        }
    }

    std::vector<Cycle> out;
    if (comp_count >= k) {
        for (int c = 0; c < comp_count && static_cast<int>(out.size()) < k; ++c) {
            std::vector<char> allowed(static_cast<size_t>(n), 0);
            for (VertexId v = 0; v < n; ++v)
                if (v == hub || comp[static_cast<size_t>(v)] == c)
                    allowed[static_cast<size_t>(v)] = 1;
            auto cyc = find_even_cycle(g, allowed, budget.nodes);
            if (cyc) out.push_back(std::move(*cyc));
        }
        if (static_cast<int>(out.size()) < k)
            throw ExtractionError(
                "hub_even_cycles: a component holds no even cycle within the budget");
        return out;
    }

    // Fewer than k components: subdivide the hub edges per component, take a
    // spanning tree, and pair subdivision vertices of one bipartition class.
    for (int c = 0; c < comp_count; ++c) {
        std::vector<VertexId> members;
        for (VertexId v = 0; v < n; ++v)
            if (comp[static_cast<size_t>(v)] == c) members.push_back(v);

        Graph aux;
        std::vector<VertexId> to_aux(static_cast<size_t>(n), -1);
        for (VertexId v : members)
            to_aux[static_cast<size_t>(v)] = aux.add_vertex("v" + std::to_string(v));
        std::vector<EdgeId> aux_to_orig;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.u == hub || ed.v == hub) continue;
            if (comp[static_cast<size_t>(ed.u)] != c) continue;
            aux.add_edge(to_aux[static_cast<size_t>(ed.u)], to_aux[static_cast<size_t>(ed.v)]);
            aux_to_orig.push_back(e);
        }
        std::vector<VertexId> sub_vertices;
        std::vector<EdgeId> sub_hub_edge;
        for (const Incidence& inc : g.incident(hub)) {
            if (comp[static_cast<size_t>(inc.to)] != c) continue;
            VertexId w = aux.add_vertex("w" + std::to_string(inc.edge));
            aux.add_edge(w, to_aux[static_cast<size_t>(inc.to)]);
            aux_to_orig.push_back(-1);  // half of a subdivided hub edge
            sub_vertices.push_back(w);
            sub_hub_edge.push_back(inc.edge);
        }

        // BFS spanning tree; every subdivision vertex is a leaf of it.
        std::vector<EdgeId> tree_edges;
        std::vector<int> colour(static_cast<size_t>(aux.vertex_count()), -1);
        std::deque<VertexId> queue{0};
        colour[0] = 0;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const Incidence& inc : aux.incident(v)) {
                if (colour[static_cast<size_t>(inc.to)] >= 0) continue;
                colour[static_cast<size_t>(inc.to)] = colour[static_cast<size_t>(v)] ^ 1;
                tree_edges.push_back(inc.edge);
                queue.push_back(inc.to);
            }
        }

        std::vector<VertexId> side[2];
        for (VertexId w : sub_vertices) side[colour[static_cast<size_t>(w)]].push_back(w);
        int big;
        if (side[0].size() != side[1].size())
            big = side[0].size() > side[1].size() ? 0 : 1;
        else if (side[0].empty())
            continue;
        else
            big = colour[static_cast<size_t>(sub_vertices.front())];
        if (side[big].size() < 2) continue;

        std::vector<VertexId> all_aux(static_cast<size_t>(aux.vertex_count()));
        for (size_t i = 0; i < all_aux.size(); ++i) all_aux[i] = static_cast<VertexId>(i);
        Subgraph tree = Subgraph::of(all_aux, tree_edges);
        TerminalSet chosen('A', aux.vertex_count(), side[big]);
        std::vector<Path> aux_paths = tree_edge_disjoint_apaths(aux, tree, chosen);

        std::vector<EdgeId> hub_edge_of(static_cast<size_t>(aux.vertex_count()), -1);
        for (size_t i = 0; i < sub_vertices.size(); ++i)
            hub_edge_of[static_cast<size_t>(sub_vertices[i])] = sub_hub_edge[i];
        std::vector<VertexId> orig_of(static_cast<size_t>(aux.vertex_count()), -1);
        for (VertexId v : members) orig_of[static_cast<size_t>(to_aux[static_cast<size_t>(v)])] = v;

        for (const Path& p : aux_paths) {
            // p runs w1, y1, ..., y2, w2; swap its two end edges for the
            // direct hub edges, giving the cycle hub, y1, ..., y2, hub.
            Cycle cyc;
            cyc.vertices.push_back(hub);
            for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
                cyc.vertices.push_back(orig_of[static_cast<size_t>(p.vertices[i])]);
            cyc.edges.push_back(hub_edge_of[static_cast<size_t>(p.front())]);
            for (size_t i = 1; i + 1 < p.edges.size(); ++i)
                cyc.edges.push_back(aux_to_orig[static_cast<size_t>(p.edges[i])]);
            cyc.edges.push_back(hub_edge_of[static_cast<size_t>(p.back())]);
            if (cyc.length() % 2 != 0)
                throw std::logic_error("hub_even_cycles: produced an odd cycle");
            out.push_back(std::move(cyc));
            if (static_cast<int>(out.size()) == k) break;
        }
        if (static_cast<int>(out.size()) == k) break;
    }

    if (static_cast<int>(out.size()) < k)
        throw ExtractionError("hub_even_cycles: could not assemble k even cycles");
    return out;
}

}  // namespace epframe
