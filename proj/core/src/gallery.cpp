#include "epframe/gallery.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "epframe/errors.hpp"
#include "epframe/format.hpp"

namespace epframe {

std::string GalleryInstance::document() const {
    return serialize_graph(graph, a, b ? &*b : nullptr, labeling ? &*labeling : nullptr, header);
}

namespace {

/// Adds a u-v connection of the given length, subdividing with fresh
/// vertices named s<counter>. Returns the edge ids in u-to-v order.
std::vector<EdgeId> add_path(Graph& g, int& sub_counter, VertexId u, VertexId v, int length) {
    std::vector<EdgeId> edges;
    VertexId prev = u;
    for (int i = 1; i < length; ++i) {
        VertexId mid = g.add_vertex("s" + std::to_string(sub_counter++));
        edges.push_back(g.add_edge(prev, mid));
        prev = mid;
    }
    edges.push_back(g.add_edge(prev, v));
    return edges;
}

std::string kv(const std::string& key, long long value) {
    return key + "=" + std::to_string(value);
}

}  // namespace

GalleryInstance gen_clique_a(int k) {
    if (k < 1) throw std::invalid_argument("gen_clique_a: k must be >= 1");
    GalleryInstance inst;
    int n = 2 * k - 1;
    std::vector<VertexId> all;
    for (int i = 0; i < n; ++i) all.push_back(inst.graph.add_vertex("v" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inst.graph.add_edge(all[static_cast<size_t>(i)],
                                                            all[static_cast<size_t>(j)]);
    inst.a = TerminalSet('A', n, all);
    inst.header = {" family=clique-a " + kv("k", k)};
    return inst;
}

GalleryInstance gen_long_lb(int k, int ell) {
    if (k < 2) throw std::invalid_argument("gen_long_lb: k must be >= 2");
    if (ell < 3) throw std::invalid_argument("gen_long_lb: ell must be >= 3");
    GalleryInstance inst;
    int per = 2 * ell - 3;
    std::vector<VertexId> a_members;
    for (int comp = 0; comp < k - 1; ++comp) {
        std::vector<VertexId> core;
        for (int i = 0; i < per; ++i)
            core.push_back(
                inst.graph.add_vertex("c" + std::to_string(comp) + "v" + std::to_string(i)));
        std::vector<VertexId> pendants;
        for (int i = 0; i < per; ++i)
            pendants.push_back(
                inst.graph.add_vertex("c" + std::to_string(comp) + "a" + std::to_string(i)));
        for (int i = 0; i < per; ++i)
            for (int j = i + 1; j < per; ++j)
                inst.graph.add_edge(core[static_cast<size_t>(i)], core[static_cast<size_t>(j)]);
        for (int i = 0; i < per; ++i)
            inst.graph.add_edge(core[static_cast<size_t>(i)], pendants[static_cast<size_t>(i)]);
        a_members.insert(a_members.end(), pendants.begin(), pendants.end());
    }
    inst.a = TerminalSet('A', inst.graph.vertex_count(), a_members);
    inst.header = {" family=long-lb " + kv("k", k) + " " + kv("ell", ell)};
    return inst;
}

GridModParams validate_grid_mod_params(int m, int d, int s) {
    if (m <= 4) throw std::invalid_argument("grid-mod: m must be composite and > 4");
    int p = 0;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) { p = q; break; }
    if (p == 0) throw std::invalid_argument("grid-mod: m must be composite, m > 4");
    if (d < 0 || d >= m) throw std::invalid_argument("grid-mod: d must lie in [0, m)");
    if (s < 2) throw std::invalid_argument("grid-mod: s must be >= 2");
    GridModParams params;
    params.m = m;
    params.d = d;
    params.s = s;
    params.p = p;
    params.b = m / p;
    params.c = m - m / p - 1;
    return params;
}

GridModInstance gen_grid_mod(int m, int d, int s) {
    GridModInstance inst;
    inst.params = validate_grid_mod_params(m, d, s);
    Graph& g = inst.base.graph;
    int sub = 0;

    // Which of the three residue-shifting branches applies.
    int x = -1;
    for (int cand = 0; cand < m; ++cand)
        if ((2 * cand) % m == d) { x = cand; break; }
    int left_len, right_len;
    if (x >= 0) {
        inst.branch = 0;
        inst.x = x;
        left_len = x + 1;
        right_len = inst.params.c + x;
    } else if (((d % m) != ((m / 2 - 2) % m + m) % m)) {
        inst.branch = 1;  // d odd, m even, d != m/2 - 2
        left_len = d + 1;
        right_len = inst.params.c;
    } else {
        inst.branch = 2;
        left_len = 1;
        right_len = inst.params.c + d;
    }

    // Grid vertices, row 0 at the top.
    std::vector<std::vector<VertexId>> grid(static_cast<size_t>(s));
    for (int r = 0; r < s; ++r)
        for (int col = 0; col < s; ++col)
            grid[static_cast<size_t>(r)].push_back(
                g.add_vertex("g" + std::to_string(r) + "_" + std::to_string(col)));

    int top_index = 0;
    std::vector<std::pair<std::vector<EdgeId>, int>> tagged_groups;
    for (int r = 0; r < s; ++r) {
        for (int col = 0; col + 1 < s; ++col) {
            int len = r == 0 ? inst.params.b : inst.params.m;
            auto edges = add_path(g, sub, grid[static_cast<size_t>(r)][static_cast<size_t>(col)],
                                  grid[static_cast<size_t>(r)][static_cast<size_t>(col + 1)], len);
            if (r == 0) tagged_groups.emplace_back(edges, top_index++);
        }
    }
    for (int r = 0; r + 1 < s; ++r)
        for (int col = 0; col < s; ++col)
            add_path(g, sub, grid[static_cast<size_t>(r)][static_cast<size_t>(col)],
                     grid[static_cast<size_t>(r + 1)][static_cast<size_t>(col)], inst.params.m);

    std::vector<VertexId> a_members;
    std::vector<std::pair<VertexId, char>> sides;
    for (int r = 0; r < s; ++r) {
        VertexId t = g.add_vertex("aL" + std::to_string(r));
        add_path(g, sub, t, grid[static_cast<size_t>(r)][0], left_len);
        a_members.push_back(t);
        sides.emplace_back(t, 'L');
    }
    for (int r = 0; r < s; ++r) {
        VertexId t = g.add_vertex("aR" + std::to_string(r));
        add_path(g, sub, grid[static_cast<size_t>(r)][static_cast<size_t>(s - 1)], t, right_len);
        a_members.push_back(t);
        sides.emplace_back(t, 'R');
    }

    inst.base.a = TerminalSet('A', g.vertex_count(), a_members);
    inst.base.header = {" family=grid-mod " + kv("m", m) + " " + kv("d", d) + " " + kv("s", s)};
    inst.top_group.assign(static_cast<size_t>(g.edge_count()), -1);
    for (const auto& [edges, index] : tagged_groups)
        for (EdgeId e : edges) inst.top_group[static_cast<size_t>(e)] = index;
    inst.terminal_side.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& [v, side] : sides) inst.terminal_side[static_cast<size_t>(v)] = side;
    return inst;
}

namespace {

struct WallGeometry {
    std::vector<std::vector<VertexId>> rows;      // row j, x ascending; row r is the top
    std::vector<std::pair<int, int>> coord;       // by vertex: (x, row)
};

/// Standard elementary wall with r x r bricks: r+1 horizontal rows with
/// vertical rungs on alternating columns. Horizontal edges run left to
/// right, verticals top to bottom, which fixes the reference orientation
/// for directed labelings.
WallGeometry build_wall(Graph& g, int r) {
    WallGeometry w;
    w.rows.resize(static_cast<size_t>(r + 1));
    auto add = [&](int x, int j) {
        VertexId v = g.add_vertex("w" + std::to_string(x) + "_" + std::to_string(j));
        w.rows[static_cast<size_t>(j)].push_back(v);
        w.coord.emplace_back(x, j);
        return v;
    };
    std::vector<std::vector<int>> xs(static_cast<size_t>(r + 1));
    for (int x = 1; x <= 2 * r + 1; ++x) xs[0].push_back(x);
    for (int j = 1; j < r; ++j)
        for (int x = 0; x <= 2 * r + 1; ++x) xs[static_cast<size_t>(j)].push_back(x);
    if (r % 2 == 0)
        for (int x = 0; x <= 2 * r; ++x) xs[static_cast<size_t>(r)].push_back(x);
    else
        for (int x = 1; x <= 2 * r + 1; ++x) xs[static_cast<size_t>(r)].push_back(x);

    std::vector<std::vector<std::pair<int, VertexId>>> by_row(static_cast<size_t>(r + 1));
    for (int j = 0; j <= r; ++j)
        for (int x : xs[static_cast<size_t>(j)]) by_row[static_cast<size_t>(j)].emplace_back(x, add(x, j));

    auto find_vertex = [&](int x, int j) -> VertexId {
        for (const auto& [xx, v] : by_row[static_cast<size_t>(j)])
            if (xx == x) return v;
        return -1;
    };
    for (int j = 0; j <= r; ++j) {
        const auto& row = by_row[static_cast<size_t>(j)];
        for (size_t i = 0; i + 1 < row.size(); ++i) g.add_edge(row[i].second, row[i + 1].second);
    }
    for (int j = 0; j < r; ++j) {
        int start = j % 2 == 0 ? 1 : 0;
        for (int x = start; x <= 2 * r + 1; x += 2) {
            VertexId lower = find_vertex(x, j);
            VertexId upper = find_vertex(x, j + 1);
            if (lower >= 0 && upper >= 0) g.add_edge(upper, lower);  // top to bottom
        }
    }
    return w;
}

}  // namespace

GalleryInstance gen_wall_aba(int r) {
    if (r < 2) throw std::invalid_argument("gen_wall_aba: r must be >= 2");
    GalleryInstance inst;
    Graph& g = inst.graph;
    WallGeometry w = build_wall(g, r);

    VertexId a1 = g.add_vertex("aL");
    VertexId a2 = g.add_vertex("aR");
    for (int j = 0; j <= r; ++j) g.add_edge(a1, w.rows[static_cast<size_t>(j)].front());
    for (int j = 0; j <= r; ++j) g.add_edge(w.rows[static_cast<size_t>(j)].back(), a2);

    inst.a = TerminalSet('A', g.vertex_count(), {a1, a2});
    inst.b = TerminalSet('B', g.vertex_count(), w.rows[static_cast<size_t>(r)]);
    inst.header = {" family=wall-aba " + kv("r", r)};
    return inst;
}

namespace {

struct ParitySkeleton {
    Graph g;
    VertexId a1 = -1, a2 = -1;
    std::vector<EdgeId> grey;
    std::vector<EdgeId> a1_edges;  // all edges incident with a1
};

/// Shared skeleton for the parity and zero-label walls: grey detours on the
/// top row plus attachment lengths in {1, 2} chosen so that every grey-free
/// a1-a2 path has parity alpha + beta.
ParitySkeleton build_parity_skeleton(int r, int alpha, int beta) {
    ParitySkeleton sk;
    Graph& g = sk.g;
    WallGeometry w = build_wall(g, r);
    int sub = 0;

    const auto& top = w.rows[static_cast<size_t>(r)];
    for (size_t i = 1; i + 2 < top.size(); i += 4)
        sk.grey.push_back(g.add_edge(top[i], top[i + 2]));

    sk.a1 = g.add_vertex("aL");
    sk.a2 = g.add_vertex("aR");
    auto colour = [&](VertexId v) {
        return (w.coord[static_cast<size_t>(v)].first + w.coord[static_cast<size_t>(v)].second) % 2;
    };
    for (int j = 0; j <= r; ++j) {
        VertexId u = w.rows[static_cast<size_t>(j)].front();
        int len = (1 + colour(u)) % 2 == alpha ? 1 : 2;
        auto edges = add_path(g, sub, sk.a1, u, len);
        sk.a1_edges.push_back(edges.front());
    }
    for (int j = 0; j <= r; ++j) {
        VertexId u = w.rows[static_cast<size_t>(j)].back();
        int len = (1 + colour(u)) % 2 == beta ? 1 : 2;
        add_path(g, sub, u, sk.a2, len);
    }
    return sk;
}

}  // namespace

WallParityInstance gen_wall_parity(int r, Parity target) {
    if (r < 2) throw std::invalid_argument("gen_wall_parity: r must be >= 2");
    int target_bit = target == Parity::Odd ? 1 : 0;
    // Grey-free paths must land on the opposite parity.
    int sigma = 1 - target_bit;
    ParitySkeleton sk = build_parity_skeleton(r, 0, sigma);

    WallParityInstance inst;
    inst.target = target;
    inst.grey_edges = sk.grey;
    inst.base.graph = std::move(sk.g);
    const Graph& g = inst.base.graph;
    inst.base.a = TerminalSet('A', g.vertex_count(), {sk.a1, sk.a2});
    std::vector<VertexId> b_members;
    for (EdgeId e : sk.grey) {
        b_members.push_back(g.edge(e).u);
        b_members.push_back(g.edge(e).v);
    }
    inst.base.b = TerminalSet('B', g.vertex_count(), b_members);
    std::string parity_name = target == Parity::Odd ? "odd" : "even";

    if (r <= 3) {
        // Construction-time check: target-parity A-paths exist and every one
        // of them uses a grey edge.
        OracleBudget budget;
        budget.max_vertices = g.vertex_count();
        budget.max_nodes = 50'000'000;
        PathSpec spec = target == Parity::Odd ? PathSpec::odd() : PathSpec::even();
        std::vector<char> grey_mask(static_cast<size_t>(g.edge_count()), 0);
        for (EdgeId e : sk.grey) grey_mask[static_cast<size_t>(e)] = 1;
        auto paths = enumerate_paths(g, inst.base.a, nullptr, nullptr, spec, budget);
        if (paths.empty())
            throw ExtractionError("gen_wall_parity: no " + parity_name +
                                  " A-path exists; calibration failed");
        for (const Path& p : paths) {
            bool uses_grey = false;
            for (EdgeId e : p.edges)
                if (grey_mask[static_cast<size_t>(e)]) { uses_grey = true; break; }
            if (!uses_grey)
                throw ExtractionError("gen_wall_parity: a grey-free A-path has the target parity; "
                                      "calibration failed");
        }
        inst.verified = true;
        inst.base.header = {" family=wall-parity " + kv("r", r) + " parity=" + parity_name};
    } else {
        inst.verified = false;
        inst.base.header = {" family=wall-parity " + kv("r", r) + " parity=" + parity_name,
                            " parity-verification=skipped (r > 3)"};
    }
    return inst;
}

ZeroWallInstance gen_zero_label_wall(int r, const GroupSpec& group, GroupSpec::Value mu,
                                     bool directed_labels) {
    if (r < 2) throw std::invalid_argument("gen_zero_label_wall: r must be >= 2");
    GroupSpec::Value mu_norm = group.normalize(mu);
    if (group.is_zero(mu_norm))
        throw std::invalid_argument("gen_zero_label_wall: mu must be a non-zero group element");

    ParitySkeleton sk = build_parity_skeleton(r, 0, 0);
    ZeroWallInstance inst;
    inst.grey_edges = sk.grey;
    inst.base.graph = std::move(sk.g);
    const Graph& g = inst.base.graph;
    inst.base.a = TerminalSet('A', g.vertex_count(), {sk.a1, sk.a2});

    EdgeLabeling lab;
    lab.group = group;
    lab.mode = directed_labels ? LabelMode::Directed : LabelMode::Undirected;
    lab.weights.assign(static_cast<size_t>(g.edge_count()), group.zero());
    for (EdgeId e : sk.a1_edges) lab.weights[static_cast<size_t>(e)] = mu_norm;
    for (EdgeId e : sk.grey) lab.weights[static_cast<size_t>(e)] = group.neg(mu_norm);
    inst.base.labeling = std::move(lab);
    inst.base.header = {" family=zero-wall " + kv("r", r) + " mu=" + group.format(mu_norm) +
                        (directed_labels ? " mode=directed" : " mode=undirected")};
    return inst;
}

GalleryInstance gen_directed_grid(int s) {
    if (s < 2) throw std::invalid_argument("gen_directed_grid: s must be >= 2");
    GalleryInstance inst;
    inst.graph = Graph(true);
    Graph& g = inst.graph;

    // Column-major grid, row s at the top.
    std::vector<std::vector<VertexId>> at(static_cast<size_t>(s + 1),
                                          std::vector<VertexId>(static_cast<size_t>(s + 1), -1));
    for (int col = 1; col <= s; ++col)
        for (int row = 1; row <= s; ++row)
            at[static_cast<size_t>(col)][static_cast<size_t>(row)] =
                g.add_vertex("g" + std::to_string(col) + "_" + std::to_string(row));

    for (int col = 1; col < s; ++col)
        for (int row = 1; row <= s; ++row)
            g.add_edge(at[static_cast<size_t>(col)][static_cast<size_t>(row)],
                       at[static_cast<size_t>(col + 1)][static_cast<size_t>(row)]);
    for (int col = 1; col <= s; ++col)
        for (int row = 1; row < s; ++row) {
            if (col % 2 == 1)
                g.add_edge(at[static_cast<size_t>(col)][static_cast<size_t>(row)],
                           at[static_cast<size_t>(col)][static_cast<size_t>(row + 1)]);
            else
                g.add_edge(at[static_cast<size_t>(col)][static_cast<size_t>(row + 1)],
                           at[static_cast<size_t>(col)][static_cast<size_t>(row)]);
        }

    std::vector<VertexId> a_members;
    for (int row = 1; row <= s; ++row) {
        VertexId t = g.add_vertex("aL" + std::to_string(row));
        g.add_edge(t, at[1][static_cast<size_t>(row)]);
        a_members.push_back(t);
    }
    for (int row = 1; row <= s; ++row) {
        VertexId t = g.add_vertex("aR" + std::to_string(row));
        g.add_edge(at[static_cast<size_t>(s)][static_cast<size_t>(row)], t);
        a_members.push_back(t);
    }
    std::vector<VertexId> top;
    for (int col = 1; col <= s; ++col) top.push_back(at[static_cast<size_t>(col)][static_cast<size_t>(s)]);

    inst.a = TerminalSet('A', g.vertex_count(), a_members);
    inst.b = TerminalSet('B', g.vertex_count(), top);
    inst.header = {" family=directed-grid " + kv("s", s)};
    return inst;
}

EvenAbInstance gen_even_abpath_counterexample(int s) {
    if (s < 2) throw std::invalid_argument("gen_even_abpath_counterexample: s must be >= 2");
    EvenAbInstance inst;
    Graph& g = inst.base.graph;
    int sub = 0;

    std::vector<std::vector<VertexId>> grid(static_cast<size_t>(s));
    for (int r = 0; r < s; ++r)
        for (int col = 0; col < s; ++col)
            grid[static_cast<size_t>(r)].push_back(
                g.add_vertex("g" + std::to_string(r) + "_" + std::to_string(col)));

    // Top-row edges are odd (length 1), everything else even (length 2), the
    // two attachment lengths sum to an odd number.
    int top_index = 0;
    std::vector<std::pair<std::vector<EdgeId>, int>> tagged;
    for (int r = 0; r < s; ++r)
        for (int col = 0; col + 1 < s; ++col) {
            int len = r == 0 ? 1 : 2;
            auto edges = add_path(g, sub, grid[static_cast<size_t>(r)][static_cast<size_t>(col)],
                                  grid[static_cast<size_t>(r)][static_cast<size_t>(col + 1)], len);
            if (r == 0) tagged.emplace_back(edges, top_index++);
        }
    for (int r = 0; r + 1 < s; ++r)
        for (int col = 0; col < s; ++col)
            add_path(g, sub, grid[static_cast<size_t>(r)][static_cast<size_t>(col)],
                     grid[static_cast<size_t>(r + 1)][static_cast<size_t>(col)], 2);

    std::vector<VertexId> a_members, b_members;
    for (int r = 0; r < s; ++r) {
        VertexId t = g.add_vertex("aL" + std::to_string(r));
        add_path(g, sub, t, grid[static_cast<size_t>(r)][0], 1);
        a_members.push_back(t);
    }
    for (int r = 0; r < s; ++r) {
        VertexId t = g.add_vertex("bR" + std::to_string(r));
        add_path(g, sub, grid[static_cast<size_t>(r)][static_cast<size_t>(s - 1)], t, 2);
        b_members.push_back(t);
    }
    inst.base.a = TerminalSet('A', g.vertex_count(), a_members);
    inst.base.b = TerminalSet('B', g.vertex_count(), b_members);
    inst.top_group.assign(static_cast<size_t>(g.edge_count()), -1);
    for (const auto& [edges, index] : tagged)
        for (EdgeId e : edges) inst.top_group[static_cast<size_t>(e)] = index;

    if (s <= 3) {
        OracleBudget budget;
        budget.max_vertices = g.vertex_count();
        budget.max_nodes = 50'000'000;
        auto evens = enumerate_paths(g, inst.base.a, &*inst.base.b, nullptr,
                                     PathSpec::even_ab(), budget);
        if (evens.empty())
            throw ExtractionError("gen_even_abpath_counterexample: no even A-B path exists");
        for (const Path& p : evens) {
            bool top = false;
            for (EdgeId e : p.edges)
                if (inst.top_group[static_cast<size_t>(e)] >= 0) { top = true; break; }
            if (!top)
                throw ExtractionError(
                    "gen_even_abpath_counterexample: an even A-B path avoids the top edges");
        }
        inst.verified = true;
        inst.base.header = {" family=even-ab " + kv("s", s)};
    } else {
        inst.verified = false;
        inst.base.header = {" family=even-ab " + kv("s", s),
                            " parity-verification=skipped (s > 3)"};
    }
    return inst;
}

namespace {

struct PathClass {
    bool crossing = false;
    int tops = 0;
};

PathClass classify(const GridModInstance& inst, const Path& p) {
    PathClass out;
    char side_front = inst.terminal_side[static_cast<size_t>(p.front())];
    char side_back = inst.terminal_side[static_cast<size_t>(p.back())];
    out.crossing = side_front != side_back;
    std::set<int> groups;
    for (EdgeId e : p.edges)
        if (inst.top_group[static_cast<size_t>(e)] >= 0)
            groups.insert(inst.top_group[static_cast<size_t>(e)]);
    out.tops = static_cast<int>(groups.size());
    return out;
}

std::vector<Path> enumerate_grid_paths(const GridModInstance& inst, const OracleBudget& budget) {
    OracleBudget b = budget;
    b.max_vertices = std::max(b.max_vertices, inst.base.graph.vertex_count());
    return enumerate_paths(inst.base.graph, inst.base.a, nullptr, nullptr, PathSpec::plain(), b);
}

}  // namespace

std::string audit_grid_mod_residues(const GridModInstance& inst, const OracleBudget& budget) {
    if (inst.branch != 0 || inst.x != 0)
        return "residue audit applies to the unmodified family only (x = 0)";
    int m = inst.params.m, b = inst.params.b;
    for (const Path& p : enumerate_grid_paths(inst, budget)) {
        PathClass cls = classify(inst, p);
        int len = p.length() % m;
        if (!cls.crossing) {
            if (len == 0)
                return "same-side path of length 0 mod m: " + std::to_string(p.length());
        } else if (cls.tops == 0) {
            if (len != (m - b) % m)
                return "crossing path without top edges has length " + std::to_string(p.length()) +
                       " != m - m/p (mod m)";
        } else {
            if (len != ((cls.tops - 1) * b) % m)
                return "crossing path with " + std::to_string(cls.tops) +
                       " top edges has length " + std::to_string(p.length()) +
                       " != (t-1)m/p (mod m)";
        }
    }
    return {};
}

std::string audit_dmodm(const GridModInstance& inst, const OracleBudget& budget) {
    int m = inst.params.m, d = inst.params.d;
    bool proper_hit = false;
    for (const Path& p : enumerate_grid_paths(inst, budget)) {
        PathClass cls = classify(inst, p);
        bool proper = cls.crossing && cls.tops >= 1;
        int len = p.length() % m;
        if (!proper && len == d)
            return "improper path of length " + std::to_string(p.length()) + " = d (mod m)";
        if (proper && len == d) proper_hit = true;
    }
    if (!proper_hit) return "no proper path of length d (mod m) exists";
    return {};
}

}  // namespace epframe
