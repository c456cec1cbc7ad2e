#include "epframe/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "epframe/errors.hpp"

namespace epframe {

namespace {

struct DfsNode {
    VertexId vertex;
    size_t next;
};

}  // namespace

std::vector<Path> enumerate_paths(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                                  const EdgeLabeling* lab, const PathSpec& spec,
                                  const OracleBudget& budget) {
    if (spec.needs_b() && !b)
        throw std::invalid_argument(path_kind_name(spec.kind) + " requires a B terminal set");
    if (spec.needs_labeling() && !lab)
        throw std::invalid_argument(path_kind_name(spec.kind) + " requires an edge labeling");
    if (spec.directed_kind() && !g.directed())
        throw std::invalid_argument(path_kind_name(spec.kind) + " requires a directed graph");
    if (g.vertex_count() > budget.max_vertices)
        throw BudgetError("graph exceeds the oracle vertex budget of " +
                          std::to_string(budget.max_vertices) + " (raise the budget to override)");

    // Endpoint and interior rules: A-kinds start and end in A with interiors
    // outside A; even-ab runs from A to B with interiors in neither.
    bool ab_kind = spec.kind == PathKind::EvenAb;
    auto may_end = [&](VertexId v) { return ab_kind ? b->contains(v) : a.contains(v); };
    auto interior_blocked = [&](VertexId v) {
        return a.contains(v) || (ab_kind && b->contains(v));
    };

    long long nodes = 0;
    std::vector<Path> out;
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId start : a.members()) {
        std::vector<DfsNode> stack{{start, 0}};
        Path path;
        path.vertices.push_back(start);
        on_path[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            DfsNode& top = stack.back();
            const auto& inc = g.incident(top.vertex);
            if (top.next >= inc.size()) {
                on_path[static_cast<size_t>(top.vertex)] = 0;
                stack.pop_back();
                if (!path.edges.empty()) {
                    path.vertices.pop_back();
                    path.edges.pop_back();
                }
                continue;
            }
            const Incidence& step = inc[top.next++];
            if (g.directed() && !step.forward) continue;
            if (++nodes > budget.max_nodes)
                throw BudgetError("oracle node budget exhausted while enumerating paths");
            VertexId to = step.to;
            if (on_path[static_cast<size_t>(to)]) continue;
            if (may_end(to)) {
                // Undirected A-kinds are canonicalized by enumerating only
                // from the smaller endpoint.
                if (!ab_kind && !g.directed() && to < start) continue;
                path.vertices.push_back(to);
                path.edges.push_back(step.edge);
                if (matches_spec(spec, g, a, b, lab, path)) out.push_back(path);
                path.vertices.pop_back();
                path.edges.pop_back();
                continue;
            }
            if (interior_blocked(to)) continue;
            path.vertices.push_back(to);
            path.edges.push_back(step.edge);
            on_path[static_cast<size_t>(to)] = 1;
            stack.push_back({to, 0});
        }
    }
    return out;
}

namespace {

/// Fixed-width bitmask over vertices or edges for disjointness tests.
struct Mask {
    std::vector<std::uint64_t> bits;

    explicit Mask(int universe) : bits(static_cast<size_t>((universe + 63) / 64), 0) {}
    void set(int i) { bits[static_cast<size_t>(i) / 64] |= 1ULL << (i % 64); }
    bool intersects(const Mask& other) const {
        for (size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & other.bits[i]) return true;
        return false;
    }
    void merge(const Mask& other) {
        for (size_t i = 0; i < bits.size(); ++i) bits[i] |= other.bits[i];
    }
    void subtract(const Mask& other) {
        for (size_t i = 0; i < bits.size(); ++i) bits[i] &= ~other.bits[i];
    }
};

struct PackingSearch {
    const std::vector<Mask>& masks;
    long long node_budget;
    long long nodes = 0;
    int limit;
    int best = 0;
    std::vector<int> chosen;
    std::vector<int> best_set;

    void run(size_t idx, Mask& used) {
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
        }
        if (best >= limit && limit > 0) return;
        if (idx >= masks.size()) return;
        if (static_cast<int>(chosen.size() + (masks.size() - idx)) <= best) return;
        if (++nodes > node_budget)
            throw BudgetError("oracle node budget exhausted during packing search");
        if (!used.intersects(masks[idx])) {
            used.merge(masks[idx]);
            chosen.push_back(static_cast<int>(idx));
            run(idx + 1, used);
            chosen.pop_back();
            used.subtract(masks[idx]);
            if (best >= limit && limit > 0) return;
        }
        run(idx + 1, used);
    }
};

}  // namespace

Packing max_disjoint(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                     const EdgeLabeling* lab, const PathSpec& spec, int limit,
                     const OracleBudget& budget) {
    std::vector<Path> paths = enumerate_paths(g, a, b, lab, spec, budget);
    int universe = spec.disjointness == Disjointness::Vertex ? g.vertex_count() : g.edge_count();
    std::vector<Mask> masks;
    masks.reserve(paths.size());
    for (const Path& p : paths) {
        Mask m(universe);
        if (spec.disjointness == Disjointness::Vertex)
            for (VertexId v : p.vertices) m.set(v);
        else
            for (EdgeId e : p.edges) m.set(e);
        masks.push_back(std::move(m));
    }
    PackingSearch search{masks, budget.max_nodes, 0,
                         limit > 0 ? limit : static_cast<int>(paths.size()), 0, {}, {}};
    Mask used(universe);
    search.run(0, used);
    Packing out;
    out.size = search.best;
    for (int idx : search.best_set) out.witness.push_back(paths[static_cast<size_t>(idx)]);
    return out;
}

namespace {

struct HittingBacktrack {
    const std::vector<std::vector<int>>& path_elems;
    long long node_budget;
    long long nodes = 0;
    std::vector<char> chosen;  // by element id
    std::vector<int> stack;

    bool covered(const std::vector<int>& elems) const {
        for (int e : elems)
            if (chosen[static_cast<size_t>(e)]) return true;
        return false;
    }

    bool search(int remaining) {
        if (++nodes > node_budget)
            throw BudgetError("oracle node budget exhausted during hitting-set search");
        const std::vector<int>* open = nullptr;
        for (const auto& elems : path_elems) {
            if (!covered(elems)) {
                open = &elems;
                break;
            }
        }
        if (!open) return true;
        if (remaining == 0) return false;
        for (int e : *open) {
            if (chosen[static_cast<size_t>(e)]) continue;
            chosen[static_cast<size_t>(e)] = 1;
            stack.push_back(e);
            if (search(remaining - 1)) return true;
            stack.pop_back();
            chosen[static_cast<size_t>(e)] = 0;
        }
        return false;
    }
};

}  // namespace

HittingSearch min_hitting_set(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                              const EdgeLabeling* lab, const PathSpec& spec, Disjointness mode,
                              int cap, const OracleBudget& budget) {
    std::vector<Path> paths = enumerate_paths(g, a, b, lab, spec, budget);
    HittingSearch out;
    if (paths.empty()) {
        out.found = true;
        return out;
    }
    int universe = mode == Disjointness::Vertex ? g.vertex_count() : g.edge_count();
    std::vector<std::vector<int>> path_elems;
    path_elems.reserve(paths.size());
    for (const Path& p : paths) {
        std::vector<int> elems;
        if (mode == Disjointness::Vertex)
            elems.assign(p.vertices.begin(), p.vertices.end());
        else
            elems.assign(p.edges.begin(), p.edges.end());
        path_elems.push_back(std::move(elems));
    }
    if (cap < 0) cap = universe;
    HittingBacktrack bt{path_elems, budget.max_nodes, 0,
                        std::vector<char>(static_cast<size_t>(universe), 0), {}};
    for (int size = 0; size <= cap; ++size) {
        bt.stack.clear();
        std::fill(bt.chosen.begin(), bt.chosen.end(), 0);
        if (bt.search(size)) {
            out.found = true;
            std::sort(bt.stack.begin(), bt.stack.end());
            if (mode == Disjointness::Vertex)
                out.vertices.assign(bt.stack.begin(), bt.stack.end());
            else
                out.edges.assign(bt.stack.begin(), bt.stack.end());
            return out;
        }
    }
    return out;  // none within cap
}

std::string VerifyReport::to_text() const {
    std::ostringstream text;
    text << "status: " << (pass ? "pass" : "fail") << '\n';
    for (const std::string& v : violations) text << "violation: " << v << '\n';
    for (const std::string& n : notes) text << "note: " << n << '\n';
    return text.str();
}

namespace {

std::string path_display(const Graph& g, const Path& p) {
    std::string out;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) out += ' ';
        out += g.name(p.vertices[i]);
    }
    return out;
}

/// First unsatisfied clause of the variant predicate, or empty.
std::string explain_path_mismatch(const PathSpec& spec, const Graph& g, const TerminalSet& a,
                                  const Path& p, int index) {
    std::string tag = "path " + std::to_string(index);
    if (p.length() < 1) return tag + " has no edges";
    if (!a.contains(p.front()))
        return tag + " endpoint '" + g.name(p.front()) + "' not in A";
    if (!a.contains(p.back()))
        return tag + " endpoint '" + g.name(p.back()) + "' not in A";
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
        if (a.contains(p.vertices[i]))
            return tag + " interior vertex '" + g.name(p.vertices[i]) + "' lies in A";
    switch (spec.kind) {
        case PathKind::Long:
            if (p.length() < spec.min_length)
                return tag + " is shorter than " + std::to_string(spec.min_length);
            break;
        case PathKind::Even:
            if (p.length() % 2 != 0) return tag + " has odd length";
            break;
        default:
            break;
    }
    return {};
}

}  // namespace

VerifyReport verify_certificate(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                                const EdgeLabeling* lab, const RawCertificate& cert,
                                const OracleBudget& budget) {
    VerifyReport report;
    auto fail = [&](std::string clause) {
        report.pass = false;
        report.violations.push_back(std::move(clause));
    };

    PathSpec spec;
    if (cert.variant == "gallai") {
        spec = PathSpec::plain();
    } else if (cert.variant == "long") {
        if (!cert.ell) {
            fail("long certificate without ell");
            return report;
        }
        spec = PathSpec::long_paths(*cert.ell);
    } else if (cert.variant == "even") {
        spec = PathSpec::even();
    } else if (cert.variant == "mader-edge") {
        spec = PathSpec::plain(Disjointness::Edge);
    } else {
        fail("unknown variant '" + cert.variant + "'");
        return report;
    }
    if (cert.k < 1) fail("k must be >= 1");

    long long bound_formula;
    if (cert.variant == "gallai")
        bound_formula = 4LL * cert.k;
    else if (cert.variant == "long")
        bound_formula = 4LL * cert.k * (cert.ell ? *cert.ell : 0);
    else if (cert.variant == "even")
        bound_formula = 10LL * cert.k;
    else {
        int s = 0;
        while ((1LL << s) < a.size()) ++s;
        bound_formula = static_cast<long long>(cert.k) * (a.size() <= 1 ? 0 : s);
    }

    // Adjacency lookup with multiplicity, so parallel edges can be assigned
    // to distinct paths when checking edge-disjointness.
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pair_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        VertexId u = ed.u, v = ed.v;
        if (g.directed()) {
            pair_edges[{u, v}].push_back(e);
        } else {
            if (v < u) std::swap(u, v);
            pair_edges[{u, v}].push_back(e);
        }
    }
    auto key_for = [&](VertexId x, VertexId y) {
        if (!g.directed() && y < x) std::swap(x, y);
        return std::make_pair(x, y);
    };

    if (cert.outcome == "paths") {
        if (static_cast<int>(cert.paths.size()) < cert.k)
            fail("only " + std::to_string(cert.paths.size()) + " paths for k = " +
                 std::to_string(cert.k));
        std::map<std::pair<VertexId, VertexId>, int> pair_usage;
        std::vector<Path> resolved;
        for (size_t i = 0; i < cert.paths.size(); ++i) {
            const auto& names = cert.paths[i];
            Path p;
            bool ok = true;
            for (const std::string& name : names) {
                auto v = g.find_vertex(name);
                if (!v) {
                    fail("unknown vertex '" + name + "'");
                    ok = false;
                    break;
                }
                p.vertices.push_back(*v);
            }
            if (!ok) continue;
            if (p.vertices.size() < 2) {
                fail("path " + std::to_string(i) + " has fewer than two vertices");
                continue;
            }
            for (size_t j = 0; ok && j + 1 < p.vertices.size(); ++j) {
                auto key = key_for(p.vertices[j], p.vertices[j + 1]);
                auto it = pair_edges.find(key);
                if (it == pair_edges.end()) {
                    fail("path " + std::to_string(i) + ": no edge between '" +
                         g.name(p.vertices[j]) + "' and '" + g.name(p.vertices[j + 1]) + "'");
                    ok = false;
                    break;
                }
                int used = pair_usage[key]++;
                if (spec.disjointness == Disjointness::Edge &&
                    used >= static_cast<int>(it->second.size())) {
                    fail("paths reuse the edge between '" + g.name(p.vertices[j]) + "' and '" +
                         g.name(p.vertices[j + 1]) + "'");
                    ok = false;
                    break;
                }
                p.edges.push_back(it->second[static_cast<size_t>(used) % it->second.size()]);
            }
            if (!ok) continue;
            std::vector<VertexId> sorted = p.vertices;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                fail("path " + std::to_string(i) + " repeats a vertex");
                continue;
            }
            std::string clause = explain_path_mismatch(spec, g, a, p, static_cast<int>(i));
            if (!clause.empty()) fail(clause);
            resolved.push_back(std::move(p));
        }
        if (spec.disjointness == Disjointness::Vertex) {
            std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
            for (size_t i = 0; i < resolved.size(); ++i) {
                for (VertexId v : resolved[i].vertices) {
                    if (owner[static_cast<size_t>(v)] >= 0) {
                        fail("paths " + std::to_string(owner[static_cast<size_t>(v)]) + " and " +
                             std::to_string(i) + " share vertex '" + g.name(v) + "'");
                    } else {
                        owner[static_cast<size_t>(v)] = static_cast<int>(i);
                    }
                }
            }
        }
        return report;
    }

    if (cert.outcome != "hitting") {
        fail("outcome must be 'paths' or 'hitting'");
        return report;
    }
    bool want_edge = cert.variant == "mader-edge";
    if (cert.hit_type != (want_edge ? "edge" : "vertex"))
        fail("hitting type '" + cert.hit_type + "' does not match variant");
    if (static_cast<long long>(cert.hit_items.size()) > cert.claimed_bound)
        fail("hitting set larger than its claimed bound");
    if (cert.claimed_bound > bound_formula)
        fail("claimed bound exceeds the variant guarantee of " + std::to_string(bound_formula));

    std::vector<char> hit_vertex(static_cast<size_t>(g.vertex_count()), 0);
    std::set<std::pair<VertexId, VertexId>> hit_pairs;
    for (const std::string& item : cert.hit_items) {
        if (!want_edge) {
            auto v = g.find_vertex(item);
            if (!v) {
                fail("unknown vertex '" + item + "'");
                continue;
            }
            hit_vertex[static_cast<size_t>(*v)] = 1;
        } else {
            auto space = item.find(' ');
            if (space == std::string::npos) {
                fail("bad edge item '" + item + "'");
                continue;
            }
            auto u = g.find_vertex(item.substr(0, space));
            auto v = g.find_vertex(item.substr(space + 1));
            if (!u || !v) {
                fail("unknown vertex in edge item '" + item + "'");
                continue;
            }
            if (pair_edges.find(key_for(*u, *v)) == pair_edges.end()) {
                fail("edge item '" + item + "' is not an edge of the graph");
                continue;
            }
            hit_pairs.insert(key_for(*u, *v));
        }
    }
    if (!report.pass) return report;

    std::vector<Path> all;
    try {
        all = enumerate_paths(g, a, b, lab, spec, budget);
    } catch (const BudgetError& ex) {
        report.notes.push_back(std::string("coverage not checked: ") + ex.what());
        return report;
    }
    int missed = 0;
    for (const Path& p : all) {
        bool hit = false;
        if (!want_edge) {
            for (VertexId v : p.vertices)
                if (hit_vertex[static_cast<size_t>(v)]) { hit = true; break; }
        } else {
            for (size_t j = 0; j + 1 < p.vertices.size(); ++j)
                if (hit_pairs.count(key_for(p.vertices[j], p.vertices[j + 1]))) {
                    hit = true;
                    break;
                }
        }
        if (!hit) {
            if (++missed <= 3)
                fail("hitting set misses path " + path_display(g, p));
        }
    }
    if (missed > 3)
        fail("hitting set misses " + std::to_string(missed - 3) + " further paths");
    return report;
}

bool is_comb(const Graph& g, const Subgraph& h, const TerminalSet& a, int ell) {
    if (ell < 1 || h.vertices.empty() || h.edges.empty()) return false;
    if (h.edges.size() + 1 != h.vertices.size()) return false;  // must be a tree

    std::vector<char> in_h(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : h.vertices) in_h[static_cast<size_t>(v)] = 1;
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<std::vector<VertexId>> adj(static_cast<size_t>(g.vertex_count()));
    for (EdgeId e : h.edges) {
        const Edge& ed = g.edge(e);
        if (ed.u == ed.v) return false;
        if (!in_h[static_cast<size_t>(ed.u)] || !in_h[static_cast<size_t>(ed.v)]) return false;
        deg[static_cast<size_t>(ed.u)]++;
        deg[static_cast<size_t>(ed.v)]++;
        adj[static_cast<size_t>(ed.u)].push_back(ed.v);
        adj[static_cast<size_t>(ed.v)].push_back(ed.u);
    }
    // Connectivity.
    {
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<VertexId> stack{h.vertices.front()};
        seen[static_cast<size_t>(h.vertices.front())] = 1;
        size_t reached = 0;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            ++reached;
            for (VertexId w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        if (reached != h.vertices.size()) return false;
    }
    // Leaves exactly the A-vertices.
    for (VertexId v : h.vertices) {
        bool leaf = deg[static_cast<size_t>(v)] == 1;
        if (leaf != a.contains(v)) return false;
    }

    // Suppress degree-2 vertices (all outside A by the check above) and
    // inspect the reduced degree profile.
    std::vector<VertexId> kept;
    for (VertexId v : h.vertices)
        if (deg[static_cast<size_t>(v)] != 2) kept.push_back(v);
    std::map<VertexId, std::vector<VertexId>> red;
    // Walk from each kept vertex along suppressed chains.
    std::set<std::pair<VertexId, VertexId>> reduced_edges;
    for (VertexId v : kept) {
        for (VertexId first : adj[static_cast<size_t>(v)]) {
            VertexId prev = v, cur = first;
            while (deg[static_cast<size_t>(cur)] == 2) {
                VertexId nxt =
                    adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                             : adj[static_cast<size_t>(cur)][0];
                prev = cur;
                cur = nxt;
            }
            if (v < cur)
                reduced_edges.insert({v, cur});
            else if (cur < v)
                reduced_edges.insert({cur, v});
            else
                return false;  // a suppressed cycle
        }
    }
    for (const auto& [u, v] : reduced_edges) {
        red[u].push_back(v);
        red[v].push_back(u);
    }

    if (ell == 1) {
        // A subdivided edge: two A-leaves joined by one reduced edge.
        return kept.size() == 2 && reduced_edges.size() == 1;
    }

    int spine_expected = ell - 1;
    std::vector<VertexId> spine, leaves;
    for (VertexId v : kept) {
        size_t d = red[v].size();
        if (d == 1)
            leaves.push_back(v);
        else if (d == 3)
            spine.push_back(v);
        else
            return false;
    }
    if (static_cast<int>(spine.size()) != spine_expected) return false;
    if (static_cast<int>(leaves.size()) != ell + 1) return false;

    // The spine must induce a path; its two ends carry two leaves each, the
    // middle vertices exactly one.
    std::map<VertexId, int> spine_deg;
    for (VertexId v : spine) {
        int ds = 0;
        for (VertexId w : red[v])
            if (red[w].size() == 3) ++ds;
        spine_deg[v] = ds;
    }
    if (spine.size() == 1) {
        return spine_deg[spine[0]] == 0;  // K_{1,3}
    }
    int ends = 0, mids = 0;
    for (auto& [v, ds] : spine_deg) {
        if (ds == 1)
            ++ends;
        else if (ds == 2)
            ++mids;
        else
            return false;
    }
    if (ends != 2 || mids != static_cast<int>(spine.size()) - 2) return false;
    // Degree-3-induced path plus the leaf counts already pins the shape: end
    // spine vertices see 2 leaves, middles see 1, which the totals force.
    return true;
}

}  // namespace epframe
