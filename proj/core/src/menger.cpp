#include "epframe/menger.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace epframe {

namespace {

constexpr long long kBig = 1LL << 30;

struct Arc {
    int to;
    long long cap;
    EdgeId orig;  // originating graph edge, -1 for terminal arcs
};

}  // namespace

CutPackPair max_edge_disjoint_paths(const Graph& g, const TerminalSet& s, const TerminalSet& t,
                                    const std::vector<EdgeId>& forbidden) {
    if (g.directed())
        throw std::invalid_argument("max_edge_disjoint_paths: undirected graphs only");
    if (s.empty() || t.empty())
        throw std::invalid_argument("max_edge_disjoint_paths: S and T must be nonempty");
    for (VertexId v : s.members())
        if (t.contains(v))
            throw std::invalid_argument("max_edge_disjoint_paths: S and T must be disjoint");

    int n = g.vertex_count();
    int src = n, snk = n + 1;
    std::vector<char> banned(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId e : forbidden)
        if (e >= 0 && e < g.edge_count()) banned[static_cast<size_t>(e)] = 1;

    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<size_t>(n + 2));
    auto add_pair = [&](int from, int to, long long cap_fwd, long long cap_bwd, EdgeId orig) {
        out[static_cast<size_t>(from)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back(Arc{to, cap_fwd, orig});
        out[static_cast<size_t>(to)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back(Arc{from, cap_bwd, orig});
    };

    // Loops never carry S-T flow and are skipped outright.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (banned[static_cast<size_t>(e)] || ed.u == ed.v) continue;
        add_pair(ed.u, ed.v, 1, 1, e);
    }
    for (VertexId v : s.members()) add_pair(src, v, kBig, 0, -1);
    for (VertexId v : t.members()) add_pair(v, snk, kBig, 0, -1);

    // Edmonds-Karp with a fixed arc scan order keeps runs reproducible.
    long long flow = 0;
    std::vector<int> parent_arc(static_cast<size_t>(n + 2));
    while (true) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        std::deque<int> queue{src};
        parent_arc[static_cast<size_t>(src)] = -2;
        while (!queue.empty() && parent_arc[static_cast<size_t>(snk)] == -1) {
            int v = queue.front();
            queue.pop_front();
            for (int ai : out[static_cast<size_t>(v)]) {
                const Arc& a = arcs[static_cast<size_t>(ai)];
                if (a.cap <= 0 || parent_arc[static_cast<size_t>(a.to)] != -1) continue;
                parent_arc[static_cast<size_t>(a.to)] = ai;
                queue.push_back(a.to);
            }
        }
        if (parent_arc[static_cast<size_t>(snk)] == -1) break;
        for (int v = snk; v != src;) {
            int ai = parent_arc[static_cast<size_t>(v)];
            arcs[static_cast<size_t>(ai)].cap -= 1;
            arcs[static_cast<size_t>(ai ^ 1)].cap += 1;
            v = arcs[static_cast<size_t>(ai ^ 1)].to;
        }
        flow += 1;
    }

    CutPackPair result;

    // Minimum cut from residual reachability.
    std::vector<char> reach(static_cast<size_t>(n + 2), 0);
    {
        std::deque<int> queue{src};
        reach[static_cast<size_t>(src)] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int ai : out[static_cast<size_t>(v)]) {
                const Arc& a = arcs[static_cast<size_t>(ai)];
                if (a.cap <= 0 || reach[static_cast<size_t>(a.to)]) continue;
                reach[static_cast<size_t>(a.to)] = 1;
                queue.push_back(a.to);
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (banned[static_cast<size_t>(e)] || ed.u == ed.v) continue;
        if (reach[static_cast<size_t>(ed.u)] != reach[static_cast<size_t>(ed.v)])
            result.cut.push_back(e);
    }
    if (static_cast<long long>(result.cut.size()) != flow)
        throw std::logic_error("max_edge_disjoint_paths: |cut| != |flow|");

    // Path recovery: walk positive net flow, erase loops, then trim each
    // walk to run from its last S-vertex to its first T-vertex. The two
    // slots of an edge pair sum to their initial capacity, so at most one
    // direction carries positive usage.
    std::vector<long long> usage(arcs.size(), 0);
    std::vector<std::vector<int>> usable(static_cast<size_t>(n + 2));
    for (size_t ai = 0; ai < arcs.size(); ++ai) {
        long long init = arcs[ai].orig >= 0 ? 1 : (ai % 2 == 0 ? kBig : 0);
        long long used = init - arcs[ai].cap;
        if (used > 0) {
            usage[ai] = used;
            int tail = arcs[ai ^ 1].to;
            usable[static_cast<size_t>(tail)].push_back(static_cast<int>(ai));
        }
    }
    for (auto& lst : usable) std::sort(lst.begin(), lst.end());

    std::vector<char> in_t(static_cast<size_t>(n), 0);
    for (VertexId v : t.members()) in_t[static_cast<size_t>(v)] = 1;
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (VertexId v : s.members()) in_s[static_cast<size_t>(v)] = 1;

    auto consume_towards = [&](int v, bool to_snk) -> int {
        for (int ai : usable[static_cast<size_t>(v)]) {
            if (usage[static_cast<size_t>(ai)] <= 0) continue;
            const Arc& a = arcs[static_cast<size_t>(ai)];
            bool terminal = a.orig < 0;
            if (terminal != to_snk) continue;
            if (to_snk && a.to != snk) continue;
            usage[static_cast<size_t>(ai)] -= 1;
            return ai;
        }
        return -1;
    };

    for (VertexId start : s.members()) {
        while (true) {
            // Claim one unit of source arc into `start`.
            int claimed = -1;
            for (int ai : usable[static_cast<size_t>(src)]) {
                if (usage[static_cast<size_t>(ai)] <= 0) continue;
                if (arcs[static_cast<size_t>(ai)].to == start) {
                    usage[static_cast<size_t>(ai)] -= 1;
                    claimed = ai;
                    break;
                }
            }
            if (claimed < 0) break;

            std::vector<VertexId> walk_v{start};
            std::vector<EdgeId> walk_e;
            int cur = start;
            while (true) {
                if (in_t[static_cast<size_t>(cur)] && consume_towards(cur, true) >= 0) break;
                int ai = consume_towards(cur, false);
                if (ai < 0) throw std::logic_error("max_edge_disjoint_paths: flow imbalance");
                walk_e.push_back(arcs[static_cast<size_t>(ai)].orig);
                cur = arcs[static_cast<size_t>(ai)].to;
                walk_v.push_back(cur);
            }

            // Loop erasure.
            std::vector<VertexId> simple_v;
            std::vector<EdgeId> simple_e;
            std::vector<int> pos(static_cast<size_t>(n), -1);
            for (size_t i = 0; i < walk_v.size(); ++i) {
                VertexId v = walk_v[i];
                int seen = pos[static_cast<size_t>(v)];
                if (seen >= 0) {
                    for (size_t j = static_cast<size_t>(seen) + 1; j < simple_v.size(); ++j)
                        pos[static_cast<size_t>(simple_v[j])] = -1;
                    simple_v.resize(static_cast<size_t>(seen) + 1);
                    simple_e.resize(static_cast<size_t>(seen));
                } else {
                    if (i > 0) simple_e.push_back(walk_e[i - 1]);
                    simple_v.push_back(v);
                    pos[static_cast<size_t>(v)] = static_cast<int>(simple_v.size()) - 1;
                }
            }

            // First T-vertex, then last S-vertex before it.
            size_t first_t = simple_v.size() - 1;
            for (size_t i = 0; i < simple_v.size(); ++i)
                if (in_t[static_cast<size_t>(simple_v[i])]) { first_t = i; break; }
            size_t last_s = 0;
            for (size_t i = 0; i < first_t; ++i)
                if (in_s[static_cast<size_t>(simple_v[i])]) last_s = i;

            Path p;
            p.vertices.assign(simple_v.begin() + static_cast<long>(last_s),
                              simple_v.begin() + static_cast<long>(first_t) + 1);
            p.edges.assign(simple_e.begin() + static_cast<long>(last_s),
                           simple_e.begin() + static_cast<long>(first_t));
            if (!is_valid_path(g, p) || p.length() < 1)
                throw std::logic_error("max_edge_disjoint_paths: bad recovered path");
            result.paths.push_back(std::move(p));
        }
    }
    if (static_cast<long long>(result.paths.size()) != flow)
        throw std::logic_error("max_edge_disjoint_paths: |paths| != |flow|");
    return result;
}

}  // namespace epframe
