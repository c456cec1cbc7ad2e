#include "epframe/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace epframe {

VertexId Graph::add_vertex(std::string name) {
    if (name.empty()) throw std::invalid_argument("vertex name must be non-empty");
    if (ids_.count(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
    VertexId id = static_cast<VertexId>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(std::move(name));
    incidence_.emplace_back();
    return id;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v});
    incidence_[static_cast<size_t>(u)].push_back(Incidence{id, v, true});
    incidence_[static_cast<size_t>(v)].push_back(Incidence{id, u, false});
    return id;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_loops() const {
    for (const Edge& e : edges_)
        if (e.u == e.v) return true;
    return false;
}

TerminalSet::TerminalSet(char label, int vertex_count, std::vector<VertexId> members)
    : label_(label), mask_(static_cast<size_t>(vertex_count), 0), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (VertexId v : members_) {
        if (v < 0 || v >= vertex_count)
            throw std::invalid_argument("terminal vertex out of range");
        mask_[static_cast<size_t>(v)] = 1;
    }
}

bool is_valid_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    if (p.edges.size() + 1 != p.vertices.size()) return false;
    for (VertexId v : p.vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        EdgeId eid = p.edges[i];
        if (eid < 0 || eid >= g.edge_count()) return false;
        const Edge& e = g.edge(eid);
        VertexId from = p.vertices[i], to = p.vertices[i + 1];
        if (g.directed()) {
            if (!(e.u == from && e.v == to)) return false;
        } else {
            if (!((e.u == from && e.v == to) || (e.u == to && e.v == from))) return false;
        }
    }
    std::vector<VertexId> seen = p.vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    return true;
}

Path reverse_path(const Path& p) {
    Path r;
    r.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
    r.edges.assign(p.edges.rbegin(), p.edges.rend());
    return r;
}

Path canonical_path(const Graph& g, const Path& p) {
    if (g.directed()) return p;
    if (!p.vertices.empty() && p.back() < p.front()) return reverse_path(p);
    return p;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<VertexId>> cells;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<VertexId> cell;
        stack.push_back(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            cell.push_back(v);
            for (const Incidence& inc : g.incident(v)) {
                if (!seen[static_cast<size_t>(inc.to)]) {
                    seen[static_cast<size_t>(inc.to)] = 1;
                    stack.push_back(inc.to);
                }
            }
        }
        std::sort(cell.begin(), cell.end());
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace epframe
