#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace epframe {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Endpoint pair of an edge. For directed graphs, and for directed edge
/// labelings, the reference orientation is u -> v.
struct Edge {
    VertexId u = -1;
    VertexId v = -1;
};

/// Incidence-list entry. `forward` is true when this entry sits at the tail
/// of the reference orientation (u for edge u->v).
struct Incidence {
    EdgeId edge = -1;
    VertexId to = -1;
    bool forward = true;
};

/// Finite multigraph with named vertices. Vertex names map to dense integer
/// ids in insertion order; all tie-breaking in the library uses these ids.
/// Parallel edges and loops are representable. Immutable by convention once
/// handed to a solver.
class Graph {
public:
    explicit Graph(bool directed = false) : directed_(directed) {}

    VertexId add_vertex(std::string name);
    EdgeId add_edge(VertexId u, VertexId v);

    bool directed() const { return directed_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name(VertexId v) const { return names_[static_cast<size_t>(v)]; }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    /// Incidences in edge-id order. Undirected edges appear at both
    /// endpoints; directed edges appear at both endpoints too, with
    /// `forward` distinguishing tail from head. A loop contributes two
    /// entries at its vertex.
    const std::vector<Incidence>& incident(VertexId v) const {
        return incidence_[static_cast<size_t>(v)];
    }

    /// Degree in the multigraph sense: loops count twice.
    int degree(VertexId v) const { return static_cast<int>(incidence_[static_cast<size_t>(v)].size()); }

    bool is_loop(EdgeId e) const { return edges_[static_cast<size_t>(e)].u == edges_[static_cast<size_t>(e)].v; }
    bool has_loops() const;

private:
    bool directed_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> incidence_;
};

/// An ordered terminal set (A or B), with O(1) membership.
class TerminalSet {
public:
    TerminalSet() : label_('A') {}
    TerminalSet(char label, int vertex_count, std::vector<VertexId> members);

    char label() const { return label_; }
    bool contains(VertexId v) const {
        return v >= 0 && v < static_cast<VertexId>(mask_.size()) && mask_[static_cast<size_t>(v)];
    }
    const std::vector<VertexId>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

private:
    char label_;
    std::vector<char> mask_;
    std::vector<VertexId> members_;  // sorted ascending
};

/// Simple path: vertices_{i}, vertices_{i+1} are the endpoints of edges_{i}.
/// length() is the number of edges; a single vertex is a (trivial) path of
/// length 0, used only as a building block.
struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
};

/// Checks the Path invariants against g: consistent sizes, consecutive
/// endpoints matching the listed edges (orientation respected when g is
/// directed), and no repeated vertices.
bool is_valid_path(const Graph& g, const Path& p);

Path reverse_path(const Path& p);

/// Smaller endpoint id first; directed paths are left untouched.
Path canonical_path(const Graph& g, const Path& p);

/// Connected components (underlying undirected connectivity). Cells are
/// sorted ascending and ordered by their smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

}  // namespace epframe
