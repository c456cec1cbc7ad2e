#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epframe/graph.hpp"
#include "epframe/labeling.hpp"

namespace epframe {

struct FrameVariant {
    enum class Tag { Plain, Long, Even };
    Tag tag = Tag::Plain;
    int min_length = 0;  // Long

    static FrameVariant plain() { return {Tag::Plain, 0}; }
    static FrameVariant long_paths(int ell);
    static FrameVariant even() { return {Tag::Even, 0}; }
};

/// A subcubic forest subgraph whose leaves are exactly its A-vertices.
/// Components are numbered in creation order and never merge: a NewComponent
/// augmentation opens a new one, an AttachPath augmentation grows an existing
/// one. The Even variant stores one witness even A-path per component.
struct Frame {
    FrameVariant variant;
    std::vector<char> has_vertex;                  // by vertex
    std::vector<char> has_edge;                    // by edge
    std::vector<EdgeId> edge_list;                 // insertion order
    std::vector<int> component;                    // by vertex, -1 outside
    int component_count = 0;
    std::vector<int> degree;                       // forest degree, by vertex
    std::vector<std::vector<Incidence>> adj;       // forest adjacency
    std::vector<std::optional<Path>> witness;      // by component (Even)

    bool contains_vertex(VertexId v) const { return has_vertex[static_cast<size_t>(v)] != 0; }
    bool contains_edge(EdgeId e) const { return has_edge[static_cast<size_t>(e)] != 0; }
    bool empty() const { return edge_list.empty(); }
};

struct FrameStats {
    int component_count = 0;
    int a_count = 0;                    // |A ∩ V(F)| == number of leaves
    std::vector<VertexId> degree3;      // sorted
    std::vector<VertexId> leaves;       // sorted
};

struct Augmentation {
    enum class Kind { NewComponent, AttachPath };
    Kind kind = Kind::NewComponent;
    /// NewComponent: an A-path of the variant's kind, disjoint from the
    /// frame. AttachPath: runs from a fresh A-leaf to its frame endpoint
    /// (the last vertex is the degree-2 forest vertex it attaches to).
    Path path;
};

struct SearchBudget {
    long long nodes = 10'000'000;
};

Frame empty_frame(const Graph& g, FrameVariant variant);

/// First violated frame invariant as text, or the empty string when valid.
std::string validate_frame(const Graph& g, const TerminalSet& a, const Frame& f);

/// Deterministic augmentation search (NewComponent first, then AttachPath,
/// candidates in id order). Returns nullopt iff no augmentation exists.
/// Long and Even searches are exhaustive over simple paths and consume the
/// node budget; exceeding it raises BudgetError rather than guessing.
std::optional<Augmentation> find_augmentation(const Graph& g, const TerminalSet& a,
                                              const Frame& f,
                                              const EdgeLabeling* lab = nullptr,
                                              const SearchBudget& budget = {});

void apply_augmentation(Frame& f, const Graph& g, const Augmentation& aug);

/// Grows a frame from empty by repeated augmentation until maximal.
Frame construct_frame(const Graph& g, const TerminalSet& a, FrameVariant variant,
                      const EdgeLabeling* lab = nullptr, const SearchBudget& budget = {});

FrameStats frame_stats(const Frame& f);

/// Debug dump of the forest in the graph format, under a "# frame" header.
std::string dump_frame(const Graph& g, const Frame& f);

}  // namespace epframe
