#pragma once

#include <vector>

#include "epframe/frame.hpp"
#include "epframe/graph.hpp"

namespace epframe {

/// A vertex/edge subset of a host graph. Tree-expecting operations validate
/// connectivity and acyclicity on entry; only leaf_pair_paths needs the
/// subcubic bound.
struct Subgraph {
    std::vector<VertexId> vertices;  // sorted, unique
    std::vector<EdgeId> edges;       // sorted, unique

    static Subgraph of(std::vector<VertexId> vertices, std::vector<EdgeId> edges);
};

Subgraph frame_component_subgraph(const Frame& f, int component);

/// The ⌊p/2⌋ pairwise vertex-disjoint leaf-to-leaf paths of a subcubic tree
/// with p leaves: suppress degree-2 vertices, repeatedly clip a deepest
/// branch vertex together with its two leaves, and re-expand the results to
/// the original tree.
std::vector<Path> leaf_pair_paths(const Graph& g, const Subgraph& tree);

/// Even A-paths extracted from a tree whose A-vertices are all leaves: keep
/// the not-smaller bipartition class of A, peel foreign leaves, then pair
/// the survivors. Every returned path has even length >= 2, and the count
/// meets floor(|A_T|/2). On subcubic trees (the frame case) the paths are
/// additionally pairwise vertex-disjoint.
std::vector<Path> even_component_paths(const Graph& g, const Subgraph& tree,
                                       const TerminalSet& a);

/// At least ⌊|A ∩ V(t)|/2⌋ pairwise edge-disjoint A-paths of an arbitrary
/// tree, by a post-order sweep that carries at most one dangling A-endpoint
/// per child edge.
std::vector<Path> tree_edge_disjoint_apaths(const Graph& g, const Subgraph& tree,
                                            const TerminalSet& a);

/// Closed walk through distinct vertices; edges[i] joins vertices[i] and
/// vertices[(i+1) % size]. Length 2 means a pair of parallel edges.
struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

bool is_valid_cycle(const Graph& g, const Cycle& c);

/// k pairwise edge-disjoint even cycles around a vertex of degree >= 6k:
/// one per component of g - hub when there are at least k components,
/// otherwise via subdivided hub edges, a spanning tree per component, and
/// tree_edge_disjoint_apaths on the larger bipartition class.
std::vector<Cycle> hub_even_cycles(const Graph& g, VertexId hub, int k,
                                   const SearchBudget& budget = {});

}  // namespace epframe
