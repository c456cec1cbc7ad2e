#pragma once

#include <vector>

#include "epframe/graph.hpp"

namespace epframe {

/// Certified duality pair: a maximum family of pairwise edge-disjoint S-T
/// paths together with a minimum S-T edge cut of the same size.
struct CutPackPair {
    std::vector<Path> paths;
    std::vector<EdgeId> cut;  // sorted
};

/// Unit-capacity augmenting-path maximum flow over a derived digraph with a
/// super-source and super-sink; the cut is recovered from the final residual
/// reachability. Paths start in S, end at their first T-vertex, and have no
/// interior S or T vertex. `forbidden` edges are treated as deleted.
/// Deterministic; requires S and T disjoint and nonempty.
CutPackPair max_edge_disjoint_paths(const Graph& g, const TerminalSet& s, const TerminalSet& t,
                                    const std::vector<EdgeId>& forbidden = {});

}  // namespace epframe
