#pragma once

#include <vector>

#include "epframe/certificate.hpp"
#include "epframe/frame.hpp"
#include "epframe/graph.hpp"

namespace epframe {

/// One bisection round: the refined partition of A and the edges added to
/// the accumulated separator during that round.
struct MaderRound {
    int round = 0;
    std::vector<std::vector<VertexId>> cells;
    std::vector<EdgeId> added_cut;
};

struct MaderTrace {
    std::vector<MaderRound> rounds;
    std::vector<EdgeId> cut_after(int round) const;
};

/// k vertex-disjoint A-paths or a vertex hitting set of size < 4k.
Certificate solve_gallai(const Graph& g, const TerminalSet& a, int k,
                         const SearchBudget& budget = {});

/// k vertex-disjoint A-paths of length >= ell, or a vertex hitting set of
/// size < 4*k*ell built from the branch vertices and the radius-(ell-1)
/// forest balls around the frame's A-vertices.
Certificate solve_long(const Graph& g, const TerminalSet& a, int k, int ell,
                       const SearchBudget& budget = {});

/// k vertex-disjoint even A-paths or a vertex hitting set of size <= 10k.
Certificate solve_even(const Graph& g, const TerminalSet& a, int k,
                       const SearchBudget& budget = {});

/// k edge-disjoint A-paths or an edge hitting set of size <=
/// k * ceil(log2 |A|), via per-component spanning-tree packing and a global
/// Menger bisection of A.
Certificate solve_mader_edge(const Graph& g, const TerminalSet& a, int k,
                             MaderTrace* trace = nullptr);

}  // namespace epframe
