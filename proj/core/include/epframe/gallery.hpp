#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epframe/graph.hpp"
#include "epframe/labeling.hpp"
#include "epframe/oracle.hpp"

namespace epframe {

/// One generated instance: graph, terminals, optional labeling, and the
/// parameter-recording header comment that its document carries.
struct GalleryInstance {
    Graph graph;
    TerminalSet a;
    std::optional<TerminalSet> b;
    std::optional<EdgeLabeling> labeling;
    std::vector<std::string> header;

    std::string document() const;
};

/// K_{2k-1} with every vertex in A.
GalleryInstance gen_clique_a(int k);

/// k-1 disjoint copies of K_{2l-3}, each matched to 2l-3 private pendant
/// A-vertices. No k disjoint long A-paths; hitting sets need (k-1)(l-1).
GalleryInstance gen_long_lb(int k, int ell);

struct GridModParams {
    int m = 0;  // composite modulus > 4
    int d = 0;  // residue in [0, m)
    int s = 0;  // grid side
    int p = 0;  // smallest prime divisor of m
    int b = 0;  // m / p       (top-edge length)
    int c = 0;  // m - m/p - 1 (base right-attachment length)
};

GridModParams validate_grid_mod_params(int m, int d, int s);

struct GridModInstance {
    GalleryInstance base;
    GridModParams params;
    int branch = 0;        // 0: 2x = d solvable, 1: left d+1, 2: right d+1
    int x = -1;            // solution of 2x = d (mod m) when branch 0
    std::vector<int> top_group;      // by EdgeId: original top edge index, -1
    std::vector<char> terminal_side; // by VertexId: 'L', 'R', or 0
};

/// The modular grid family: s x s grid, top edges of length b, other grid
/// edges of length m, left terminals attached at length 1 and right
/// terminals at length c, then modified so that residue-d paths are exactly
/// the proper (left-to-right, top-using) ones.
GridModInstance gen_grid_mod(int m, int d, int s);

/// Elementary wall with r x r bricks, a1 joined to every left-boundary
/// vertex, a2 to every right-boundary vertex; B is the top row.
GalleryInstance gen_wall_aba(int r);

enum class Parity { Even, Odd };

struct WallParityInstance {
    GalleryInstance base;
    std::vector<EdgeId> grey_edges;
    Parity target = Parity::Odd;
    bool verified = false;  // construction-time enumeration ran (small r)
};

/// Wall with grey top-row detours and parity-calibrated terminal
/// attachments: every A-path avoiding the grey edges has the non-target
/// parity; B is the set of grey-edge endpoints. Calibration is
/// enumeration-verified at construction for r <= 3.
WallParityInstance gen_wall_parity(int r, Parity target);

struct ZeroWallInstance {
    GalleryInstance base;
    std::vector<EdgeId> grey_edges;
};

/// Parity-wall skeleton with group labels: mu on the edges at the left
/// terminal, -mu on the grey edges, zero elsewhere. Directed mode orients
/// the reference left-to-right and top-to-bottom.
ZeroWallInstance gen_zero_label_wall(int r, const GroupSpec& group, GroupSpec::Value mu,
                                     bool directed_labels = false);

/// s x s directed grid, horizontals left-to-right, verticals alternating by
/// column; s left A-terminals feed column 1, column s feeds s right
/// A-terminals; B is the top row.
GalleryInstance gen_directed_grid(int s);

struct EvenAbInstance {
    GalleryInstance base;
    std::vector<int> top_group;  // by EdgeId
    bool verified = false;
};

/// Grid with left terminals in A and right terminals in B, lengths set so
/// that every A-B path avoiding the top edges is odd while top-using paths
/// can be even. Enumeration-verified at construction for s <= 3.
EvenAbInstance gen_even_abpath_counterexample(int s);

/// Audits for the modular grid (empty string on success):
///  - residue audit of the unmodified family: same-side lengths never 0 mod
///    m, crossing lengths m - m/p or (t-1) * m/p for t used top edges;
///  - residue-d audit: improper paths never hit d, some proper path does.
std::string audit_grid_mod_residues(const GridModInstance& inst,
                                    const OracleBudget& budget);
std::string audit_dmodm(const GridModInstance& inst, const OracleBudget& budget);

}  // namespace epframe
