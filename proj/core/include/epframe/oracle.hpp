#pragma once

#include <string>
#include <vector>

#include "epframe/certificate.hpp"
#include "epframe/extract.hpp"
#include "epframe/graph.hpp"
#include "epframe/labeling.hpp"
#include "epframe/pathspec.hpp"

namespace epframe {

/// Desk-scale guard rails. Exceeding either limit raises BudgetError; there
/// is no silent truncation.
struct OracleBudget {
    int max_vertices = 20;
    long long max_nodes = 1'000'000;
};

/// All simple paths of the requested kind, each exactly once up to reversal
/// (canonical orientation: smaller endpoint id first; directed kinds keep
/// their orientation).
std::vector<Path> enumerate_paths(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                                  const EdgeLabeling* lab, const PathSpec& spec,
                                  const OracleBudget& budget = {});

struct Packing {
    int size = 0;
    std::vector<Path> witness;
};

/// Exact maximum number of pairwise disjoint spec-paths (vertex- or
/// edge-disjoint per the spec), capped at `limit` (0 means uncapped).
Packing max_disjoint(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                     const EdgeLabeling* lab, const PathSpec& spec, int limit = 0,
                     const OracleBudget& budget = {});

struct HittingSearch {
    bool found = false;  // false: no hitting set within the cap
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int size() const {
        return static_cast<int>(vertices.size() + edges.size());
    }
};

/// Minimum-cardinality vertex or edge set meeting every spec-path, found by
/// exhaustive search of increasing sizes up to `cap` (-1: universe size).
HittingSearch min_hitting_set(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                              const EdgeLabeling* lab, const PathSpec& spec, Disjointness mode,
                              int cap = -1, const OracleBudget& budget = {});

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    std::string to_text() const;
};

/// Checks a certificate against the graph: path validity, variant
/// predicates, pairwise disjointness and count for the packing side; size,
/// claimed bound, and (within budget) exhaustive coverage for the hitting
/// side. Violations are report content, never exceptions.
VerifyReport verify_certificate(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                                const EdgeLabeling* lab, const RawCertificate& cert,
                                const OracleBudget& budget = {});

/// True iff h is a subdivision of the elementary ell-comb (a length-ell path
/// with a pendant edge on each interior vertex) whose leaves are exactly its
/// A-vertices. Recognition by degree sequence after suppressing degree-2
/// non-A vertices.
bool is_comb(const Graph& g, const Subgraph& h, const TerminalSet& a, int ell);

}  // namespace epframe
