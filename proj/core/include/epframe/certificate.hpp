#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epframe/graph.hpp"

namespace epframe {

enum class CertOutcome { Paths, Hitting };
enum class HitKind { Vertex, Edge };

/// Dichotomy output of a solver: either at least k disjoint target paths or
/// a hitting set within the claimed bound, plus a diagnostics block with the
/// frame statistics behind the bound arithmetic.
struct Certificate {
    std::string variant;  // gallai | long | even | mader-edge
    int k = 0;
    std::optional<int> ell;
    CertOutcome outcome = CertOutcome::Paths;
    std::vector<Path> paths;
    HitKind hit_kind = HitKind::Vertex;
    std::vector<VertexId> hit_vertices;  // sorted
    std::vector<EdgeId> hit_edges;       // sorted
    long long claimed_bound = 0;
    std::vector<std::pair<std::string, long long>> diagnostics;
};

/// Name-level certificate as read from a document; resolution against a
/// graph happens during verification so that mismatches become report
/// content instead of crashes.
struct RawCertificate {
    std::string variant;
    int k = 0;
    std::optional<int> ell;
    std::string outcome;                          // "paths" | "hitting"
    std::vector<std::vector<std::string>> paths;  // vertex-name sequences
    std::string hit_type;                         // "vertex" | "edge"
    std::vector<std::string> hit_items;           // vertex names, or "u v" pairs
    long long claimed_bound = 0;
    std::vector<std::pair<std::string, long long>> diagnostics;
};

/// JSON document with the fixed field set: variant, k, ell (when present),
/// outcome, paths | hitting {type, items}, claimed_bound, diagnostics.
std::string certificate_to_text(const Certificate& cert, const Graph& g);

/// Throws CertificateError on a malformed document.
RawCertificate parse_certificate_text(const std::string& text);

RawCertificate raw_certificate(const Certificate& cert, const Graph& g);

}  // namespace epframe
