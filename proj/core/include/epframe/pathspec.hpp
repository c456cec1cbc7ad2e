#pragma once

#include <string>
#include <string_view>

#include "epframe/graph.hpp"
#include "epframe/labeling.hpp"

namespace epframe {

/// Target path kinds. All but EvenAb describe A-paths (both endpoints in A,
/// no interior vertex in A); EvenAb describes even A-B-paths (one endpoint
/// in each set, interior avoiding both).
enum class PathKind {
    Plain,
    Long,           // length >= min_length
    Even,
    Odd,
    ZeroWeight,     // path weight is the group zero (needs a labeling)
    NonZeroWeight,
    Aba,            // meets the second terminal set B
    DirectedPlain,  // respects edge orientations (directed graphs)
    DirectedAba,
    ZeroMod,        // length congruent to `residue` modulo `modulus`
    EvenAb,
};

enum class Disjointness { Vertex, Edge };

struct PathSpec {
    PathKind kind = PathKind::Plain;
    int min_length = 0;  // Long
    int modulus = 0;     // ZeroMod
    int residue = 0;     // ZeroMod
    Disjointness disjointness = Disjointness::Vertex;

    static PathSpec plain(Disjointness d = Disjointness::Vertex);
    static PathSpec long_paths(int ell, Disjointness d = Disjointness::Vertex);
    static PathSpec even(Disjointness d = Disjointness::Vertex);
    static PathSpec odd(Disjointness d = Disjointness::Vertex);
    static PathSpec zero_weight(Disjointness d = Disjointness::Vertex);
    static PathSpec non_zero_weight(Disjointness d = Disjointness::Vertex);
    static PathSpec aba(Disjointness d = Disjointness::Vertex);
    static PathSpec directed_plain(Disjointness d = Disjointness::Vertex);
    static PathSpec directed_aba(Disjointness d = Disjointness::Vertex);
    static PathSpec zero_mod(int m, int d, Disjointness dis = Disjointness::Vertex);
    static PathSpec even_ab(Disjointness d = Disjointness::Vertex);

    bool needs_labeling() const {
        return kind == PathKind::ZeroWeight || kind == PathKind::NonZeroWeight;
    }
    bool needs_b() const {
        return kind == PathKind::Aba || kind == PathKind::DirectedAba || kind == PathKind::EvenAb;
    }
    bool directed_kind() const {
        return kind == PathKind::DirectedPlain || kind == PathKind::DirectedAba;
    }
};

/// CLI-facing names: plain, long, even, odd, zero-weight, nonzero-weight,
/// aba, directed-plain, directed-aba, zero-mod, even-ab.
std::string path_kind_name(PathKind kind);
PathKind parse_path_kind(std::string_view name);

/// True iff p (a valid path of g) is a path of the requested kind.
/// Throws std::invalid_argument when the spec requires a labeling or B set
/// that was not supplied, or a directed kind is asked of an undirected graph.
bool matches_spec(const PathSpec& spec, const Graph& g, const TerminalSet& a,
                  const TerminalSet* b, const EdgeLabeling* lab, const Path& p);

}  // namespace epframe
