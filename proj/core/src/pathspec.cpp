#include "epframe/pathspec.hpp"

#include <stdexcept>

namespace epframe {

PathSpec PathSpec::plain(Disjointness d) { return PathSpec{PathKind::Plain, 0, 0, 0, d}; }
PathSpec PathSpec::long_paths(int ell, Disjointness d) {
    if (ell < 1) throw std::invalid_argument("long path threshold must be >= 1");
    return PathSpec{PathKind::Long, ell, 0, 0, d};
}
PathSpec PathSpec::even(Disjointness d) { return PathSpec{PathKind::Even, 0, 0, 0, d}; }
PathSpec PathSpec::odd(Disjointness d) { return PathSpec{PathKind::Odd, 0, 0, 0, d}; }
PathSpec PathSpec::zero_weight(Disjointness d) { return PathSpec{PathKind::ZeroWeight, 0, 0, 0, d}; }
PathSpec PathSpec::non_zero_weight(Disjointness d) {
    return PathSpec{PathKind::NonZeroWeight, 0, 0, 0, d};
}
PathSpec PathSpec::aba(Disjointness d) { return PathSpec{PathKind::Aba, 0, 0, 0, d}; }
PathSpec PathSpec::directed_plain(Disjointness d) {
    return PathSpec{PathKind::DirectedPlain, 0, 0, 0, d};
}
PathSpec PathSpec::directed_aba(Disjointness d) {
    return PathSpec{PathKind::DirectedAba, 0, 0, 0, d};
}
PathSpec PathSpec::zero_mod(int m, int d, Disjointness dis) {
    if (m < 1) throw std::invalid_argument("zero-mod modulus must be >= 1");
    if (d < 0 || d >= m) throw std::invalid_argument("zero-mod residue out of range");
    return PathSpec{PathKind::ZeroMod, 0, m, d, dis};
}
PathSpec PathSpec::even_ab(Disjointness d) { return PathSpec{PathKind::EvenAb, 0, 0, 0, d}; }

std::string path_kind_name(PathKind kind) {
    switch (kind) {
        case PathKind::Plain: return "plain";
        case PathKind::Long: return "long";
        case PathKind::Even: return "even";
        case PathKind::Odd: return "odd";
        case PathKind::ZeroWeight: return "zero-weight";
        case PathKind::NonZeroWeight: return "nonzero-weight";
        case PathKind::Aba: return "aba";
        case PathKind::DirectedPlain: return "directed-plain";
        case PathKind::DirectedAba: return "directed-aba";
        case PathKind::ZeroMod: return "zero-mod";
        case PathKind::EvenAb: return "even-ab";
    }
    return "?";
}

PathKind parse_path_kind(std::string_view name) {
    if (name == "plain") return PathKind::Plain;
    if (name == "long") return PathKind::Long;
    if (name == "even") return PathKind::Even;
    if (name == "odd") return PathKind::Odd;
    if (name == "zero-weight") return PathKind::ZeroWeight;
    if (name == "nonzero-weight") return PathKind::NonZeroWeight;
    if (name == "aba") return PathKind::Aba;
    if (name == "directed-plain") return PathKind::DirectedPlain;
    if (name == "directed-aba") return PathKind::DirectedAba;
    if (name == "zero-mod") return PathKind::ZeroMod;
    if (name == "even-ab") return PathKind::EvenAb;
    throw std::invalid_argument("unknown path kind '" + std::string(name) + "'");
}

namespace {

bool interior_avoids(const Path& p, const TerminalSet& s) {
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
        if (s.contains(p.vertices[i])) return false;
    return true;
}

bool meets(const Path& p, const TerminalSet& s) {
    for (VertexId v : p.vertices)
        if (s.contains(v)) return true;
    return false;
}

bool respects_orientation(const Graph& g, const Path& p) {
    for (size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = g.edge(p.edges[i]);
        if (!(e.u == p.vertices[i] && e.v == p.vertices[i + 1])) return false;
    }
    return true;
}

}  // namespace

bool matches_spec(const PathSpec& spec, const Graph& g, const TerminalSet& a,
                  const TerminalSet* b, const EdgeLabeling* lab, const Path& p) {
    if (spec.needs_b() && !b)
        throw std::invalid_argument(path_kind_name(spec.kind) + " requires a B terminal set");
    if (spec.needs_labeling() && !lab)
        throw std::invalid_argument(path_kind_name(spec.kind) + " requires an edge labeling");
    if (spec.directed_kind() && !g.directed())
        throw std::invalid_argument(path_kind_name(spec.kind) + " requires a directed graph");

    if (p.length() < 1) return false;

    if (spec.kind == PathKind::EvenAb) {
        bool af = a.contains(p.front()), bf = b->contains(p.front());
        bool ab_ = a.contains(p.back()), bb = b->contains(p.back());
        if (!((af && bb) || (bf && ab_))) return false;
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
            if (a.contains(p.vertices[i]) || b->contains(p.vertices[i])) return false;
        return p.length() % 2 == 0;
    }

    if (!a.contains(p.front()) || !a.contains(p.back())) return false;
    if (!interior_avoids(p, a)) return false;

    switch (spec.kind) {
        case PathKind::Plain:
            return true;
        case PathKind::Long:
            return p.length() >= spec.min_length;
        case PathKind::Even:
            return p.length() % 2 == 0;
        case PathKind::Odd:
            return p.length() % 2 == 1;
        case PathKind::ZeroWeight:
            return lab->group.is_zero(path_weight(g, *lab, p));
        case PathKind::NonZeroWeight:
            return !lab->group.is_zero(path_weight(g, *lab, p));
        case PathKind::Aba:
            return meets(p, *b);
        case PathKind::DirectedPlain:
            return respects_orientation(g, p);
        case PathKind::DirectedAba:
            return respects_orientation(g, p) && meets(p, *b);
        case PathKind::ZeroMod:
            return p.length() % spec.modulus == spec.residue;
        case PathKind::EvenAb:
            break;  // handled above
    }
    return false;
}

}  // namespace epframe
