#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epframe/graph.hpp"

namespace epframe {

enum class GroupKind { Zm, Z, Z2w };

/// Abelian group used for edge labels: Z_m (param = modulus m >= 2), Z
/// (bounded machine integers with overflow detection), or Z_2^w
/// (param = dimension w, elements stored as bit masks, addition is xor).
struct GroupSpec {
    GroupKind kind = GroupKind::Zm;
    int param = 2;

    using Value = std::int64_t;

    static GroupSpec zm(int m);
    static GroupSpec z();
    static GroupSpec z2w(int w);

    Value zero() const { return 0; }
    Value add(Value a, Value b) const;
    Value neg(Value a) const;
    bool is_zero(Value a) const { return a == 0; }
    /// Brings an arbitrary integer into canonical form (e.g. mod m into
    /// [0, m)); rejects out-of-range Z_2^w masks.
    Value normalize(Value a) const;

    std::string format(Value a) const;
    Value parse_element(std::string_view text) const;

    std::string declaration() const;  // "group Zm 6" etc.
    bool operator==(const GroupSpec&) const = default;
};

enum class LabelMode { Undirected, Directed };

/// Group weights on edges. In directed mode an edge contributes +weight when
/// traversed along its reference orientation and -weight otherwise.
struct EdgeLabeling {
    GroupSpec group;
    LabelMode mode = LabelMode::Undirected;
    std::vector<GroupSpec::Value> weights;  // indexed by EdgeId

    GroupSpec::Value weight(EdgeId e) const;
};

/// Sum of edge labels along p (signed in directed mode).
GroupSpec::Value path_weight(const Graph& g, const EdgeLabeling& lab, const Path& p);

/// Undirected Z_2 labeling with weight 1 on every edge, so that
/// path_weight(p) == length(p) mod 2.
EdgeLabeling make_parity_labeling(const Graph& g);

}  // namespace epframe
