#include "epframe/labeling.hpp"

#include <charconv>
#include <stdexcept>

namespace epframe {

GroupSpec GroupSpec::zm(int m) {
    if (m < 2) throw std::invalid_argument("Zm modulus must be >= 2");
    return GroupSpec{GroupKind::Zm, m};
}

GroupSpec GroupSpec::z() { return GroupSpec{GroupKind::Z, 0}; }

GroupSpec GroupSpec::z2w(int w) {
    if (w < 1 || w > 62) throw std::invalid_argument("Z2w dimension must be in [1, 62]");
    return GroupSpec{GroupKind::Z2w, w};
}

GroupSpec::Value GroupSpec::add(Value a, Value b) const {
    switch (kind) {
        case GroupKind::Zm:
            return (a + b) % param;
        case GroupKind::Z: {
            Value out = 0;
            if (__builtin_add_overflow(a, b, &out))
                throw std::overflow_error("Z label arithmetic overflow");
            return out;
        }
        case GroupKind::Z2w:
            return a ^ b;
    }
    return 0;
}

GroupSpec::Value GroupSpec::neg(Value a) const {
    switch (kind) {
        case GroupKind::Zm:
            return (param - a) % param;
        case GroupKind::Z:
            if (a == INT64_MIN) throw std::overflow_error("Z label arithmetic overflow");
            return -a;
        case GroupKind::Z2w:
            return a;  // self-inverse
    }
    return 0;
}

GroupSpec::Value GroupSpec::normalize(Value a) const {
    switch (kind) {
        case GroupKind::Zm: {
            Value r = a % param;
            return r < 0 ? r + param : r;
        }
        case GroupKind::Z:
            return a;
        case GroupKind::Z2w:
            if (a < 0 || a >= (Value(1) << param))
                throw std::invalid_argument("Z2w element out of range");
            return a;
    }
    return 0;
}

std::string GroupSpec::format(Value a) const {
    if (kind != GroupKind::Z2w) return std::to_string(a);
    std::string out;
    for (int i = 0; i < param; ++i) {
        if (i) out += ',';
        out += ((a >> i) & 1) ? '1' : '0';
    }
    return out;
}

GroupSpec::Value GroupSpec::parse_element(std::string_view text) const {
    if (kind == GroupKind::Z2w) {
        Value mask = 0;
        int bit = 0;
        size_t i = 0;
        while (i < text.size()) {
            if (bit >= param) throw std::invalid_argument("too many Z2w bits");
            if (text[i] == '1')
                mask |= Value(1) << bit;
            else if (text[i] != '0')
                throw std::invalid_argument("Z2w bits must be 0 or 1");
            ++bit;
            ++i;
            if (i < text.size()) {
                if (text[i] != ',') throw std::invalid_argument("Z2w bits must be comma-separated");
                ++i;
                if (i == text.size()) throw std::invalid_argument("trailing comma in Z2w element");
            }
        }
        if (bit != param) throw std::invalid_argument("expected exactly w Z2w bits");
        return mask;
    }
    Value v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("bad group element '" + std::string(text) + "'");
    return normalize(v);
}

std::string GroupSpec::declaration() const {
    switch (kind) {
        case GroupKind::Zm:
            return "group Zm " + std::to_string(param);
        case GroupKind::Z:
            return "group Z";
        case GroupKind::Z2w:
            return "group Z2w " + std::to_string(param);
    }
    return {};
}

GroupSpec::Value EdgeLabeling::weight(EdgeId e) const {
    if (e < 0 || static_cast<size_t>(e) >= weights.size())
        throw std::out_of_range("edge missing from labeling");
    return weights[static_cast<size_t>(e)];
}

GroupSpec::Value path_weight(const Graph& g, const EdgeLabeling& lab, const Path& p) {
    GroupSpec::Value total = lab.group.zero();
    for (size_t i = 0; i < p.edges.size(); ++i) {
        GroupSpec::Value w = lab.weight(p.edges[i]);
        if (lab.mode == LabelMode::Directed) {
            const Edge& e = g.edge(p.edges[i]);
            bool along = (e.u == p.vertices[i] && e.v == p.vertices[i + 1]);
            if (!along) w = lab.group.neg(w);
        }
        total = lab.group.add(total, w);
    }
    return total;
}

EdgeLabeling make_parity_labeling(const Graph& g) {
    EdgeLabeling lab;
    lab.group = GroupSpec::zm(2);
    lab.mode = LabelMode::Undirected;
    lab.weights.assign(static_cast<size_t>(g.edge_count()), 1);
    return lab;
}

}  // namespace epframe
