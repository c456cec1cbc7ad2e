#include "epframe/certificate.hpp"

#include <json.hpp>

#include "epframe/errors.hpp"

namespace epframe {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string edge_item(const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    VertexId u = ed.u, v = ed.v;
    if (v < u) std::swap(u, v);
    return g.name(u) + " " + g.name(v);
}

}  // namespace

std::string certificate_to_text(const Certificate& cert, const Graph& g) {
    OrderedJson doc;
    doc["variant"] = cert.variant;
    doc["k"] = cert.k;
    if (cert.ell) doc["ell"] = *cert.ell;
    doc["outcome"] = cert.outcome == CertOutcome::Paths ? "paths" : "hitting";
    if (cert.outcome == CertOutcome::Paths) {
        OrderedJson paths = OrderedJson::array();
        for (const Path& p : cert.paths) {
            OrderedJson names = OrderedJson::array();
            for (VertexId v : p.vertices) names.push_back(g.name(v));
            paths.push_back(std::move(names));
        }
        doc["paths"] = std::move(paths);
    } else {
        OrderedJson hitting;
        hitting["type"] = cert.hit_kind == HitKind::Vertex ? "vertex" : "edge";
        OrderedJson items = OrderedJson::array();
        if (cert.hit_kind == HitKind::Vertex) {
            for (VertexId v : cert.hit_vertices) items.push_back(g.name(v));
        } else {
            for (EdgeId e : cert.hit_edges) items.push_back(edge_item(g, e));
        }
        hitting["items"] = std::move(items);
        doc["hitting"] = std::move(hitting);
    }
    doc["claimed_bound"] = cert.claimed_bound;
    OrderedJson diag;
    for (const auto& [key, value] : cert.diagnostics) diag[key] = value;
    doc["diagnostics"] = std::move(diag);
    return doc.dump(2) + "\n";
}

RawCertificate parse_certificate_text(const std::string& text) {
    OrderedJson doc;
    try {
        doc = OrderedJson::parse(text);
    } catch (const std::exception& ex) {
        throw CertificateError(std::string("malformed certificate document: ") + ex.what());
    }
    RawCertificate out;
    try {
        out.variant = doc.at("variant").get<std::string>();
        out.k = doc.at("k").get<int>();
        if (doc.contains("ell")) out.ell = doc.at("ell").get<int>();
        out.outcome = doc.at("outcome").get<std::string>();
        if (out.outcome == "paths") {
            for (const auto& path : doc.at("paths")) {
                std::vector<std::string> names;
                for (const auto& name : path) names.push_back(name.get<std::string>());
                out.paths.push_back(std::move(names));
            }
        } else if (out.outcome == "hitting") {
            const auto& hitting = doc.at("hitting");
            out.hit_type = hitting.at("type").get<std::string>();
            for (const auto& item : hitting.at("items"))
                out.hit_items.push_back(item.get<std::string>());
        } else {
            throw CertificateError("outcome must be 'paths' or 'hitting'");
        }
        out.claimed_bound = doc.at("claimed_bound").get<long long>();
        if (doc.contains("diagnostics"))
            for (const auto& [key, value] : doc.at("diagnostics").items())
                if (value.is_number_integer())
                    out.diagnostics.emplace_back(key, value.get<long long>());
    } catch (const CertificateError&) {
        throw;
    } catch (const std::exception& ex) {
        throw CertificateError(std::string("malformed certificate document: ") + ex.what());
    }
    return out;
}

RawCertificate raw_certificate(const Certificate& cert, const Graph& g) {
    return parse_certificate_text(certificate_to_text(cert, g));
}

}  // namespace epframe
