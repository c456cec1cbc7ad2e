#include "epframe/format.hpp"

#include <charconv>
#include <sstream>

#include "epframe/errors.hpp"

namespace epframe {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

int parse_int(std::string_view tok, int line, const char* what) {
    int v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    return v;
}

}  // namespace

ParsedDocument parse_graph(std::string_view text) {
    ParsedDocument doc;
    std::vector<VertexId> a_members, b_members;
    bool saw_b_marker = false;
    std::optional<GroupSpec> group;
    std::vector<std::pair<EdgeId, GroupSpec::Value>> labels;
    bool graph_line_seen = false;
    bool in_header = true;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        // Leading comments are retained so generator documents round-trip.
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') {
            if (in_header && !graph_line_seen)
                doc.header_comments.emplace_back(line.substr(first + 1));
            continue;
        }

        auto toks = tokenize(line);
        std::string_view kw = toks[0];

        if (kw == "graph") {
            if (graph_line_seen) throw ParseError(lineno, "duplicate graph line");
            if (toks.size() != 2 || (toks[1] != "undirected" && toks[1] != "directed"))
                throw ParseError(lineno, "expected 'graph undirected' or 'graph directed'");
            doc.graph = Graph(toks[1] == "directed");
            graph_line_seen = true;
            in_header = false;
            continue;
        }
        if (!graph_line_seen) throw ParseError(lineno, "document must start with a graph line");

        if (kw == "group") {
            if (group) throw ParseError(lineno, "duplicate group line");
            if (toks.size() >= 2 && toks[1] == "Zm" && toks.size() == 3)
                group = GroupSpec::zm(parse_int(toks[2], lineno, "modulus"));
            else if (toks.size() == 2 && toks[1] == "Z")
                group = GroupSpec::z();
            else if (toks.size() >= 2 && toks[1] == "Z2w" && toks.size() == 3)
                group = GroupSpec::z2w(parse_int(toks[2], lineno, "dimension"));
            else
                throw ParseError(lineno, "expected 'group Zm <m>', 'group Z' or 'group Z2w <w>'");
        } else if (kw == "vertex") {
            if (toks.size() < 2 || toks.size() > 4)
                throw ParseError(lineno, "expected 'vertex <name> [A] [B]'");
            std::string name(toks[1]);
            if (doc.graph.find_vertex(name))
                throw ParseError(lineno, "duplicate vertex '" + name + "'");
            VertexId v = doc.graph.add_vertex(name);
            bool in_a = false, in_b = false;
            for (size_t i = 2; i < toks.size(); ++i) {
                if (toks[i] == "A" && !in_a)
                    in_a = true;
                else if (toks[i] == "B" && !in_b)
                    in_b = true;
                else
                    throw ParseError(lineno, "bad vertex marker '" + std::string(toks[i]) + "'");
            }
            if (in_a) a_members.push_back(v);
            if (in_b) {
                b_members.push_back(v);
                saw_b_marker = true;
            }
        } else if (kw == "edge") {
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError(lineno, "expected 'edge <u> <v> [label=<elt>]'");
            auto u = doc.graph.find_vertex(toks[1]);
            if (!u) throw ParseError(lineno, "undeclared vertex '" + std::string(toks[1]) + "'");
            auto v = doc.graph.find_vertex(toks[2]);
            if (!v) throw ParseError(lineno, "undeclared vertex '" + std::string(toks[2]) + "'");
            EdgeId e = doc.graph.add_edge(*u, *v);
            if (toks.size() == 4) {
                std::string_view t = toks[3];
                if (t.substr(0, 6) != "label=")
                    throw ParseError(lineno, "bad edge attribute '" + std::string(t) + "'");
                if (!group)
                    throw ParseError(lineno, "label present without group declaration");
                try {
                    labels.emplace_back(e, group->parse_element(t.substr(6)));
                } catch (const std::exception& ex) {
                    throw ParseError(lineno, ex.what());
                }
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(kw) + "'");
        }
    }
    if (!graph_line_seen) throw ParseError(0, "empty document");

    doc.a = TerminalSet('A', doc.graph.vertex_count(), std::move(a_members));
    if (saw_b_marker)
        doc.b = TerminalSet('B', doc.graph.vertex_count(), std::move(b_members));
    if (group) {
        EdgeLabeling lab;
        lab.group = *group;
        lab.mode = doc.graph.directed() ? LabelMode::Directed : LabelMode::Undirected;
        lab.weights.assign(static_cast<size_t>(doc.graph.edge_count()), group->zero());
        for (auto& [e, w] : labels) lab.weights[static_cast<size_t>(e)] = w;
        doc.labeling = std::move(lab);
    }
    return doc;
}

std::string serialize_graph(const Graph& g, const TerminalSet& a, const TerminalSet* b,
                            const EdgeLabeling* lab,
                            const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const std::string& c : header_comments) out << '#' << c << '\n';
    out << "graph " << (g.directed() ? "directed" : "undirected") << '\n';
    if (lab) out << lab->group.declaration() << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "vertex " << g.name(v);
        if (a.contains(v)) out << " A";
        if (b && b->contains(v)) out << " B";
        out << '\n';
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        out << "edge " << g.name(ed.u) << ' ' << g.name(ed.v);
        if (lab) out << " label=" << lab->group.format(lab->weight(e));
        out << '\n';
    }
    return out.str();
}

std::string serialize_document(const ParsedDocument& doc) {
    return serialize_graph(doc.graph, doc.a, doc.b ? &*doc.b : nullptr,
                           doc.labeling ? &*doc.labeling : nullptr, doc.header_comments);
}

}  // namespace epframe
