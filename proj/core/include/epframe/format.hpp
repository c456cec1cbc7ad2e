#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epframe/graph.hpp"
#include "epframe/labeling.hpp"

namespace epframe {

/// A parsed graph document: the graph, its terminal sets, an optional edge
/// labeling, and any leading comment lines (kept so serialization round-trips
/// generator output byte for byte).
struct ParsedDocument {
    Graph graph;
    TerminalSet a;
    std::optional<TerminalSet> b;
    std::optional<EdgeLabeling> labeling;
    std::vector<std::string> header_comments;  // without the leading '#'
};

/// Parses the line-based graph format:
///
///   # comment
///   graph undirected | graph directed
///   group Zm <m> | group Z | group Z2w <w>     (optional)
///   vertex <name> [A] [B]
///   edge <u> <v> [label=<elt>]
///
/// Throws ParseError with a line number on malformed input, undeclared or
/// duplicate vertices, and labels without a group declaration.
ParsedDocument parse_graph(std::string_view text);

/// Canonical serialization: header comments, graph line, group line,
/// vertices in id order, edges in id order. parse_graph inverts it.
std::string serialize_graph(const Graph& g, const TerminalSet& a,
                            const TerminalSet* b = nullptr,
                            const EdgeLabeling* lab = nullptr,
                            const std::vector<std::string>& header_comments = {});

std::string serialize_document(const ParsedDocument& doc);

}  // namespace epframe
