#include <doctest.h>

#include <random>

#include "epframe/errors.hpp"
#include "epframe/format.hpp"
#include "support/helpers.hpp"

using namespace epframe;

TEST_CASE("parse_graph reads a minimal document") {
    ParsedDocument doc = parse_graph("graph undirected\nvertex a A\nvertex b A\nedge a b\n");
    CHECK(doc.graph.vertex_count() == 2);
    CHECK(doc.graph.edge_count() == 1);
    CHECK(doc.a.size() == 2);
    CHECK(doc.a.contains(*doc.graph.find_vertex("a")));
    CHECK(doc.a.contains(*doc.graph.find_vertex("b")));
    CHECK_FALSE(doc.b.has_value());
    CHECK_FALSE(doc.labeling.has_value());
}

TEST_CASE("parse_graph rejects bad documents") {
    CHECK_THROWS_WITH_AS(parse_graph("graph undirected\nvertex a A\nedge a c\n"),
                         doctest::Contains("undeclared vertex 'c'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("graph undirected\nvertex a\nvertex a\n"),
                         doctest::Contains("duplicate vertex"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_graph("graph undirected\nvertex a\nvertex b\nedge a b label=3\n"),
        doctest::Contains("label present without group declaration"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph sideways\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("graph undirected\nvertex a\nedge a zz\n");
        FAIL("expected ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.line() == 3);
    }
}

TEST_CASE("serialize_graph emits canonical form") {
    Graph g;
    g.add_vertex("a");
    TerminalSet a('A', 1, {0});
    CHECK(serialize_graph(g, a) == "graph undirected\nvertex a A\n");

    // K5 all-A: 5 vertex lines + 10 edge lines in id order.
    Graph k5 = test_support::graph_from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    TerminalSet all('A', 5, {0, 1, 2, 3, 4});
    std::string text = serialize_graph(k5, all);
    int vertex_lines = 0, edge_lines = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl - pos);
        if (line.rfind("vertex", 0) == 0) ++vertex_lines;
        if (line.rfind("edge", 0) == 0) ++edge_lines;
        pos = nl + 1;
    }
    CHECK(vertex_lines == 5);
    CHECK(edge_lines == 10);
    CHECK(text.find("edge v0 v1") < text.find("edge v0 v2"));
    CHECK(text.find("edge v0 v4") < text.find("edge v1 v2"));
}

TEST_CASE("labels and terminal markers round-trip") {
    std::string text =
        "# sample\n"
        "graph directed\n"
        "group Zm 6\n"
        "vertex a A\n"
        "vertex m\n"
        "vertex b A B\n"
        "edge a m label=2\n"
        "edge m b label=5\n"
        "edge b a label=0\n";
    ParsedDocument doc = parse_graph(text);
    REQUIRE(doc.labeling.has_value());
    CHECK(doc.labeling->mode == LabelMode::Directed);
    CHECK(doc.labeling->weight(0) == 2);
    CHECK(doc.labeling->weight(1) == 5);
    REQUIRE(doc.b.has_value());
    CHECK(doc.b->size() == 1);
    CHECK(serialize_document(doc) == text);
}

TEST_CASE("Z2w labels parse and print as comma-separated bits") {
    std::string text =
        "graph undirected\n"
        "group Z2w 3\n"
        "vertex a A\n"
        "vertex b A\n"
        "edge a b label=1,0,1\n";
    ParsedDocument doc = parse_graph(text);
    REQUIRE(doc.labeling.has_value());
    CHECK(doc.labeling->weight(0) == 0b101);
    CHECK(serialize_document(doc) == text);
    CHECK_THROWS_AS(parse_graph("graph undirected\ngroup Z2w 3\nvertex a\nvertex b\n"
                                "edge a b label=1,0\n"),
                    ParseError);
}

TEST_CASE("round-trip: serialize then parse is the identity on canonical documents") {
    std::mt19937 rng(20260808);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = test_support::random_graph(rng, 1, 9);
        std::string first = serialize_graph(inst.g, inst.a);
        ParsedDocument doc = parse_graph(first);
        std::string second = serialize_document(doc);
        CHECK(first == second);
        CHECK(doc.graph.vertex_count() == inst.g.vertex_count());
        CHECK(doc.graph.edge_count() == inst.g.edge_count());
        for (VertexId v = 0; v < inst.g.vertex_count(); ++v) {
            CHECK(doc.graph.name(v) == inst.g.name(v));
            CHECK(doc.a.contains(v) == inst.a.contains(v));
        }
        for (EdgeId e = 0; e < inst.g.edge_count(); ++e) {
            CHECK(doc.graph.edge(e).u == inst.g.edge(e).u);
            CHECK(doc.graph.edge(e).v == inst.g.edge(e).v);
        }
    }
}

TEST_CASE("id assignment is deterministic across repeated parses") {
    std::string text = "graph undirected\nvertex z A\nvertex y\nvertex x A\nedge z x\nedge y x\n";
    ParsedDocument d1 = parse_graph(text);
    ParsedDocument d2 = parse_graph(text);
    for (VertexId v = 0; v < d1.graph.vertex_count(); ++v)
        CHECK(d1.graph.name(v) == d2.graph.name(v));
    CHECK(serialize_document(d1) == serialize_document(d2));
}

TEST_CASE("components: basics") {
    Graph empty;
    CHECK(components(empty).empty());

    Graph two = test_support::graph_from_edges(4, {{0, 1}, {2, 3}});
    auto cells = components(two);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == std::vector<VertexId>{0, 1});
    CHECK(cells[1] == std::vector<VertexId>{2, 3});
}

TEST_CASE("components partition the vertex set and are idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = test_support::random_graph(rng, 1, 12);
        auto cells = components(inst.g);
        std::vector<char> seen(static_cast<size_t>(inst.g.vertex_count()), 0);
        for (const auto& cell : cells)
            for (VertexId v : cell) {
                CHECK_FALSE(seen[static_cast<size_t>(v)]);
                seen[static_cast<size_t>(v)] = 1;
            }
        for (char c : seen) CHECK(c == 1);
        CHECK(components(inst.g) == cells);
    }
}

TEST_CASE("path validation and reversal") {
    Graph g = test_support::graph_from_edges(3, {{0, 1}, {1, 2}});
    Path p{{0, 1, 2}, {0, 1}};
    CHECK(is_valid_path(g, p));
    CHECK(is_valid_path(g, reverse_path(p)));
    CHECK(canonical_path(g, reverse_path(p)).front() == 0);

    Path bad_edge{{0, 2}, {0}};
    CHECK_FALSE(is_valid_path(g, bad_edge));
    Path repeated{{0, 1, 0}, {0, 0}};
    CHECK_FALSE(is_valid_path(g, repeated));

    Graph d = test_support::graph_from_edges(2, {{0, 1}}, true);
    CHECK(is_valid_path(d, Path{{0, 1}, {0}}));
    CHECK_FALSE(is_valid_path(d, Path{{1, 0}, {0}}));  // against the arc
}

TEST_CASE("loops are storable but flagged") {
    Graph g = test_support::graph_from_edges(2, {{0, 0}, {0, 1}});
    CHECK(g.has_loops());
    CHECK(g.degree(0) == 3);  // loop counts twice
}

TEST_CASE("parser survives byte mutations") {
    std::string base =
        "graph undirected\ngroup Zm 6\nvertex a A\nvertex b A B\nvertex c\n"
        "edge a b label=3\nedge b c label=0\nedge a c label=5\n";
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> pos(0, static_cast<int>(base.size()) - 1);
    std::uniform_int_distribution<int> byte(32, 126);
    for (int trial = 0; trial < 500; ++trial) {
        std::string mutated = base;
        for (int hits = 0; hits <= trial % 3; ++hits)
            mutated[static_cast<size_t>(pos(rng))] = static_cast<char>(byte(rng));
        try {
            ParsedDocument doc = parse_graph(mutated);
            // Whatever parsed must serialize and re-parse cleanly.
            CHECK(serialize_document(parse_graph(serialize_document(doc))) ==
                  serialize_document(doc));
        } catch (const ParseError&) {
            // fine: rejected with a diagnostic
        } catch (const std::invalid_argument&) {
            // fine: a mutated group element or marker
        }
    }
}
