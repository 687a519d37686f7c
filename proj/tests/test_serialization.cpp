#include <doctest.h>

#include <random>

#include "observa/generators.hpp"
#include "observa/serialization.hpp"

using namespace observa;

TEST_SUITE_BEGIN("serialization");

TEST_CASE("minimal JSON document") {
    const auto g = parse_graph(R"({"nodes":["0"],"colors":["a"],"edges":[["0","0","a"]]})", GraphFormat::json);
    CHECK(g == named_example("loop1"));
}

TEST_CASE("malformed JSON reports a position") {
    try {
        parse_graph(R"({"nodes":})", GraphFormat::json);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.location().rfind("line 1, column", 0) == 0);
    }
}

TEST_CASE("schema errors name the field") {
    auto location_of = [](const char* text) {
        try {
            graph_from_json(parse_json_text(text));
        } catch (const ParseError& e) {
            return e.location();
        }
        return std::string("no error");
    };
    CHECK(location_of(R"({"colors":[],"edges":[]})") == "$");
    CHECK(location_of(R"({"nodes":["0"],"colors":["a"],"edges":[["0","9","a"]]})") == "edges[0][1]");
    CHECK(location_of(R"({"nodes":["0"],"colors":["a"],"edges":[["0","0","z"]]})") == "edges[0][2]");
    CHECK(location_of(R"({"nodes":["0"],"colors":["a"],"edges":[["0"]]})") == "edges[0]");
}

TEST_CASE("pairs are unobservable edges unless node colors are given") {
    const auto silent = graph_from_json(parse_json_text(R"({"nodes":["x","y"],"colors":[],"edges":[["x","y"]]})"));
    CHECK(silent.edges.empty());
    CHECK(silent.unobservable == std::vector<Arc>{{0, 1}});

    const auto node_colored = graph_from_json(parse_json_text(
        R"({"nodes":["x","y"],"colors":["r","g"],"node_colors":{"x":"g","y":"r"},"edges":[["x","y"],["y","x"]]})"));
    CHECK(node_colored.edges == std::vector<Edge>{{0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("DOT input") {
    const char* text = R"(
        // colors: ["S","D"]
        strict digraph star {
          node [shape=circle];
          c; "l1"; l2
          c -> l1 [label="S"]; c -> l2 [label=S]
          l1 -> c [label="D"]
          /* silent */ l2 -> c -> l1 [style=dotted]
        })";
    const auto g = graph_from_dot(text);
    CHECK(g.color_labels == std::vector<std::string>{"S", "D"});
    CHECK(g.node_labels == std::vector<std::string>{"c", "l1", "l2"});
    CHECK(g.edges == std::vector<Edge>{{0, 1, 0}, {0, 2, 0}, {1, 0, 1}});
    CHECK(g.unobservable == std::vector<Arc>{{2, 0}, {0, 1}});

    CHECK_THROWS_AS(graph_from_dot("graph g { a -- b }"), ParseError);
    CHECK_THROWS_AS(graph_from_dot("// colors: [\"a\"]\ndigraph { a -> b [label=z] }"), ParseError);
    CHECK_THROWS_AS(graph_from_dot("digraph { a -> }"), ParseError);
}

TEST_CASE("format detection") {
    CHECK(detect_format("  \n{\"nodes\":[]}") == GraphFormat::json);
    CHECK(detect_format("digraph {}") == GraphFormat::dot);
}

TEST_CASE("round trips") {
    std::vector<ColoredDigraph> graphs = {named_example("loop1"), named_example("twocyc"), named_example("shift"),
                                          star_graph(3), worst_case_family(5), ColoredDigraph{}};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        ColoredDigraph g = random_colored_graph(1 + rng() % 6, 1 + rng() % 3, 0.25, rng());
        if (i % 3 == 0) g.unobservable.push_back({0, static_cast<NodeId>(g.node_count() - 1)});
        graphs.push_back(g);
    }
    ColoredDigraph odd = ColoredDigraph::with_nodes(2, {"x y", "q\"uote"});
    odd.node_labels = {"has space", "back\\slash"};
    odd.add_edge(0, 1, 0);
    odd.add_edge(1, 1, 1);
    graphs.push_back(odd);

    for (const auto& g : graphs) {
        for (GraphFormat f : {GraphFormat::json, GraphFormat::dot}) {
            const std::string text = serialize_graph(g, f);
            const ColoredDigraph back = parse_graph(text, detect_format(text));
            CHECK(same_graph(back, g));
            CHECK(serialize_graph(back, f) == text);
        }
    }
}

TEST_CASE("uncolored topology document") {
    const auto artifact = reduce_3colorability(UndirectedGraph::complete(3));
    const ColoredDigraph g = uncolored_graph(artifact.output);
    const nlohmann::json doc = graph_to_json(g);
    CHECK(doc["colors"].empty());
    CHECK(doc["edges"].size() == 20);
    CHECK(doc["edges"][0].size() == 2);
    CHECK(topology_of(graph_from_json(doc)) == artifact.output);
}

TEST_SUITE_END();
