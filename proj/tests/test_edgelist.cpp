#include <doctest.h>

#include <string>
#include <vector>

#include "constructions.hpp"
#include "edgelist.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "metrics.hpp"

using namespace ordeg;

TEST_CASE("emit canonical form") {
    Graph tri = Graph::from_edges(3, std::vector<Edge>{{1, 2}, {0, 2}, {0, 1}});
    CHECK(emit_edge_list(tri) == "0 1\n0 2\n1 2\n");

    // An isolated tail vertex forces the order header.
    Graph tail = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(emit_edge_list(tail) == "# order 4\n0 1\n0 2\n1 2\n");

    Graph edgeless = Graph::from_edges(3, {});
    CHECK(emit_edge_list(edgeless) == "# order 3\n");
}

TEST_CASE("parse accepts comments blanks and loose whitespace") {
    Graph g = parse_edge_list("# a remark\n\n0   1\n 1\t2 \n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
}

TEST_CASE("order resolution precedence") {
    // Max endpoint rules when nothing else is given.
    CHECK(parse_edge_list("0 1\n5 6\n").order() == 7);
    // Header directive beats the inferred order.
    CHECK(parse_edge_list("# order 9\n0 1\n").order() == 9);
    // The explicit argument beats both.
    CHECK(parse_edge_list("# order 9\n0 1\n", 12).order() == 12);
    // Directive only, no edges.
    Graph g = parse_edge_list("# order 3\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::uint64_t {
        try {
            parse_edge_list(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1\nx y\n") == 2);
    CHECK(line_of("0 1\n2\n") == 2);
    CHECK(line_of("0 1 2\n") == 1);
    CHECK(line_of("3 3\n") == 1);                    // self-loop
    CHECK(line_of("# order 4\n# order 4\n0 1\n") == 2);  // duplicate directive
    CHECK(line_of("# order 2\n0 2\n") == 2);         // endpoint out of range
    CHECK(line_of("") == 1);                         // nothing to infer an order from
    CHECK(line_of("# order 0\n") == 1);

    try {
        parse_edge_list("0 1\nx y\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    // Explicit order below an endpoint.
    CHECK_THROWS_AS(parse_edge_list("0 5\n", 3), parse_error);
}

TEST_CASE("emit and parse are mutually inverse") {
    std::vector<Graph> grid;
    grid.push_back(petersen());
    grid.push_back(g8());
    grid.push_back(kg8(3));
    grid.push_back(brown_field(3));
    grid.push_back(cycle(5));
    grid.push_back(hypercube(4));
    grid.push_back(Graph::from_edges(6, std::vector<Edge>{{0, 1}, {2, 3}}));
    grid.push_back(Graph::from_edges(4, {}));
    for (const Graph& g : grid) {
        std::string text = emit_edge_list(g);
        Graph back = parse_edge_list(text);
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
        CHECK(emit_edge_list(back) == text);
    }
}

TEST_CASE("parse rejects oversized orders") {
    CHECK_THROWS_AS(parse_edge_list("# order 1048577\n"), parse_error);
    CHECK_NOTHROW(parse_edge_list("# order 1048576\n"));
}
