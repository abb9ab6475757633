#include "kgs/graph.hpp"

#include "doctest.h"

using kgs::FormalityGraph;
using kgs::parse_graph;

TEST_CASE("parse wedge") {
    auto g = parse_graph("2 1; 0 1");
    CHECK(g.ground_count() == 2);
    CHECK(g.aerial_count() == 1);
    CHECK(g.out_targets(0) == std::vector<int>{0, 1});
    CHECK(g.is_kontsevich());
}

TEST_CASE("parse tripod") {
    auto g = parse_graph("3 1; 0 1 2");
    CHECK(g.ground_count() == 3);
    CHECK(g.trident_index() == 0);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse the layer-one witness graph") {
    auto g = parse_graph("3 6; 2 7 1 8 1 3 1 2 4 0 5 0 1");
    CHECK(g.ground_count() == 3);
    CHECK(g.aerial_count() == 6);
    // vertex 6 is the trident (aerial index 3)
    CHECK(g.trident_index() == 3);
    CHECK(g.out_targets(0) == std::vector<int>{2, 7});
    CHECK(g.out_targets(1) == std::vector<int>{1, 8});
    CHECK(g.out_targets(2) == std::vector<int>{1, 3});
    CHECK(g.out_targets(3) == std::vector<int>{1, 2, 4});
    CHECK(g.out_targets(4) == std::vector<int>{0, 5});
    CHECK(g.out_targets(5) == std::vector<int>{0, 1});
    CHECK(g.edge_count() == 13);
    CHECK(tri_differential_order(g) == std::vector<int>{2, 4, 2});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("2 1"), kgs::parse_error);          // no semicolon
    CHECK_THROWS_AS(parse_graph("2 1; 0"), kgs::parse_error);       // too few labels
    CHECK_THROWS_AS(parse_graph("2 1; 0 5"), kgs::parse_error);     // label out of range
    CHECK_THROWS_AS(parse_graph("2 1; 2 0"), kgs::parse_error);     // tadpole
    CHECK_THROWS_AS(parse_graph("2 1; 0 0"), kgs::parse_error);     // duplicate edge
    CHECK_THROWS_AS(parse_graph("3 2; 0 1 2 0 1 2"), kgs::parse_error);  // two tridents
    CHECK_THROWS_AS(parse_graph("2 1; 0 x"), kgs::parse_error);     // junk token
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(FormalityGraph(2, {{0, 0}}), kgs::graph_error);
    CHECK_THROWS_AS(FormalityGraph(2, {{2, 0}}), kgs::graph_error);
    CHECK_THROWS_AS(FormalityGraph(0, {}), kgs::graph_error);
    CHECK_THROWS_AS(FormalityGraph(3, {{0, 1, 2}, {0, 1, 2}}), kgs::graph_error);
    CHECK_NOTHROW(FormalityGraph(1, {}));  // single sink, no aerial vertices
}

TEST_CASE("encode round trips") {
    CHECK(kgs::encode_graph(parse_graph("2 1; 0 1")) == "2 1; 0 1");
    const char* lines[] = {"2 1; 0 1", "3 1; 0 1 2", "2 0;", "2 2; 0 1 0 2",
                           "3 6; 2 7 1 8 1 3 1 2 4 0 5 0 1", "2 1; 1 0"};
    for (const char* line : lines) {
        auto g = parse_graph(line);
        CHECK(parse_graph(kgs::encode_graph(g)) == g);
    }
}

TEST_CASE("tri-differential order") {
    CHECK(tri_differential_order(parse_graph("3 1; 0 1 2")) == std::vector<int>{1, 1, 1});
    CHECK(tri_differential_order(parse_graph("2 1; 0 1")) == std::vector<int>{1, 1});
}

TEST_CASE("leibniz edge count is 2k-1") {
    // a Leibniz graph with aerial = k-1 vertices has 3+(k-2)*2 = 2k-1 edges
    auto g = parse_graph("3 6; 2 7 1 8 1 3 1 2 4 0 5 0 1");
    int k = g.aerial_count() + 1;
    CHECK(g.edge_count() == 2 * k - 1);
}
