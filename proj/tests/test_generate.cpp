#include "kgs/generate.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "kgs/canonical.hpp"
#include "test_helpers.hpp"

using kgs::FormalityGraph;
using kgs::generate_kontsevich_graphs;
using kgs::generate_leibniz_graphs;

TEST_CASE("smallest kontsevich sets") {
    auto one = generate_kontsevich_graphs(2, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == kgs::parse_graph("2 1; 0 1"));

    auto zero = generate_kontsevich_graphs(2, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].aerial_count() == 0);
    CHECK(zero[0].ground_count() == 2);
}

TEST_CASE("kontsevich count at n=3 matches a brute-force enumerator") {
    // Independent oracle: enumerate all ordered target assignments, key each
    // nonzero graph by its brute-force isomorphism key, count classes.
    const int n = 3, total = 2 + n;
    std::set<std::vector<int>> classes;
    std::vector<std::vector<int>> tuples(n);
    auto rec = [&](auto&& rec, int a) -> void {
        if (a == n) {
            FormalityGraph g(2, tuples);
            if (!kgs_test::brute_is_zero(g)) classes.insert(kgs_test::brute_iso_key(g));
            return;
        }
        for (int x = 0; x < total; ++x)
            for (int y = x + 1; y < total; ++y) {
                if (x == 2 + a || y == 2 + a) continue;
                tuples[a] = {x, y};
                rec(rec, a + 1);
            }
    };
    rec(rec, 0);

    auto generated = generate_kontsevich_graphs(2, 3);
    CHECK(generated.size() == classes.size());
}

TEST_CASE("affine cap filters by aerial in-degree") {
    auto all = generate_kontsevich_graphs(2, 3);
    auto affine = generate_kontsevich_graphs(2, 3, 1);
    CHECK(affine.size() < all.size());
    for (const auto& g : affine) CHECK(g.max_aerial_in_degree() <= 1);
}

TEST_CASE("leibniz generation counts match the published table") {
    kgs::LeibnizCounts counts;

    auto tripod_only = generate_leibniz_graphs(3, 1, {}, &counts);
    CHECK(counts.generated == 1);
    CHECK(counts.nonzero == 1);
    CHECK(counts.all_sinks_hit == 1);
    REQUIRE(tripod_only.size() == 1);
    CHECK(tripod_only[0] == kgs::parse_graph("3 1; 0 1 2"));

    generate_leibniz_graphs(3, 2, {}, &counts);
    CHECK(counts.generated == 24);
    CHECK(counts.nonzero == 24);
    CHECK(counts.all_sinks_hit == 15);

    generate_leibniz_graphs(3, 3, {}, &counts);
    CHECK(counts.generated == 520);
    CHECK(counts.nonzero == 490);
    CHECK(counts.all_sinks_hit == 301);
}

TEST_CASE("leibniz filters compose cumulatively") {
    auto nonzero = generate_leibniz_graphs(3, 3, {.nonzero = true});
    auto hit = generate_leibniz_graphs(3, 3, {.nonzero = false, .all_sinks_hit = true});
    CHECK(nonzero.size() == 490);
    CHECK(hit.size() == 301);
    for (const auto& g : hit) {
        for (int d : tri_differential_order(g)) CHECK(d >= 1);
        CHECK(kgs::canonical_form(g).sign == 1);
    }
    // every Leibniz graph with aerial = k-1 vertices has 2k-1 edges
    for (const auto& g : nonzero) CHECK(g.edge_count() == 2 * (g.aerial_count() + 1) - 1);
}

TEST_CASE("affine leibniz graphs respect the degree bounds") {
    auto graphs = generate_leibniz_graphs(3, 3, {.nonzero = true, .affine = true});
    CHECK(!graphs.empty());
    for (const auto& g : graphs) {
        auto deg = g.in_degrees();
        for (int a = 0; a < g.aerial_count(); ++a) {
            int cap = (a == g.trident_index()) ? 2 : 1;
            CHECK(deg[g.ground_count() + a] <= cap);
        }
    }
}
