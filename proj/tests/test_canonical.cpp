#include "kgs/canonical.hpp"

#include <map>
#include <random>

#include "doctest.h"
#include "kgs/generate.hpp"
#include "test_helpers.hpp"

using kgs::canonical_form;
using kgs::FormalityGraph;
using kgs::parse_graph;

TEST_CASE("idempotence on the wedge") {
    auto c = canonical_form(parse_graph("2 1; 0 1"));
    CHECK(c.sign == 1);
    CHECK(c.graph == parse_graph("2 1; 0 1"));
}

TEST_CASE("single transposition gives sign -1") {
    auto c = canonical_form(parse_graph("2 1; 1 0"));
    CHECK(c.sign == -1);
    CHECK(c.graph == parse_graph("2 1; 0 1"));
}

TEST_CASE("even automorphism is not a zero graph") {
    // 2<->3 maps the graph to itself with no tuple swaps
    auto c = canonical_form(parse_graph("2 2; 0 1 0 1"));
    CHECK(c.sign != 0);
}

TEST_CASE("zero graph detection agrees with brute force on small graphs") {
    // All Kontsevich graphs on 2 sinks with up to 3 aerial vertices, plus
    // Leibniz graphs on 3 sinks with up to 2 aerial vertices, exhaustively.
    std::vector<FormalityGraph> all;
    for (int n = 1; n <= 3; ++n) {
        const int total = 2 + n;
        std::vector<std::vector<int>> tuples(n);
        auto rec = [&](auto&& rec, int a) -> void {
            if (a == n) {
                all.emplace_back(2, tuples);
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
    }
    int zeros = 0;
    for (const auto& g : all) {
        bool brute = kgs_test::brute_is_zero(g);
        bool fast = (canonical_form(g).sign == 0);
        CHECK(brute == fast);
        if (brute) ++zeros;
    }
    CHECK(zeros > 0);  // the family does contain zero graphs
}

TEST_CASE("canonical form is a relabeling invariant (exhaustive small, sampled larger)") {
    std::mt19937 rng(7);
    std::vector<FormalityGraph> pool;
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : kgs::generate_kontsevich_graphs(2, n)) pool.push_back(g);
    for (const auto& g : kgs::generate_leibniz_graphs(3, 2)) pool.push_back(g);
    for (const auto& g : kgs::generate_leibniz_graphs(3, 3, {.nonzero = true})) pool.push_back(g);

    for (const auto& g : pool) {
        auto base = canonical_form(g);
        CHECK(base.sign == 1);       // generators emit canonical representatives
        CHECK(base.graph == g);      // idempotence
        for (int trial = 0; trial < 12; ++trial) {
            auto [shuffled, parity] = kgs_test::random_shuffle_graph(g, rng);
            auto c = canonical_form(shuffled);
            CHECK(c.graph == base.graph);
            CHECK(c.sign == parity * base.sign);  // multiplicativity
        }
    }
}

TEST_CASE("canonical classes match brute-force isomorphism classes") {
    // Exhaustive over all simple 2-sink Kontsevich graphs with n <= 3:
    // two graphs get the same canonical graph iff brute force says isomorphic.
    std::vector<FormalityGraph> all;
    for (int n = 2; n <= 3; ++n) {
        const int total = 2 + n;
        std::vector<std::vector<int>> tuples(n);
        auto rec = [&](auto&& rec, int a) -> void {
            if (a == n) {
                all.emplace_back(2, tuples);
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
    }
    std::map<std::vector<int>, FormalityGraph> brute_to_canonical;
    for (const auto& g : all) {
        auto key = kgs_test::brute_iso_key(g);
        auto canon = canonical_form(g).graph;
        auto [it, fresh] = brute_to_canonical.emplace(key, canon);
        if (!fresh) CHECK(it->second == canon);
    }
    // distinct brute keys must give distinct canonical graphs
    std::map<FormalityGraph, std::vector<int>> reverse;
    for (const auto& [key, canon] : brute_to_canonical) {
        auto [it, fresh] = reverse.emplace(canon, key);
        CHECK(fresh);
    }
}

TEST_CASE("trident sits first in canonical Leibniz graphs") {
    auto L1 = parse_graph("3 6; 2 7 1 8 1 3 1 2 4 0 5 0 1");
    auto c = canonical_form(L1);
    CHECK(c.graph.trident_index() == 0);
    CHECK(parse_graph(kgs::encode_graph(c.graph)) == c.graph);
}
