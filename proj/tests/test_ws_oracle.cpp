#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <moqc/brute.hpp>
#include <moqc/graph_io.hpp>
#include <moqc/ws_oracle.hpp>

#include "support/random_graphs.hpp"

using namespace moqc;

static Graph data_graph(const std::string& name) {
    return load_graph(std::string(TEST_DATA_DIR) + "/" + name);
}

TEST_CASE("weighted sums on hand-checked instances", "[ws]") {
    Graph k3 = data_graph("k3.edges");
    WsSolution s = ws_mos_optimum(k3, 2, 1);
    CHECK(s.value == 3);  // the whole triangle: 2*3 - 1*3
    CHECK(s.s.size() == 3);
    CHECK(s.edges == 3);

    Graph c4 = data_graph("c4.edges");
    WsSolution t = ws_mos_optimum(c4, 3, 4);
    CHECK(t.value == -4);  // best is a single vertex
    CHECK(t.s.size() == 1);
    CHECK(t.edges == 0);
}

TEST_CASE("stars force the nonempty repair path", "[ws]") {
    // all weighted values are negative here, so the unconstrained closure
    // is empty and the solver must fall back to forced-vertex variants
    GraphBuilder b;
    for (int leaf = 2; leaf <= 4; ++leaf) b.add_edge(1, leaf);
    Graph star3 = b.finish();
    WsSolution s = ws_mos_optimum(star3, 6, 5);
    CHECK(s.value == -2);
    CHECK(s.s.size() == 4);  // the full star beats any single vertex

    GraphBuilder b2;
    for (int leaf = 2; leaf <= 6; ++leaf) b2.add_edge(1, leaf);
    Graph star5 = b2.finish();
    WsSolution t = ws_mos_optimum(star5, 8, 7);
    CHECK(t.value == -2);
    CHECK(t.s.size() == 6);

    // heavier vertex weight flips the optimum to a singleton
    WsSolution u = ws_mos_optimum(star3, 2, 3);
    CHECK(u.value == -3);
    CHECK(u.s.size() == 1);
}

TEST_CASE("solution value is internally consistent", "[ws]") {
    Graph g = data_graph("petersen.edges");
    for (long long w1 : {1, 2, 5}) {
        for (long long w2 : {1, 3, 4}) {
            WsSolution s = ws_mos_optimum(g, w1, w2);
            CHECK(s.edges == induced_edge_count(g, s.s));
            CHECK(s.value == w1 * s.edges - w2 * s.s.size());
            CHECK(s.s.size() >= 1);
        }
    }
}

TEST_CASE("weights must be positive", "[ws]") {
    Graph g = data_graph("k3.edges");
    CHECK_THROWS_AS(ws_mos_optimum(g, 0, 1), invalid_input);
    CHECK_THROWS_AS(ws_mos_optimum(g, 1, 0), invalid_input);
    CHECK_THROWS_AS(ws_mos_optimum(g, -1, 1), invalid_input);
}

TEST_CASE("random graphs agree with exhaustive search", "[ws]") {
    std::mt19937 rng(555001);
    int star_family = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g;
        if (trial % 20 == 0) {
            // sprinkle stars into the mix; they exercise the repair loop
            int leaves = 2 + (int)(rng() % 6);
            GraphBuilder b;
            for (int leaf = 2; leaf <= leaves + 1; ++leaf) b.add_edge(1, leaf);
            g = b.finish();
            ++star_family;
        } else {
            int n = 3 + (int)(rng() % 9);
            double p = (1 + rng() % 9) / 10.0;
            g = testsupport::er_graph(n, p, (unsigned)rng());
            if (g.m == 0) continue;
        }
        long long w1 = 1 + rng() % 9;
        long long w2 = 1 + rng() % 9;
        WsSolution fast = ws_mos_optimum(g, w1, w2);
        BruteWsResult slow = brute_ws(g, w1, w2);
        INFO("n=" << g.n << " m=" << g.m << " w1=" << w1 << " w2=" << w2);
        CHECK(fast.value == slow.value);
        CHECK(fast.s.size() == slow.s.size());
        CHECK(fast.value == w1 * induced_edge_count(g, fast.s) - w2 * fast.s.size());
    }
    CHECK(star_family >= 10);
}
