#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <moqc/brute.hpp>
#include <moqc/edks.hpp>
#include <moqc/graph_io.hpp>

#include "support/random_graphs.hpp"

using namespace moqc;

static Graph data_graph(const std::string& name) {
    return load_graph(std::string(TEST_DATA_DIR) + "/" + name);
}

TEST_CASE("per-cardinality optima on pinned instances", "[edks]") {
    struct Row {
        const char* file;
        std::vector<long long> per_k;  // k = 1..n
    };
    const Row rows[] = {
        {"c4.edges", {0, 1, 2, 4}},
        {"p3.edges", {0, 1, 2}},
        {"p4.edges", {0, 1, 2, 3}},
        {"k3.edges", {0, 1, 3}},
        {"k4.edges", {0, 1, 3, 6}},
        {"star13.edges", {0, 1, 2, 3}},
        {"matching2.edges", {0, 1, 1, 2}},
        {"c5chord.edges", {0, 1, 3, 5, 7}},
        {"petersen.edges", {0, 1, 2, 3, 5, 6, 8, 10, 12, 15}},
    };
    for (const Row& r : rows) {
        Graph g = data_graph(r.file);
        REQUIRE(g.n == (int)r.per_k.size());
        for (int k = 1; k <= g.n; ++k) {
            EdksResult res = edks(g, k);
            INFO(r.file << " k=" << k);
            CHECK(res.m_star == r.per_k[k - 1]);
            CHECK(res.witness.size() == k);
            CHECK(induced_edge_count(g, res.witness) == res.m_star);
        }
    }
}

TEST_CASE("random instances agree with exhaustive search", "[edks]") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + (int)(rng() % 9);
        double p = (1 + rng() % 9) / 10.0;
        Graph g = testsupport::er_graph(n, p, (unsigned)rng());
        BruteTable t = brute_table(g);
        for (int k = 1; k <= g.n; ++k) {
            EdksResult res = edks(g, k);
            INFO("n=" << n << " p=" << p << " k=" << k << " trial=" << trial);
            CHECK(res.m_star == t.per_k_max[k - 1]);
            CHECK(induced_edge_count(g, res.witness) == res.m_star);
        }
    }
}

TEST_CASE("density maxima never increase with cardinality", "[edks]") {
    std::mt19937 rng(808017);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + (int)(rng() % 10);
        Graph g = testsupport::er_graph(n, 0.5, (unsigned)rng());
        if (g.m == 0) continue;
        Rational prev(1, 1);
        bool first = true;
        for (int k = 2; k <= g.n; ++k) {
            Rational d = dks_density(g, k);
            if (!first) CHECK(d <= prev);
            prev = d;
            first = false;
        }
    }
}

TEST_CASE("largest quasi-clique via binary search", "[edks]") {
    Graph c4 = data_graph("c4.edges");
    MqcResult r = mqc(c4, Rational(1, 2));
    CHECK(r.k == 4);  // density 2/3 at the full cycle
    CHECK(r.density == Rational(2, 3));
    MqcResult s = mqc(c4, Rational(3, 4));
    CHECK(s.k == 2);
    CHECK(s.density == Rational(1, 1));

    Graph pet = data_graph("petersen.edges");
    MqcResult t = mqc(pet, Rational(1, 3));
    CHECK(t.k == 10);
    MqcResult u = mqc(pet, Rational(2, 5));
    CHECK(u.k == 6);  // density falls below 2/5 from cardinality 7 on
}

TEST_CASE("binary search matches a linear scan", "[edks]") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + (int)(rng() % 8);
        Graph g = testsupport::er_graph(n, 0.4, (unsigned)rng());
        if (g.m == 0) continue;
        long long num = 1 + rng() % 10;
        long long den = num + rng() % 10;
        Rational gamma(num, den);
        int linear = 0;
        for (int k = 2; k <= g.n; ++k)
            if (dks_density(g, k) >= gamma) linear = k;
        if (linear == 0) continue;  // threshold above every density
        MqcResult r = mqc(g, gamma);
        INFO("n=" << n << " gamma=" << gamma.to_string());
        CHECK(r.k == linear);
        CHECK(r.density >= gamma);
        CHECK(induced_edge_count(g, r.witness) == r.m);
    }
}

TEST_CASE("quasi-clique witnesses are weakly efficient densities", "[edks]") {
    // the witness returned for a threshold is a densest subgraph at its
    // cardinality, so no larger subgraph can match its density
    Graph g = data_graph("c5chord.edges");
    MqcResult r = mqc(g, Rational(4, 5));
    CHECK(r.k == 4);
    CHECK(r.density == Rational(5, 6));
    for (int k = r.k + 1; k <= g.n; ++k) CHECK(dks_density(g, k) < r.density);
}

TEST_CASE("degenerate thresholds are rejected", "[edks]") {
    Graph g = data_graph("c4.edges");
    CHECK_THROWS_AS(mqc(g, Rational(0, 1)), invalid_input);
    CHECK_THROWS_AS(mqc(g, Rational(3, 2)), invalid_input);
    GraphBuilder b;
    b.declare_labels(2);
    CHECK_THROWS_AS(mqc(b.finish(), Rational(1, 2)), infeasible_error);
}

TEST_CASE("the search honours its time budget", "[edks]") {
    Graph g = testsupport::er_graph(40, 0.5, 99);
    Budget tiny = Budget::seconds(0.0);
    CHECK_THROWS_AS(edks(g, 20, &tiny), timeout_error);
}
