#include <catch2/catch_amalgamated.hpp>

#include <moqc/brute.hpp>
#include <moqc/graph_io.hpp>

using namespace moqc;

static Graph data_graph(const std::string& name) {
    return load_graph(std::string(TEST_DATA_DIR) + "/" + name);
}

TEST_CASE("enumeration table for the 4-cycle", "[brute]") {
    BruteTable t = brute_table(data_graph("c4.edges"));
    CHECK(t.omega == 2);
    CHECK(t.per_k_max == std::vector<long long>{0, 1, 2, 4});
    CHECK(t.achievable(1, 2));
    CHECK(t.achievable(0, 2));
    CHECK_FALSE(t.achievable(2, 2));
    CHECK(t.weakly_efficient(2, 3));
    CHECK_FALSE(t.weakly_efficient(0, 3));

    auto mos = t.mos_frontier();
    REQUIRE(mos.size() == 3);
    CHECK(mos[0] == BrutePoint{1, 2});
    CHECK(mos[1] == BrutePoint{2, 3});
    CHECK(mos[2] == BrutePoint{4, 4});

    auto moqc = t.moqc_nondominated();
    REQUIRE(moqc.size() == 2);
    CHECK(moqc[0].k == 2);
    CHECK(moqc[0].density == Rational(1, 1));
    CHECK(moqc[1].k == 4);
    CHECK(moqc[1].density == Rational(2, 3));
}

TEST_CASE("clique number spans from the table", "[brute]") {
    CHECK(brute_table(data_graph("k4.edges")).omega == 4);
    CHECK(brute_table(data_graph("k3.edges")).omega == 3);
    CHECK(brute_table(data_graph("p4.edges")).omega == 2);
    CHECK(brute_table(data_graph("c5chord.edges")).omega == 3);
    CHECK(brute_table(data_graph("petersen.edges")).omega == 2);
}

TEST_CASE("nondominated densities collapse ties to the larger subgraph", "[brute]") {
    // two disjoint edges: density 1/3 is achieved at both 3 and 4 vertices
    // and only the 4-vertex point survives
    BruteTable t = brute_table(data_graph("matching2.edges"));
    auto pts = t.moqc_nondominated();
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].k == 2);
    CHECK(pts[0].density == Rational(1, 1));
    CHECK(pts[1].k == 4);
    CHECK(pts[1].density == Rational(1, 3));
}

TEST_CASE("witnesses recorded by the table achieve their optimum", "[brute]") {
    Graph g = data_graph("c5chord.edges");
    BruteTable t = brute_table(g);
    for (int k = 1; k <= g.n; ++k) {
        CHECK((int)t.per_k_witness[k - 1].size() == k);
        CHECK(induced_edge_count(g, t.per_k_witness[k - 1]) == t.per_k_max[k - 1]);
    }
}

TEST_CASE("weak efficiency probe validates its inputs", "[brute]") {
    Graph g = data_graph("c4.edges");
    CHECK(brute_is_weakly_efficient(g, 2, 3));
    CHECK_THROWS_AS(brute_is_weakly_efficient(g, 4, 3), invalid_input);
    // the three leaves of a star span no edges, and a single edge beats them
    Graph star = data_graph("star13.edges");
    CHECK_FALSE(brute_is_weakly_efficient(star, 0, 3));
}

TEST_CASE("size guard refuses graphs beyond the cap", "[brute]") {
    GraphBuilder b;
    b.declare_labels(30);
    b.add_edge(1, 2);
    Graph g = b.finish();
    CHECK_THROWS_AS(brute_table(g), invalid_input);
    CHECK_THROWS_AS(brute_table(g, 25), invalid_input);  // hard cap stays at 24
}
