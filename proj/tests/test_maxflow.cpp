#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <moqc/maxflow.hpp>

using namespace moqc;

TEST_CASE("single arc network", "[maxflow]") {
    FlowNetwork net(2);
    net.add_arc(0, 1, 5);
    CHECK(net.max_flow(0, 1) == 5);
    CHECK(net.on_source_side(0));
    CHECK_FALSE(net.on_source_side(1));
}

TEST_CASE("parallel and serial composition", "[maxflow]") {
    FlowNetwork net(4);
    net.add_arc(0, 1, 3);
    net.add_arc(0, 2, 2);
    net.add_arc(1, 3, 2);
    net.add_arc(2, 3, 3);
    CHECK(net.max_flow(0, 3) == 4);
}

TEST_CASE("classic augmenting path trap", "[maxflow]") {
    // the diagonal arc tempts a greedy router; max flow is still 2000
    FlowNetwork net(4);
    net.add_arc(0, 1, 1000);
    net.add_arc(0, 2, 1000);
    net.add_arc(1, 2, 1);
    net.add_arc(1, 3, 1000);
    net.add_arc(2, 3, 1000);
    CHECK(net.max_flow(0, 3) == 2000);
}

TEST_CASE("flow value matches the cut it exposes", "[maxflow]") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + (int)(rng() % 8);
        FlowNetwork net(n);
        struct Arc {
            int u, v;
            long long cap;
        };
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng() % 100 < 40) {
                    long long cap = 1 + rng() % 20;
                    net.add_arc(u, v, cap);
                    arcs.push_back({u, v, cap});
                }
        long long flow = net.max_flow(0, n - 1);
        // max-flow equals min-cut: sum capacities of arcs leaving the
        // source side found by the final residual search
        long long cut = 0;
        for (const Arc& a : arcs)
            if (net.on_source_side(a.u) && !net.on_source_side(a.v)) cut += a.cap;
        CHECK(flow == cut);
        CHECK(net.on_source_side(0));
        if (flow > 0) CHECK_FALSE(net.on_source_side(n - 1));
    }
}
