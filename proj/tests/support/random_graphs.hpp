#pragma once

#include <random>

#include <moqc/graph.hpp>

namespace testsupport {

// Deterministic Erdos-Renyi sample; the same (n, p, seed) triple always
// yields the same graph on every platform.
inline moqc::Graph er_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    moqc::GraphBuilder b;
    b.declare_labels(n);
    const std::uint32_t threshold = static_cast<std::uint32_t>(p * 1000000.0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % 1000000 < threshold) b.add_edge(u, v);
    return b.finish();
}

}  // namespace testsupport
