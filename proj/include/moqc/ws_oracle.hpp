#pragma once

#include <cstdint>

#include "graph.hpp"
#include "maxflow.hpp"

namespace moqc {

struct WsSolution {
    std::int64_t value = 0; // w1*|E(S)| - w2*|S|
    long long edges = 0;
    VertexSet s;
};

namespace detail {

struct ClosureCut {
    std::int64_t flow;
    std::vector<int> side; // vertices on the source side
};

// Project-selection network: one project node per edge (profit w1), one
// resource node per vertex (cost w2), infinite arcs tie a project to its two
// endpoints. Maximum closure value = w1*m - min cut. force >= 0 pins that
// vertex into the closure by dropping its cost arc.
inline ClosureCut closure_cut(const Graph& g, std::int64_t w1, std::int64_t w2, int force) {
    int s = 0, t = 1;
    auto vnode = [](int v) { return 2 + v; };
    auto enode = [&](long long e) { return 2 + g.n + static_cast<int>(e); };
    FlowNetwork net(2 + g.n + static_cast<int>(g.m));
    std::int64_t inf = w1 * g.m + w2 * g.n + 1;
    for (long long e = 0; e < g.m; ++e) {
        net.add_arc(s, enode(e), w1);
        net.add_arc(enode(e), vnode(g.edges[e].first), inf);
        net.add_arc(enode(e), vnode(g.edges[e].second), inf);
    }
    for (int v = 0; v < g.n; ++v)
        if (v != force) net.add_arc(vnode(v), t, w2);
    ClosureCut cut;
    cut.flow = net.max_flow(s, t);
    for (int v = 0; v < g.n; ++v)
        if (net.on_source_side(vnode(v))) cut.side.push_back(v);
    return cut;
}

} // namespace detail

// Maximizes w1*|E(S)| - w2*|S| over nonempty vertex sets S. Ties resolved by
// minimum cardinality, then lexicographically smallest set; both are inherited
// from reporting the minimal min cut (contained in every optimal closure).
inline WsSolution ws_mos_optimum(const Graph& g, std::int64_t w1, std::int64_t w2) {
    if (w1 <= 0 || w2 <= 0) throw invalid_input("weighted-sum weights must be positive");
    auto cut = detail::closure_cut(g, w1, w2, -1);
    WsSolution best;
    bool have = false;
    if (!cut.side.empty()) {
        best.s = VertexSet(cut.side);
        best.value = w1 * g.m - cut.flow;
        have = true;
    } else {
        // The unconstrained optimum is the empty set; rerun with each vertex
        // pinned into the closure and keep the best nonempty answer.
        for (int v = 0; v < g.n; ++v) {
            auto forced = detail::closure_cut(g, w1, w2, v);
            std::int64_t val = w1 * g.m - forced.flow - w2;
            VertexSet sv(forced.side);
            sv.add(v);
            if (!have || val > best.value ||
                (val == best.value && (sv.size() < best.s.size() ||
                                       (sv.size() == best.s.size() && sv < best.s)))) {
                best.value = val;
                best.s = sv;
                have = true;
            }
        }
    }
    best.edges = induced_edge_count(g, best.s);
    if (best.value != w1 * best.edges - w2 * best.s.size())
        throw internal_error("weighted-sum value does not match its witness");
    return best;
}

} // namespace moqc
