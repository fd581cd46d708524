#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace moqc {

/*
 * Reference oracle: exhaustive enumeration over all vertex subsets.
 *
 * Deliberately kept independent of the solver machinery (no branch and bound,
 * no flows, no frontier bookkeeping); everything is recomputed from the raw
 * edge list with bitmask arithmetic so it can serve as ground truth for the
 * solvers. Exponential: guarded to small n.
 */

namespace brute_detail {

constexpr int hard_cap = 24;

inline void check_size(const Graph& g, int max_n) {
    if (max_n > hard_cap) throw invalid_input("brute-force cap cannot exceed 24");
    if (g.n > max_n)
        throw invalid_input("graph too large for brute-force enumeration (n = " +
                            std::to_string(g.n) + ", limit " + std::to_string(max_n) + ")");
}

inline std::vector<std::uint32_t> adj_masks(const Graph& g) {
    std::vector<std::uint32_t> a(g.n, 0);
    for (auto [u, v] : g.edges) {
        a[u] |= std::uint32_t{1} << v;
        a[v] |= std::uint32_t{1} << u;
    }
    return a;
}

inline int edges_in_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    int twice = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        twice += std::popcount(adj[v] & mask);
    }
    return twice / 2;
}

// Lexicographic order on the sorted vertex lists the masks encode.
inline bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

inline std::vector<int> mask_to_ids(std::uint32_t mask) {
    std::vector<int> ids;
    for (; mask; mask &= mask - 1) ids.push_back(std::countr_zero(mask));
    return ids;
}

} // namespace brute_detail

struct BrutePoint {
    long long m;
    int k;
    bool operator==(const BrutePoint&) const = default;
};

struct BruteMoqcPoint {
    Rational density;
    int k;
    bool operator==(const BruteMoqcPoint& o) const { return k == o.k && density == o.density; }
};

struct BruteTable {
    int n = 0;
    long long m = 0;
    int omega = 0;
    std::vector<long long> per_k_max;     // index k-1, k = 1..n
    std::vector<VertexSet> per_k_witness; // lexicographically smallest optimum
    std::vector<std::vector<std::uint8_t>> achieved; // achieved[k-1][m] = 1

    bool achievable(long long edges, int k) const {
        if (k < 1 || k > n) return false;
        return edges >= 0 && edges < static_cast<long long>(achieved[k - 1].size()) &&
               achieved[k - 1][edges];
    }

    // No subgraph with strictly fewer vertices has strictly more edges.
    bool weakly_efficient(long long edges, int k) const {
        for (int kk = 1; kk < k; ++kk)
            if (per_k_max[kk - 1] > edges) return false;
        return true;
    }

    // No subgraph with more vertices is strictly denser (and vice versa).
    bool moqc_weakly_efficient(const Rational& d, int k) const {
        for (int kk = k + 1; kk <= n; ++kk)
            if (Rational(2 * per_k_max[kk - 1], static_cast<long long>(kk) * (kk - 1)) > d)
                return false;
        return true;
    }

    // Per-cardinality edge maxima spanning omega..n.
    std::vector<BrutePoint> mos_frontier() const {
        std::vector<BrutePoint> out;
        for (int k = omega; k <= n; ++k) out.push_back({per_k_max[k - 1], k});
        return out;
    }

    std::vector<BruteMoqcPoint> moqc_nondominated() const {
        std::vector<BruteMoqcPoint> pts;
        for (int k = 2; k <= n; ++k)
            pts.push_back({Rational(2 * per_k_max[k - 1], static_cast<long long>(k) * (k - 1)), k});
        std::vector<BruteMoqcPoint> out;
        for (const auto& p : pts) {
            bool dominated = false;
            for (const auto& q : pts) {
                bool geq = q.density >= p.density && q.k >= p.k;
                bool strict = q.density > p.density || q.k > p.k;
                if (geq && strict) { dominated = true; break; }
            }
            if (!dominated) out.push_back(p);
        }
        return out;
    }
};

inline BruteTable brute_table(const Graph& g, int max_n = 20) {
    brute_detail::check_size(g, max_n);
    auto adj = brute_detail::adj_masks(g);
    BruteTable t;
    t.n = g.n;
    t.m = g.m;
    t.per_k_max.assign(g.n, -1);
    t.per_k_witness.assign(g.n, VertexSet{});
    std::vector<std::uint32_t> best_mask(g.n, 0);
    t.achieved.assign(g.n, {});
    for (int k = 1; k <= g.n; ++k)
        t.achieved[k - 1].assign(static_cast<std::size_t>(k) * (k - 1) / 2 + 1, 0);

    const std::uint32_t all = (std::uint32_t{1} << g.n) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        int k = std::popcount(mask);
        int e = brute_detail::edges_in_mask(adj, mask);
        t.achieved[k - 1][e] = 1;
        if (e > t.per_k_max[k - 1] ||
            (e == t.per_k_max[k - 1] && brute_detail::mask_lex_less(mask, best_mask[k - 1]))) {
            t.per_k_max[k - 1] = e;
            best_mask[k - 1] = mask;
        }
    }
    for (int k = 1; k <= g.n; ++k) {
        t.per_k_witness[k - 1] = VertexSet(brute_detail::mask_to_ids(best_mask[k - 1]));
        if (t.per_k_max[k - 1] == static_cast<long long>(k) * (k - 1) / 2) t.omega = k;
    }
    return t;
}

struct BruteWsResult {
    std::int64_t value;
    VertexSet s;
};

// Maximum of w1*|E(S)| - w2*|S| over nonempty S, ties by cardinality then
// lexicographic vertex list.
inline BruteWsResult brute_ws(const Graph& g, std::int64_t w1, std::int64_t w2,
                              int max_n = 20) {
    brute_detail::check_size(g, max_n);
    auto adj = brute_detail::adj_masks(g);
    const std::uint32_t all = (std::uint32_t{1} << g.n) - 1;
    bool have = false;
    std::int64_t best = 0;
    std::uint32_t best_mask = 0;
    int best_k = 0;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        int k = std::popcount(mask);
        std::int64_t v = w1 * brute_detail::edges_in_mask(adj, mask) - w2 * k;
        if (!have || v > best ||
            (v == best && (k < best_k ||
                           (k == best_k && brute_detail::mask_lex_less(mask, best_mask))))) {
            have = true;
            best = v;
            best_mask = mask;
            best_k = k;
        }
    }
    return {best, VertexSet(brute_detail::mask_to_ids(best_mask))};
}

inline bool brute_is_weakly_efficient(const Graph& g, long long edges, int k,
                                      int max_n = 20) {
    auto t = brute_table(g, max_n);
    if (!t.achievable(edges, k))
        throw invalid_input("point is not achievable in this graph");
    return t.weakly_efficient(edges, k);
}

} // namespace moqc
