#pragma once

#include <algorithm>
#include <vector>

#include "budget.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace moqc {

struct EdksResult {
    long long m_star = 0;
    VertexSet witness;
    long long nodes = 0;  // branch-and-bound nodes visited
    long long pruned = 0; // nodes cut by the bound
};

namespace edks_detail {

struct State {
    const Graph& g;
    int k;
    const Budget* budget;
    long long best;
    std::vector<int> best_set;
    std::vector<int> chosen;
    long long nodes = 0;
    long long pruned = 0;
    std::vector<long long> scores;             // scratch
    long long cap = (1LL << 62);               // proven upper bound; reaching it ends the search
};

/*
 * Admissible bound for extending `chosen` (with e_c internal edges) by
 * t = k - |chosen| vertices out of `cand`: any completion T gains
 *   sum_{v in T} deg_chosen(v) + e(T),
 * and e(T) <= sum_{v in T} min(deg_cand(v), t-1) / 2, so the best t values of
 * 2*deg_chosen(v) + min(deg_cand(v), t-1), halved and floored, never
 * underestimate the true optimum.
 */
inline long long upper_bound(State& st, long long e_c, const std::vector<int>& cand,
                             const std::vector<int>& deg_c, const std::vector<int>& deg_r,
                             int t) {
    auto& sc = st.scores;
    sc.clear();
    for (int v : cand)
        sc.push_back(2LL * deg_c[v] + std::min<long long>(deg_r[v], t - 1));
    std::nth_element(sc.begin(), sc.begin() + (t - 1), sc.end(), std::greater<>());
    long long sum = 0;
    for (int i = 0; i < t; ++i) sum += sc[i];
    return e_c + sum / 2;
}

inline void search(State& st, long long e_c, std::vector<int>& cand,
                   std::vector<int>& deg_c, std::vector<int>& deg_r) {
    if (st.best >= st.cap) return; // incumbent already provably optimal, unwind
    ++st.nodes;
    if (st.budget && (st.nodes & 0xfff) == 0) st.budget->check();
    int t = st.k - static_cast<int>(st.chosen.size());
    if (t == 0) {
        if (e_c > st.best) {
            st.best = e_c;
            st.best_set = st.chosen;
        }
        return;
    }
    if (static_cast<int>(cand.size()) < t) return;
    if (upper_bound(st, e_c, cand, deg_c, deg_r, t) <= st.best) {
        ++st.pruned;
        return;
    }

    // pivot: highest degree within the remaining subgraph, smallest id on ties
    int pivot = -1;
    long long pd = -1;
    for (int v : cand) {
        long long d = deg_c[v] + deg_r[v];
        if (d > pd) {
            pd = d;
            pivot = v;
        }
    }

    std::vector<int> rest;
    rest.reserve(cand.size() - 1);
    for (int v : cand)
        if (v != pivot) rest.push_back(v);

    // include branch; pivot brings deg_c[pivot] new internal edges
    long long gained = deg_c[pivot];
    st.chosen.push_back(pivot);
    for (int u : st.g.adj[pivot]) {
        ++deg_c[u];
        --deg_r[u];
    }
    search(st, e_c + gained, rest, deg_c, deg_r);
    st.chosen.pop_back();
    for (int u : st.g.adj[pivot]) {
        --deg_c[u];
        ++deg_r[u];
    }

    // exclude branch
    for (int u : st.g.adj[pivot]) --deg_r[u];
    search(st, e_c, rest, deg_c, deg_r);
    for (int u : st.g.adj[pivot]) ++deg_r[u];
}

} // namespace edks_detail

// Maximum number of edges over induced subgraphs with exactly k vertices,
// with a deterministic witness. Exact branch and bound; the incumbent starts
// from a greedy max-degree extension. A caller already holding a promising
// size-k set may pass it as `warm`; it is adopted when it beats the greedy
// start. `cap`, when nonnegative, must be a valid upper bound on the optimum
// (say, the maximum one cardinality up during a downward sweep); the search
// returns as soon as the incumbent reaches it.
inline EdksResult edks(const Graph& g, int k, const Budget* budget = nullptr,
                       const VertexSet* warm = nullptr, long long cap = -1) {
    if (k < 1 || k > g.n) throw invalid_input("edks: k out of range 1..n");
    if (budget) budget->check();

    VertexSet greedy;
    for (int i = 0; i < k; ++i) greedy.add(max_degree_extension_vertex(g, greedy));
    EdksResult res;
    res.m_star = induced_edge_count(g, greedy);
    res.witness = greedy;
    if (warm && warm->size() == k) {
        long long wm = induced_edge_count(g, *warm);
        if (wm > res.m_star) {
            res.m_star = wm;
            res.witness = *warm;
        }
    }
    long long all = static_cast<long long>(k) * (k - 1) / 2;
    long long ub = (cap >= 0 && cap < all) ? cap : all;
    if (res.m_star >= ub) return res; // incumbent meets a proven bound

    edks_detail::State st{g, k, budget, res.m_star, {}, {}, 0, 0, {}, ub};
    std::vector<int> cand(g.n);
    for (int v = 0; v < g.n; ++v) cand[v] = v;
    std::vector<int> deg_c(g.n, 0), deg_r(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg_r[v] = g.degree(v);
    edks_detail::search(st, 0, cand, deg_c, deg_r);

    res.nodes = st.nodes;
    res.pruned = st.pruned;
    if (st.best > res.m_star) {
        res.m_star = st.best;
        res.witness = VertexSet(st.best_set);
    }
    return res;
}

inline Rational dks_density(const Graph& g, int k, const Budget* budget = nullptr) {
    if (k < 2 || k > g.n) throw invalid_input("dks_density: k out of range 2..n");
    return Rational(2 * edks(g, k, budget).m_star, static_cast<long long>(k) * (k - 1));
}

struct MqcResult {
    int k = 0;
    long long m = 0;
    VertexSet witness;
    Rational density;
};

// Largest cardinality admitting density >= gamma. Density maxima are
// non-increasing in k, so the feasible cardinalities form a prefix and a
// binary search applies.
inline MqcResult mqc(const Graph& g, const Rational& gamma, const Budget* budget = nullptr,
                     long long* edks_calls = nullptr, long long* edks_nodes = nullptr) {
    if (g.m < 1) throw infeasible_error("mqc needs at least one edge");
    if (gamma.num <= 0 || gamma > Rational(1, 1))
        throw invalid_input("mqc threshold must lie in (0, 1]");
    auto feasible = [&](int k, EdksResult& out) {
        if (budget) budget->check();
        out = edks(g, k, budget);
        if (edks_calls) ++*edks_calls;
        if (edks_nodes) *edks_nodes += out.nodes;
        return Rational(2 * out.m_star, static_cast<long long>(k) * (k - 1)) >= gamma;
    };
    int lo = 2, hi = g.n;
    EdksResult at_lo;
    bool have_lo = false;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        EdksResult r;
        if (feasible(mid, r)) {
            lo = mid;
            at_lo = r;
            have_lo = true;
        } else {
            hi = mid - 1;
        }
    }
    if (!have_lo || at_lo.witness.size() != lo) {
        EdksResult r;
        if (!feasible(lo, r)) throw internal_error("mqc: k = 2 infeasible with m >= 1");
        at_lo = r;
    }
    MqcResult out;
    out.k = lo;
    out.m = at_lo.m_star;
    out.witness = at_lo.witness;
    out.density = Rational(2 * at_lo.m_star, static_cast<long long>(lo) * (lo - 1));
    return out;
}

} // namespace moqc
