#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "edks.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "pareto.hpp"
#include "rational.hpp"
#include "ws_oracle.hpp"

namespace moqc {

// Aggregated statistics for one solver run. Percentages are derived on
// demand so the raw counters stay authoritative.
struct RunReport {
    std::string strategy;
    int n = 0;
    long long m = 0;
    bool timed_out = false;

    int omega_hat = 0;       // smallest cardinality on the final frontier
    int points_prefilter = 0;
    int frontier_size = 0;   // after removing non-maximum clique points
    int moqc_size = 0;

    // provenance of collected points (before the clique filter)
    long long count_ds = 0;
    long long count_mind = 0;
    long long count_maxd = 0;
    long long count_eps = 0;

    // local-search candidates and their certificates
    long long gen_mind = 0;
    long long gen_maxd = 0;
    long long cert_p8 = 0;
    long long cert_p9 = 0;
    long long cert_p10 = 0;
    long long cert_p11i = 0;
    long long cert_p11ii = 0;
    long long uncertified = 0;     // candidates that failed every test
    long long unproven_weff = 0;   // of those, the ones that really were weakly efficient

    long long edks_calls = 0;
    long long ws_calls = 0;
    long long bnb_nodes = 0;
    long long bnb_pruned = 0;

    double t_total = 0.0;
    double t_edks = 0.0;
    double t_ws = 0.0;

    long long certified() const {
        return cert_p8 + cert_p9 + cert_p10 + cert_p11i + cert_p11ii;
    }
    double pct_points(long long c) const {
        return points_prefilter > 0 ? 100.0 * (double)c / points_prefilter : 0.0;
    }
    double pct_ds() const { return pct_points(count_ds); }
    double pct_mind() const { return pct_points(count_mind); }
    double pct_maxd() const { return pct_points(count_maxd); }
    double pct_eps() const { return pct_points(count_eps); }
    double pct_cert(long long c) const {
        long long t = certified();
        return t > 0 ? 100.0 * (double)c / t : 0.0;
    }
    double pct_p8() const { return pct_cert(cert_p8); }
    double pct_p9() const { return pct_cert(cert_p9); }
    double pct_p10() const { return pct_cert(cert_p10); }
    double pct_p11i() const { return pct_cert(cert_p11i); }
    double pct_p11ii() const { return pct_cert(cert_p11ii); }
    double pct_unproven() const {
        long long t = certified();
        return t > 0 ? 100.0 * (double)unproven_weff / t : 0.0;
    }
    double pct_t_edks() const { return t_total > 0 ? 100.0 * t_edks / t_total : 0.0; }
    double pct_t_ws() const { return t_total > 0 ? 100.0 * t_ws / t_total : 0.0; }
};

// Result of one of the subgraph-frontier strategies. On timeout `prefilter`
// holds whatever was collected so far and `frontier`/`moqc` stay empty.
struct MosResult {
    LabeledFrontier prefilter;
    LabeledFrontier frontier;
    std::vector<MoqcEntry> moqc;
    RunReport report;
};

struct MoqcResult {
    std::vector<MoqcEntry> points;  // ascending cardinality
    RunReport report;
};

namespace detail {

using steady = std::chrono::steady_clock;

inline double secs_since(steady::time_point t0) {
    return std::chrono::duration<double>(steady::now() - t0).count();
}

// Funnels every oracle call through one place so timeout checks and the
// report counters cannot drift apart.
struct OracleDriver {
    const Graph& g;
    const Budget* budget;
    RunReport& rep;

    EdksResult edks_call(int k, const VertexSet* warm = nullptr, long long cap = -1) {
        if (budget) budget->check();
        auto t0 = steady::now();
        EdksResult r = edks(g, k, budget, warm, cap);
        rep.t_edks += secs_since(t0);
        ++rep.edks_calls;
        rep.bnb_nodes += r.nodes;
        rep.bnb_pruned += r.pruned;
        return r;
    }

    WsSolution ws_call(long long w1, long long w2) {
        if (budget) budget->check();
        auto t0 = steady::now();
        WsSolution r = ws_mos_optimum(g, w1, w2);
        rep.t_ws += secs_since(t0);
        ++rep.ws_calls;
        return r;
    }
};

struct LocalSearchLog {
    std::vector<MosPoint> uncertified;
};

inline void require_edges(const Graph& g) {
    if (g.m < 1) throw infeasible_error("graph has no edges; the frontier is undefined");
}

inline void count_certificate(RunReport& rep, Certificate c) {
    switch (c) {
        case Certificate::p8: ++rep.cert_p8; break;
        case Certificate::p9: ++rep.cert_p9; break;
        case Certificate::p10: ++rep.cert_p10; break;
        case Certificate::p11i: ++rep.cert_p11i; break;
        case Certificate::p11ii: ++rep.cert_p11ii; break;
        default: break;
    }
}

// Filter, map, and close the books on a finished run.
inline void finalize_mos(const Graph& g, const LabeledFrontier& collected,
                         const LocalSearchLog& log, MosResult& out) {
    RunReport& rep = out.report;
    out.prefilter = collected;
    rep.points_prefilter = (int)collected.size();
    for (const FrontierEntry& e : collected.entries()) {
        switch (e.prov) {
            case Provenance::ds: ++rep.count_ds; break;
            case Provenance::min_d: ++rep.count_mind; break;
            case Provenance::max_d: ++rep.count_maxd; break;
            case Provenance::eps: ++rep.count_eps; break;
        }
    }
    out.frontier = remove_non_maximum_cliques(g, collected);
    rep.omega_hat = out.frontier.entries().front().p.k;
    rep.frontier_size = (int)out.frontier.size();
    out.moqc = map_mos_to_moqc(out.frontier);
    rep.moqc_size = (int)out.moqc.size();

    // With the complete per-cardinality table in hand we can settle, after
    // the fact, which rejected candidates were weakly efficient all along:
    // exactly those matching the best edge count one cardinality down.
    for (const MosPoint& c : log.uncertified) {
        int km = c.k - 1;
        long long best;
        if (km >= rep.omega_hat)
            best = out.frontier.at(km).p.m;
        else
            best = (long long)km * (km - 1) / 2;
        if (best <= c.m) ++rep.unproven_weff;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Phase 1: dichotomic search over weighted sums.
// ---------------------------------------------------------------------------

struct DichotomyResult {
    std::vector<FrontierEntry> supported;   // ascending cardinality
    std::vector<SupportedPair> pairs;       // consecutive supported points, ascending
};

// Finds every extreme supported point by recursive bisection of weight
// space. Each closed pair brackets a segment of the upper envelope and is
// kept for the certificate tests later on.
inline DichotomyResult dichotomic_search(const Graph& g, const Budget* budget = nullptr,
                                         RunReport* rep = nullptr) {
    detail::require_edges(g);
    RunReport scratch;
    detail::OracleDriver drv{g, budget, rep ? *rep : scratch};

    std::map<int, FrontierEntry> sup;
    MosPoint zr{0, 1};
    MosPoint zs{g.m, g.n};
    VertexSet one;
    one.add(0);
    sup.emplace(1, FrontierEntry{zr, one, Provenance::ds, Certificate::exact, false});
    sup.emplace(g.n, FrontierEntry{zs, VertexSet::full(g), Provenance::ds, Certificate::exact, false});

    std::vector<SupportedPair> pairs;
    std::vector<std::pair<MosPoint, MosPoint>> todo;
    todo.push_back({zr, zs});
    while (!todo.empty()) {
        auto [r, s] = todo.back();
        todo.pop_back();
        long long w1 = s.k - r.k;
        long long w2 = s.m - r.m;
        // equal edge counts: no point can beat the shared weighted value,
        // so the pair closes without an oracle call
        if (w2 == 0) {
            pairs.push_back(SupportedPair{r, s});
            continue;
        }
        long long cbar = w1 * r.m - w2 * (long long)r.k;
        WsSolution sol = drv.ws_call(w1, w2);
        if (sol.value > cbar) {
            MosPoint t{sol.edges, (int)sol.s.size()};
            auto ins = sup.emplace(t.k, FrontierEntry{t, sol.s, Provenance::ds,
                                                      Certificate::exact, false});
            if (!ins.second)
                throw internal_error("dichotomic search revisited cardinality " +
                                     std::to_string(t.k));
            todo.push_back({r, t});
            todo.push_back({t, s});
        } else {
            pairs.push_back(SupportedPair{r, s});
        }
    }

    std::sort(pairs.begin(), pairs.end(),
              [](const SupportedPair& a, const SupportedPair& b) { return a.lo.k < b.lo.k; });
    DichotomyResult out;
    for (auto& [k, e] : sup) out.supported.push_back(std::move(e));
    out.pairs = std::move(pairs);
    return out;
}

// ---------------------------------------------------------------------------
// Phase 2 local searches.
// ---------------------------------------------------------------------------

namespace detail {

// Walks down from each supported point, peeling a minimum-degree vertex per
// step. A candidate only enters the frontier when a certificate proves it
// weakly efficient; the walk continues regardless, but a clique ends the
// whole phase since everything below is then a smaller clique.
inline void min_d(const Graph& g, LabeledFrontier& f, const std::vector<SupportedPair>& pairs,
                  RunReport& rep, LocalSearchLog& log) {
    std::vector<FrontierEntry> sup = f.entries();
    for (int j = (int)sup.size() - 1; j >= 1; --j) {
        const FrontierEntry& hi = sup[j];
        const FrontierEntry& lo = sup[j - 1];
        if (is_clique_point(hi.p)) return;
        VertexSet s = hi.witness;
        bool parent_cert = true;
        for (int k = hi.p.k - 1; k > lo.p.k; --k) {
            int v = min_degree_vertex(g, s);
            int vdeg = degree_in(g, s, v);
            s.remove(v);
            MosPoint cand{induced_edge_count(g, s), k};
            ++rep.gen_mind;
            WeffContext ctx{LocalSearch::min_d, parent_cert, vdeg};
            WeffResult wr = weff_certificate(g, cand, ctx, pairs);
            if (wr.cert != Certificate::unproven) {
                f.insert(FrontierEntry{cand, s, Provenance::min_d, wr.cert, wr.efficient});
                count_certificate(rep, wr.cert);
                parent_cert = true;
            } else {
                log.uncertified.push_back(cand);
                ++rep.uncertified;
                parent_cert = false;
            }
            if (is_clique_point(cand)) return;
        }
    }
}

// Fills the cardinalities above the largest known clique by growing the
// previous witness with a maximum-degree neighbour. Certified candidates
// are free; the rest fall back to one exact solve each.
inline void max_d(const Graph& g, LabeledFrontier& f, const std::vector<SupportedPair>& pairs,
                  RunReport& rep, LocalSearchLog& log, OracleDriver& drv) {
    int start = f.max_clique_entry();
    for (int k = start + 1; k <= g.n; ++k) {
        if (f.contains(k)) continue;
        const FrontierEntry& parent = f.at(k - 1);
        int v = max_degree_extension_vertex(g, parent.witness);
        VertexSet s = parent.witness;
        s.add(v);
        int vdeg = degree_in(g, s, v);
        MosPoint cand{parent.p.m + vdeg, k};
        ++rep.gen_maxd;
        WeffContext ctx{LocalSearch::max_d, true, vdeg};
        WeffResult wr = weff_certificate(g, cand, ctx, pairs);
        if (wr.cert != Certificate::unproven) {
            f.insert(FrontierEntry{cand, s, Provenance::max_d, wr.cert, wr.efficient});
            count_certificate(rep, wr.cert);
        } else {
            log.uncertified.push_back(cand);
            ++rep.uncertified;
            // the grown set seeds the incumbent; the supporting line of the
            // bracketing pair bounds every feasible point at this cardinality
            const SupportedPair& pr = bracketing_pair(pairs, k);
            long long cap = (pr.cbar() + pr.w2() * k) / pr.w1();
            EdksResult r = drv.edks_call(k, &s, cap);
            f.insert(FrontierEntry{MosPoint{r.m_star, k}, r.witness, Provenance::eps,
                                   Certificate::exact, false});
        }
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Strategies.
// ---------------------------------------------------------------------------

// Plain sweep: one exact solve per cardinality, from the whole graph down
// to the first clique.
inline MosResult solve_baseline(const Graph& g, const Budget* budget = nullptr) {
    MosResult out;
    RunReport& rep = out.report;
    rep.strategy = "baseline";
    rep.n = g.n;
    rep.m = g.m;
    auto t0 = detail::steady::now();
    detail::require_edges(g);
    detail::OracleDriver drv{g, budget, rep};
    detail::LocalSearchLog log;
    LabeledFrontier f;
    try {
        f.insert(FrontierEntry{MosPoint{g.m, g.n}, VertexSet::full(g), Provenance::eps,
                               Certificate::exact, false});
        int k = g.n;
        long long cm = g.m;
        VertexSet prev = VertexSet::full(g);
        while (!is_clique_point(MosPoint{cm, k}) && k > 1) {
            --k;
            // dropping the lightest vertex of the optimum one up seeds the
            // incumbent, and that optimum itself bounds this one from above
            VertexSet warm = prev;
            warm.remove(min_degree_vertex(g, prev));
            EdksResult r = drv.edks_call(k, &warm, cm);
            f.insert(FrontierEntry{MosPoint{r.m_star, k}, r.witness, Provenance::eps,
                                   Certificate::exact, false});
            cm = r.m_star;
            prev = r.witness;
        }
        detail::finalize_mos(g, f, log, out);
    } catch (const timeout_error&) {
        rep.timed_out = true;
        out.prefilter = f;
    }
    rep.t_total = detail::secs_since(t0);
    return out;
}

// Dichotomic search for the supported points, then exact solves for the
// gaps, again stopping at the first clique from above.
inline MosResult solve_two_phase(const Graph& g, const Budget* budget = nullptr) {
    MosResult out;
    RunReport& rep = out.report;
    rep.strategy = "two-phase";
    rep.n = g.n;
    rep.m = g.m;
    auto t0 = detail::steady::now();
    detail::require_edges(g);
    detail::OracleDriver drv{g, budget, rep};
    detail::LocalSearchLog log;
    LabeledFrontier f;
    try {
        DichotomyResult dr = dichotomic_search(g, budget, &rep);
        for (const FrontierEntry& e : dr.supported) f.insert(e);
        int cursor = g.n;
        while (!is_clique_point(f.at(cursor).p)) {
            int k = cursor - 1;
            if (!f.contains(k)) {
                const FrontierEntry& up = f.at(cursor);
                VertexSet warm = up.witness;
                warm.remove(min_degree_vertex(g, up.witness));
                EdksResult r = drv.edks_call(k, &warm, up.p.m);
                f.insert(FrontierEntry{MosPoint{r.m_star, k}, r.witness, Provenance::eps,
                                       Certificate::exact, false});
            }
            cursor = k;
        }
        detail::finalize_mos(g, f, log, out);
    } catch (const timeout_error&) {
        rep.timed_out = true;
        out.prefilter = f;
    }
    rep.t_total = detail::secs_since(t0);
    return out;
}

// Dichotomic search plus both certificate-driven local searches, with
// exact solves only where no certificate could be produced.
inline MosResult solve_three_phase(const Graph& g, const Budget* budget = nullptr) {
    MosResult out;
    RunReport& rep = out.report;
    rep.strategy = "three-phase";
    rep.n = g.n;
    rep.m = g.m;
    auto t0 = detail::steady::now();
    detail::require_edges(g);
    detail::OracleDriver drv{g, budget, rep};
    detail::LocalSearchLog log;
    LabeledFrontier f;
    try {
        DichotomyResult dr = dichotomic_search(g, budget, &rep);
        for (const FrontierEntry& e : dr.supported) f.insert(e);
        detail::min_d(g, f, dr.pairs, rep, log);
        detail::max_d(g, f, dr.pairs, rep, log, drv);
        detail::finalize_mos(g, f, log, out);
    } catch (const timeout_error&) {
        rep.timed_out = true;
        out.prefilter = f;
    }
    rep.t_total = detail::secs_since(t0);
    return out;
}

// ---------------------------------------------------------------------------
// Direct quasi-clique algorithms.
// ---------------------------------------------------------------------------

namespace detail {

// Smallest subgraph density value strictly above gamma that any pair
// (edges, cardinality) with cardinality in [2, n] could attain. Raising the
// threshold to this value is the tightest step that provably skips nothing.
inline Rational next_density_above(int n, const Rational& gamma) {
    bool have = false;
    Rational best;
    for (int k = 2; k <= n; ++k) {
        long long cap = (long long)k * (k - 1);  // twice the pair count
        __int128 t = (__int128)gamma.num * cap / ((__int128)2 * gamma.den);
        long long j = (long long)t + 1;
        if (2 * j > cap) continue;  // nothing above gamma at this cardinality
        Rational cand{2 * j, cap};
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    if (!have) throw internal_error("no density above threshold");
    return best;
}

}  // namespace detail

// Repeatedly asks for the largest subgraph whose density clears a rising
// threshold. Each answer is a new nondominated point and dictates the next
// threshold.
inline MoqcResult solve_moqc_alg1(const Graph& g, const Budget* budget = nullptr) {
    MoqcResult out;
    RunReport& rep = out.report;
    rep.strategy = "alg1";
    rep.n = g.n;
    rep.m = g.m;
    auto t0 = detail::steady::now();
    detail::require_edges(g);
    try {
        Rational gamma = density(g, VertexSet::full(g));
        out.points.push_back(MoqcEntry{MoqcPoint{gamma, g.n}, g.m, VertexSet::full(g),
                                       Provenance::eps, Certificate::exact});
        int k = g.n;
        while (gamma < Rational(1, 1) && k > 2) {
            Rational tau = detail::next_density_above(g.n, gamma);
            if (budget) budget->check();
            auto tq = detail::steady::now();
            MqcResult q = mqc(g, tau, budget, &rep.edks_calls, &rep.bnb_nodes);
            rep.t_edks += detail::secs_since(tq);
            k = q.k;
            gamma = q.density;
            out.points.push_back(MoqcEntry{MoqcPoint{gamma, k}, q.m, q.witness,
                                           Provenance::eps, Certificate::exact});
        }
        std::reverse(out.points.begin(), out.points.end());
    } catch (const timeout_error&) {
        rep.timed_out = true;
        std::reverse(out.points.begin(), out.points.end());
    }
    rep.count_eps = (long long)out.points.size();
    rep.points_prefilter = (int)out.points.size();
    rep.frontier_size = (int)out.points.size();
    rep.moqc_size = (int)out.points.size();
    if (!out.points.empty()) rep.omega_hat = out.points.front().p.k;
    rep.t_total = detail::secs_since(t0);
    return out;
}

// One exact solve per cardinality from the top, keeping strict density
// improvements. Stops once a clique is found.
inline MoqcResult solve_moqc_alg2(const Graph& g, const Budget* budget = nullptr) {
    MoqcResult out;
    RunReport& rep = out.report;
    rep.strategy = "alg2";
    rep.n = g.n;
    rep.m = g.m;
    auto t0 = detail::steady::now();
    detail::require_edges(g);
    detail::OracleDriver drv{g, budget, rep};
    try {
        Rational gamma = density(g, VertexSet::full(g));
        out.points.push_back(MoqcEntry{MoqcPoint{gamma, g.n}, g.m, VertexSet::full(g),
                                       Provenance::eps, Certificate::exact});
        VertexSet prev = VertexSet::full(g);
        long long pm = g.m;
        for (int k = g.n - 1; k >= 2; --k) {
            if (!(gamma < Rational(1, 1))) break;
            VertexSet warm = prev;
            warm.remove(min_degree_vertex(g, prev));
            EdksResult r = drv.edks_call(k, &warm, pm);
            prev = r.witness;
            pm = r.m_star;
            Rational d{2 * r.m_star, (long long)k * (k - 1)};
            if (gamma < d) {
                out.points.push_back(MoqcEntry{MoqcPoint{d, k}, r.m_star, r.witness,
                                               Provenance::eps, Certificate::exact});
                gamma = d;
            }
        }
        std::reverse(out.points.begin(), out.points.end());
    } catch (const timeout_error&) {
        rep.timed_out = true;
        std::reverse(out.points.begin(), out.points.end());
    }
    rep.count_eps = (long long)out.points.size();
    rep.points_prefilter = (int)out.points.size();
    rep.frontier_size = (int)out.points.size();
    rep.moqc_size = (int)out.points.size();
    if (!out.points.empty()) rep.omega_hat = out.points.front().p.k;
    rep.t_total = detail::secs_since(t0);
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

enum class Strategy { baseline, two_phase, three_phase, alg1, alg2 };

inline Strategy parse_strategy(const std::string& s) {
    if (s == "baseline") return Strategy::baseline;
    if (s == "two-phase" || s == "twophase" || s == "two_phase") return Strategy::two_phase;
    if (s == "three-phase" || s == "threephase" || s == "three_phase") return Strategy::three_phase;
    if (s == "alg1") return Strategy::alg1;
    if (s == "alg2") return Strategy::alg2;
    throw invalid_input("unknown strategy: " + s);
}

inline bool strategy_is_mos(Strategy s) {
    return s == Strategy::baseline || s == Strategy::two_phase || s == Strategy::three_phase;
}

inline MosResult solve_mos(const Graph& g, Strategy s, const Budget* budget = nullptr) {
    switch (s) {
        case Strategy::baseline: return solve_baseline(g, budget);
        case Strategy::two_phase: return solve_two_phase(g, budget);
        case Strategy::three_phase: return solve_three_phase(g, budget);
        default: throw invalid_input("strategy does not produce a subgraph frontier");
    }
}

inline MoqcResult solve_moqc(const Graph& g, Strategy s, const Budget* budget = nullptr) {
    switch (s) {
        case Strategy::alg1: return solve_moqc_alg1(g, budget);
        case Strategy::alg2: return solve_moqc_alg2(g, budget);
        default: throw invalid_input("strategy is not a direct quasi-clique method");
    }
}

}  // namespace moqc
