#pragma once

#include <string>
#include <vector>

#include "brute.hpp"
#include "strategies.hpp"

namespace moqc {

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when the check passes
};

namespace detail {

inline bool frontier_matches_table(const Graph& g, const LabeledFrontier& f,
                                   const BruteTable& t, std::string& why) {
    std::vector<BrutePoint> want = t.mos_frontier();
    std::vector<FrontierEntry> got = f.entries();
    if (got.size() != want.size()) {
        why = "expected " + std::to_string(want.size()) + " points, got " +
              std::to_string(got.size());
        return false;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (got[i].p.k != want[i].k || got[i].p.m != want[i].m) {
            why = "point mismatch at position " + std::to_string(i);
            return false;
        }
        if (got[i].witness.size() != got[i].p.k ||
            induced_edge_count(g, got[i].witness) != got[i].p.m) {
            why = "witness does not achieve its point at k = " + std::to_string(got[i].p.k);
            return false;
        }
    }
    return true;
}

inline bool moqc_matches(const std::vector<MoqcEntry>& got,
                         const std::vector<BruteMoqcPoint>& want, std::string& why) {
    if (got.size() != want.size()) {
        why = "expected " + std::to_string(want.size()) + " points, got " +
              std::to_string(got.size());
        return false;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (got[i].p.k != want[i].k || !(got[i].p.density == want[i].density)) {
            why = "point mismatch at position " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace detail

// Cross-checks every solver against an exhaustive enumeration of the
// instance. Only sensible for small graphs; `max_n` guards the 2^n blowup.
inline std::vector<VerificationCheck> run_verification(const Graph& g, int max_n = 20) {
    std::vector<VerificationCheck> out;
    BruteTable t = brute_table(g, max_n);

    auto add = [&](const std::string& name, bool pass, const std::string& why = "") {
        out.push_back(VerificationCheck{name, pass, pass ? "" : why});
    };

    MosResult base = solve_baseline(g);
    MosResult two = solve_two_phase(g);
    MosResult three = solve_three_phase(g);

    std::string why;
    add("baseline frontier matches enumeration",
        detail::frontier_matches_table(g, base.frontier, t, why), why);
    add("two-phase frontier matches enumeration",
        detail::frontier_matches_table(g, two.frontier, t, why), why);
    add("three-phase frontier matches enumeration",
        detail::frontier_matches_table(g, three.frontier, t, why), why);

    {
        bool ok = three.report.omega_hat == t.omega &&
                  three.report.frontier_size == g.n - t.omega + 1;
        add("frontier spans clique number to n", ok,
            "omega_hat " + std::to_string(three.report.omega_hat) + " vs " +
                std::to_string(t.omega));
    }

    {
        // every certificate issued by the local searches must name a point
        // that really is the per-cardinality optimum, and the strict
        // efficiency flag must never overclaim
        bool ok = true;
        std::string d;
        for (const FrontierEntry& e : three.prefilter.entries()) {
            if (e.prov != Provenance::min_d && e.prov != Provenance::max_d) continue;
            if (e.p.m != t.per_k_max[e.p.k - 1] || !t.weakly_efficient(e.p.m, e.p.k)) {
                ok = false;
                d = "false certificate at k = " + std::to_string(e.p.k);
                break;
            }
            if (e.efficient && e.p.k > 1 && t.per_k_max[e.p.k - 2] >= e.p.m) {
                ok = false;
                d = "efficiency overclaim at k = " + std::to_string(e.p.k);
                break;
            }
        }
        add("local-search certificates are sound", ok, d);
    }

    {
        std::vector<BruteMoqcPoint> want = t.moqc_nondominated();
        MoqcResult a1 = solve_moqc_alg1(g);
        MoqcResult a2 = solve_moqc_alg2(g);
        add("mapped frontier matches nondominated densities",
            detail::moqc_matches(three.moqc, want, why), why);
        add("alg1 matches nondominated densities", detail::moqc_matches(a1.points, want, why),
            why);
        add("alg2 matches nondominated densities", detail::moqc_matches(a2.points, want, why),
            why);
    }

    {
        bool ok = true;
        for (int k = 3; k <= g.n && ok; ++k) {
            Rational a(2 * t.per_k_max[k - 2], (long long)(k - 1) * (k - 2));
            Rational b(2 * t.per_k_max[k - 1], (long long)k * (k - 1));
            if (b > a) ok = false;
        }
        add("per-cardinality densities are non-increasing", ok);
    }

    {
        const RunReport& r = three.report;
        bool ok = r.count_ds + r.count_mind + r.count_maxd + r.count_eps == r.points_prefilter &&
                  r.certified() + r.uncertified == r.gen_mind + r.gen_maxd &&
                  r.unproven_weff <= r.uncertified;
        add("report accounting is consistent", ok);
    }

    {
        bool ok = true;
        std::string d;
        const long long probes[][2] = {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {g.n, 1}, {2, 2 * g.n}};
        for (auto& p : probes) {
            WsSolution s = ws_mos_optimum(g, p[0], p[1]);
            BruteWsResult b = brute_ws(g, p[0], p[1], max_n);
            long long check = p[0] * induced_edge_count(g, s.s) - p[1] * s.s.size();
            if (s.value != b.value || check != s.value) {
                ok = false;
                d = "weighted-sum mismatch at w = (" + std::to_string(p[0]) + ", " +
                    std::to_string(p[1]) + ")";
                break;
            }
        }
        add("weighted-sum oracle matches enumeration", ok, d);
    }

    return out;
}

}  // namespace moqc
