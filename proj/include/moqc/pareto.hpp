#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace moqc {

// MOS objective space: maximize edges, minimize vertices.
struct MosPoint {
    long long m = 0;
    int k = 0;
    bool operator==(const MosPoint&) const = default;
};

inline bool mos_dominates(const MosPoint& a, const MosPoint& b) {
    return a.m >= b.m && a.k <= b.k && (a.m > b.m || a.k < b.k);
}

// Strict in both objectives: the negation of this over all points is weak
// nondominance.
inline bool mos_strongly_dominates(const MosPoint& a, const MosPoint& b) {
    return a.m > b.m && a.k < b.k;
}

inline bool is_clique_point(const MosPoint& p) {
    return p.m == static_cast<long long>(p.k) * (p.k - 1) / 2;
}

// MOQC objective space: maximize density, maximize vertices.
struct MoqcPoint {
    Rational density;
    int k = 0;
    bool operator==(const MoqcPoint& o) const { return k == o.k && density == o.density; }
};

inline bool moqc_dominates(const MoqcPoint& a, const MoqcPoint& b) {
    return a.density >= b.density && a.k >= b.k && (a.density > b.density || a.k > b.k);
}

enum class Provenance { ds, min_d, max_d, eps };
enum class Certificate { exact, p8, p9, p10, p11i, p11ii, unproven };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::ds: return "DS";
        case Provenance::min_d: return "minD";
        case Provenance::max_d: return "maxD";
        case Provenance::eps: return "eps";
    }
    return "?";
}

inline const char* to_string(Certificate c) {
    switch (c) {
        case Certificate::exact: return "exact";
        case Certificate::p8: return "P8";
        case Certificate::p9: return "P9";
        case Certificate::p10: return "P10";
        case Certificate::p11i: return "P11i";
        case Certificate::p11ii: return "P11ii";
        case Certificate::unproven: return "unproven";
    }
    return "?";
}

struct FrontierEntry {
    MosPoint p;
    VertexSet witness;
    Provenance prov = Provenance::eps;
    Certificate cert = Certificate::exact;
    bool efficient = false; // strengthened claim: efficient, not merely weakly
};

// At most one entry per cardinality, keyed by k. All inserted entries carry
// per-cardinality optimal edge counts, so a duplicate insertion must agree on
// the point; the earliest provenance is kept.
class LabeledFrontier {
  public:
    bool contains(int k) const { return by_k_.count(k) != 0; }

    const FrontierEntry& at(int k) const {
        auto it = by_k_.find(k);
        if (it == by_k_.end()) throw internal_error("no frontier entry at k = " + std::to_string(k));
        return it->second;
    }

    void insert(FrontierEntry e) {
        auto it = by_k_.find(e.p.k);
        if (it != by_k_.end()) {
            if (it->second.p.m != e.p.m)
                throw internal_error("conflicting edge counts at k = " + std::to_string(e.p.k));
            return; // keep the earliest
        }
        by_k_.emplace(e.p.k, std::move(e));
    }

    int size() const { return static_cast<int>(by_k_.size()); }

    std::vector<FrontierEntry> entries() const {
        std::vector<FrontierEntry> out;
        out.reserve(by_k_.size());
        for (const auto& [k, e] : by_k_) out.push_back(e);
        return out;
    }

    int max_clique_entry() const {
        int best = 0;
        for (const auto& [k, e] : by_k_)
            if (is_clique_point(e.p)) best = std::max(best, k);
        return best;
    }

  private:
    std::map<int, FrontierEntry> by_k_;
};

// Adjacent supported points from a completed dichotomic search; their weighted
// sum is certifiably optimal at value cbar, which is what P11 leans on.
struct SupportedPair {
    MosPoint lo, hi; // lo.k < hi.k
    long long w1() const { return hi.k - lo.k; }          // > 0
    long long w2() const { return hi.m - lo.m; }          // >= 0
    long long cbar() const { return w1() * lo.m - w2() * lo.k; }
};

inline const SupportedPair& bracketing_pair(const std::vector<SupportedPair>& pairs,
                                            int k) {
    for (const auto& pr : pairs)
        if (pr.lo.k <= k && k <= pr.hi.k) return pr;
    throw internal_error("no supported pair brackets k = " + std::to_string(k));
}

enum class LocalSearch { min_d, max_d };

struct WeffContext {
    LocalSearch mode = LocalSearch::min_d;
    bool parent_certified = false;
    // degree of the removed vertex in the parent set (minD) or of the added
    // vertex in the extended set (maxD)
    int changed_vertex_degree = 0;
};

struct WeffResult {
    Certificate cert = Certificate::unproven;
    bool efficient = false;
};

/*
 * Efficiency certificate battery for a locally generated candidate, checked
 * in a fixed order:
 *   P8  (minD)  parent certified and the removed vertex was isolated in it;
 *   P9  (maxD)  added vertex realizes the global maximum degree;
 *   P10         candidate is a clique;
 *   P11i        candidate lies on the supporting line of its bracketing pair;
 *   P11ii       one extra edge would beat the certified weighted optimum.
 * Every certificate implies the candidate's edge count is optimal for its
 * cardinality. The efficient flag marks the stronger claim (efficiency, not
 * just weak efficiency); for P11ii it needs the strengthening inequality.
 */
inline WeffResult weff_certificate(const Graph& g, const MosPoint& p,
                                   const WeffContext& ctx,
                                   const std::vector<SupportedPair>& pairs) {
    const SupportedPair& pr = bracketing_pair(pairs, p.k);
    const long long w1 = pr.w1(), w2 = pr.w2(), cbar = pr.cbar();
    WeffResult out;
    if (ctx.mode == LocalSearch::min_d && ctx.parent_certified &&
        ctx.changed_vertex_degree == 0) {
        out.cert = Certificate::p8;
        out.efficient = false;
        return out;
    }
    if (ctx.mode == LocalSearch::max_d) {
        int delta = g.max_degree();
        if (delta > 0 && ctx.changed_vertex_degree == delta) {
            out.cert = Certificate::p9;
            out.efficient = true;
            return out;
        }
    }
    if (is_clique_point(p)) {
        out.cert = Certificate::p10;
        out.efficient = true;
        return out;
    }
    if (w1 * p.m - w2 * p.k == cbar) {
        out.cert = Certificate::p11i;
        // on a flat segment (w2 == 0) the same edge count also exists one
        // cardinality down, so only weak efficiency can be claimed
        out.efficient = w2 > 0;
        return out;
    }
    if (w1 * (p.m + 1) - w2 * p.k > cbar) {
        out.cert = Certificate::p11ii;
        out.efficient = w1 * p.m - w2 * (p.k - 1) > cbar;
        return out;
    }
    return out;
}

// Drops every entry below the largest clique in the frontier. The survivors
// are the per-cardinality optima for k = omega..n.
inline LabeledFrontier remove_non_maximum_cliques(const Graph& g,
                                                  const LabeledFrontier& f) {
    int omega = f.max_clique_entry();
    if (omega == 0) throw internal_error("frontier holds no clique entry");
    LabeledFrontier out;
    for (const auto& e : f.entries())
        if (e.p.k >= omega) out.insert(e);
    if (out.size() != g.n - omega + 1)
        throw internal_error("filtered frontier does not span omega..n");
    return out;
}

struct MoqcEntry {
    MoqcPoint p;
    long long m = 0;
    VertexSet witness;
    Provenance prov = Provenance::eps;
    Certificate cert = Certificate::exact;
};

// Projects the per-cardinality MOS frontier to MOQC nondominated points.
// Densities are non-increasing in k, so equal-density points form runs; each
// run keeps only its largest cardinality.
inline std::vector<MoqcEntry> map_mos_to_moqc(const LabeledFrontier& f) {
    auto entries = f.entries();
    std::vector<MoqcEntry> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.p.k < 2) throw internal_error("cannot map a single-vertex point to a density");
        Rational d(2 * e.p.m, static_cast<long long>(e.p.k) * (e.p.k - 1));
        if (!out.empty()) {
            if (d > out.back().p.density)
                throw internal_error("frontier densities increase with k");
            if (d == out.back().p.density) out.pop_back(); // keep the larger k
        }
        out.push_back({{d, e.p.k}, e.p.m, e.witness, e.prov, e.cert});
    }
    return out;
}

} // namespace moqc
