#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace moqc {

// Simple undirected graph. Vertices are dense 0-based ids; the label a vertex
// carried in the input file is kept in orig_label for output. Immutable once
// built: all algorithms treat it as shared read-only state.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;        // sorted neighbor lists
    std::vector<std::pair<int, int>> edges;   // canonical u < v, sorted
    std::vector<long long> orig_label;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        int w = (&a == &adj[u]) ? v : u;
        return std::binary_search(a.begin(), a.end(), w);
    }
};

// Accumulates raw input edges, then produces a simplified Graph: self-loops
// dropped, parallel and antiparallel duplicates merged, ids assigned densely
// in order of first appearance.
class GraphBuilder {
  public:
    // Pre-register the full label range 1..n (declared-size formats keep
    // isolated vertices this way).
    void declare_labels(long long n) {
        for (long long v = 1; v <= n; ++v) id_of(v);
    }

    void add_edge(long long lu, long long lv) {
        int u = id_of(lu), v = id_of(lv);
        if (u == v) return; // self-loop
        raw_.emplace_back(std::min(u, v), std::max(u, v));
    }

    bool has_label(long long l) const { return ids_.count(l) != 0; }

    Graph finish() {
        Graph g;
        g.n = static_cast<int>(labels_.size());
        if (g.n == 0) throw invalid_input("graph has an empty vertex set");
        g.orig_label = labels_;
        std::sort(raw_.begin(), raw_.end());
        raw_.erase(std::unique(raw_.begin(), raw_.end()), raw_.end());
        g.edges = std::move(raw_);
        g.m = static_cast<long long>(g.edges.size());
        g.adj.assign(g.n, {});
        for (auto [u, v] : g.edges) {
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& a : g.adj) std::sort(a.begin(), a.end());
        return g;
    }

  private:
    int id_of(long long label) {
        auto it = ids_.find(label);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(labels_.size());
        ids_.emplace(label, id);
        labels_.push_back(label);
        return id;
    }

    std::map<long long, int> ids_;
    std::vector<long long> labels_;
    std::vector<std::pair<int, int>> raw_;
};

// Sorted set of vertex ids.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids) : v_(ids) { normalize(); }
    explicit VertexSet(std::vector<int> ids) : v_(std::move(ids)) { normalize(); }

    static VertexSet full(const Graph& g) {
        std::vector<int> all(g.n);
        for (int i = 0; i < g.n; ++i) all[i] = i;
        return VertexSet(std::move(all));
    }

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

    void add(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }

    void remove(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it != v_.end() && *it == x) v_.erase(it);
    }

    const std::vector<int>& ids() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool operator==(const VertexSet& o) const { return v_ == o.v_; }
    bool operator<(const VertexSet& o) const { return v_ < o.v_; } // lexicographic

  private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (!v_.empty() && v_.front() < 0) throw invalid_input("negative vertex id");
    }
    std::vector<int> v_;
};

namespace detail {
inline void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.empty() && s.ids().back() >= g.n)
        throw invalid_input("vertex set not contained in the graph");
}
} // namespace detail

inline int degree_in(const Graph& g, const VertexSet& s, int v) {
    int d = 0;
    for (int u : g.adj[v]) d += s.contains(u) ? 1 : 0;
    return d;
}

inline long long induced_edge_count(const Graph& g, const VertexSet& s) {
    detail::check_subset(g, s);
    std::vector<std::uint8_t> in(g.n, 0);
    for (int v : s) in[v] = 1;
    long long twice = 0;
    for (int v : s)
        for (int u : g.adj[v]) twice += in[u];
    return twice / 2;
}

inline Rational density(const Graph& g, const VertexSet& s) {
    long long k = s.size();
    if (k < 2) throw invalid_input("density needs at least two vertices");
    return Rational(2 * induced_edge_count(g, s), k * (k - 1));
}

// Vertex of minimum degree within the induced subgraph. Ties: smallest sum of
// induced degrees over the vertex's in-set neighbors, then smallest id.
inline int min_degree_vertex(const Graph& g, const VertexSet& s) {
    detail::check_subset(g, s);
    if (s.empty()) throw invalid_input("min_degree_vertex on an empty set");
    std::vector<std::uint8_t> in(g.n, 0);
    for (int v : s) in[v] = 1;
    std::vector<long long> ds(g.n, 0);
    for (int v : s) {
        long long d = 0;
        for (int u : g.adj[v]) d += in[u];
        ds[v] = d;
    }
    int best = -1;
    long long best_d = -1, best_nsum = -1;
    for (int v : s) {
        long long nsum = 0;
        for (int u : g.adj[v])
            if (in[u]) nsum += ds[u];
        if (best < 0 || ds[v] < best_d || (ds[v] == best_d && nsum < best_nsum)) {
            best = v;
            best_d = ds[v];
            best_nsum = nsum;
        }
    }
    return best;
}

// Vertex outside S with the most neighbors inside S. Ties: larger degree in
// the whole graph, then smallest id. S may be empty (falls back to the
// highest-degree vertex overall).
inline int max_degree_extension_vertex(const Graph& g, const VertexSet& s) {
    detail::check_subset(g, s);
    if (s.size() >= g.n) throw invalid_input("max_degree_extension_vertex: no vertex left");
    std::vector<std::uint8_t> in(g.n, 0);
    for (int v : s) in[v] = 1;
    int best = -1;
    long long best_into = -1;
    int best_deg = -1;
    for (int v = 0; v < g.n; ++v) {
        if (in[v]) continue;
        long long into = 0;
        for (int u : g.adj[v]) into += in[u];
        if (into > best_into || (into == best_into && g.degree(v) > best_deg)) {
            best = v;
            best_into = into;
            best_deg = g.degree(v);
        }
    }
    return best;
}

} // namespace moqc
