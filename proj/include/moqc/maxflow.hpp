#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace moqc {

/*
 * Dinic max flow on integer capacities.
 *
 * The min cut reported is the canonical minimal one: the set of nodes still
 * reachable from the source in the residual graph. That set is contained in
 * the source side of every minimum cut, which is what the closure oracle
 * relies on for its minimum-cardinality tie-break.
 */
class FlowNetwork {
  public:
    explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

    int nodes() const { return static_cast<int>(head_.size()); }

    // Adds a directed arc with the given capacity; returns the arc index.
    int add_arc(int from, int to, std::int64_t cap) {
        if (cap < 0) throw invalid_input("negative arc capacity");
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
        return static_cast<int>(arcs_.size()) - 2;
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            std::int64_t f;
            while ((f = dfs(s, t, INT64_MAX)) > 0) total += f;
        }
        src_ = s;
        return total;
    }

    // Valid after max_flow: true iff v is on the source side of the minimal cut.
    bool on_source_side(int v) const { return level_[v] >= 0; }

    std::int64_t residual(int arc) const { return arcs_[arc].cap; }

  private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e >= 0; e = arcs_[e].next) {
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
                    level_[arcs_[e].to] = level_[v] + 1;
                    q.push(arcs_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t limit) {
        if (v == t) return limit;
        for (int& e = it_[v]; e >= 0; e = arcs_[e].next) {
            Arc& a = arcs_[e];
            if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                std::int64_t f = dfs(a.to, t, std::min(limit, a.cap));
                if (f > 0) {
                    a.cap -= f;
                    arcs_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        level_[v] = -2; // dead end for this phase
        return 0;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> it_;
    int src_ = -1;
};

} // namespace moqc
