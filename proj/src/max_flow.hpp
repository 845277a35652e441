#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace antiramsey::detail {

// Dinic's algorithm on integer capacities.
class MaxFlow {
public:
    using Capacity = std::int64_t;
    static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

    explicit MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

    void add_edge(int from, int to, Capacity capacity) {
        graph_[idx(from)].push_back({to, static_cast<int>(graph_[idx(to)].size()), capacity});
        graph_[idx(to)].push_back({from, static_cast<int>(graph_[idx(from)].size()) - 1, 0});
    }

    Capacity run(int source, int sink) {
        Capacity flow = 0;
        while (bfs(source, sink)) {
            iter_.assign(graph_.size(), 0);
            while (Capacity pushed = dfs(source, sink, kInfinite)) flow += pushed;
        }
        return flow;
    }

    /// Nodes reachable from `source` in the residual graph after run().
    std::vector<char> source_side(int source) const {
        std::vector<char> seen(graph_.size(), 0);
        std::vector<int> stack{source};
        seen[idx(source)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : graph_[idx(v)]) {
                if (a.capacity > 0 && !seen[idx(a.to)]) {
                    seen[idx(a.to)] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int rev;
        Capacity capacity;
    };

    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    bool bfs(int source, int sink) {
        level_.assign(graph_.size(), -1);
        std::queue<int> queue;
        level_[idx(source)] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (const Arc& a : graph_[idx(v)]) {
                if (a.capacity > 0 && level_[idx(a.to)] < 0) {
                    level_[idx(a.to)] = level_[idx(v)] + 1;
                    queue.push(a.to);
                }
            }
        }
        return level_[idx(sink)] >= 0;
    }

    Capacity dfs(int v, int sink, Capacity limit) {
        if (v == sink) return limit;
        for (int& i = iter_[idx(v)]; i < static_cast<int>(graph_[idx(v)].size()); ++i) {
            Arc& a = graph_[idx(v)][static_cast<std::size_t>(i)];
            if (a.capacity <= 0 || level_[idx(a.to)] != level_[idx(v)] + 1) continue;
            Capacity pushed = dfs(a.to, sink, std::min(limit, a.capacity));
            if (pushed > 0) {
                a.capacity -= pushed;
                graph_[idx(a.to)][static_cast<std::size_t>(a.rev)].capacity += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> graph_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace antiramsey::detail
