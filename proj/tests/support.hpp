#pragma once

// Test-only generators and brute-force oracles. None of these call into the
// library's algorithms; they exist to check them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

inline Graph random_nonempty_graph(std::mt19937_64& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    std::uniform_real_distribution<double> prob(0.05, 0.95);
    for (;;) {
        Graph g = random_graph(rng, size(rng), prob(rng));
        if (g.edge_count() > 0) return g;
    }
}

inline Graph random_forest(std::mt19937_64& rng, int n) {
    std::vector<Edge> edges;
    std::bernoulli_distribution attach(0.8);
    for (Vertex v = 1; v < n; ++v) {
        if (!attach(rng)) continue;
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v});
    }
    return Graph(n, std::move(edges));
}

inline Graph graph_from(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

inline int induced_edges(const Graph& g, std::uint32_t mask) {
    int count = 0;
    for (const Edge& e : g.edges())
        if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++count;
    return count;
}

/// max over nonempty vertex subsets of the minimum induced degree.
inline int naive_degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int min_deg = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1u)) continue;
            int deg = 0;
            for (EdgeId e : g.incident(v))
                if (mask >> g.edge(e).other(v) & 1u) ++deg;
            min_deg = std::min(min_deg, deg);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

/// Hall's condition by subset enumeration (left side <= 16).
inline bool hall_holds(int left, const std::vector<std::vector<int>>& adj) {
    for (std::uint32_t mask = 1; mask < (1u << left); ++mask) {
        std::set<int> nbrs;
        for (int u = 0; u < left; ++u)
            if (mask >> u & 1u) nbrs.insert(adj[static_cast<std::size_t>(u)].begin(), adj[static_cast<std::size_t>(u)].end());
        if (static_cast<int>(nbrs.size()) < std::popcount(mask)) return false;
    }
    return true;
}

/// Every injective vertex map of `pattern` into `host`; true if one preserves
/// edges and (when colours are given) uses pairwise distinct colours.
inline bool naive_copy_exists(const Graph& host, const Graph& pattern, const std::vector<int>* colour) {
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n) return false;
    std::vector<int> chosen(static_cast<std::size_t>(n));
    std::iota(chosen.begin(), chosen.end(), 0);
    // iterate k-permutations via full permutations with a dedupe on the prefix
    std::set<std::vector<int>> seen;
    do {
        std::vector<int> prefix(chosen.begin(), chosen.begin() + k);
        if (!seen.insert(prefix).second) continue;
        std::set<int> colours;
        bool ok = true;
        for (const Edge& e : pattern.edges()) {
            auto he = host.find_edge(prefix[static_cast<std::size_t>(e.u)], prefix[static_cast<std::size_t>(e.v)]);
            if (!he) {
                ok = false;
                break;
            }
            if (colour && !colours.insert((*colour)[static_cast<std::size_t>(*he)]).second) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
    return false;
}

/// Max edges of a d-degenerate spanning subgraph via all vertex orders.
inline int naive_max_degenerate_edges(const Graph& h, int d) {
    std::vector<int> order(static_cast<std::size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        std::vector<int> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        int total = 0;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            int later = 0;
            for (EdgeId e : h.incident(v))
                if (pos[static_cast<std::size_t>(h.edge(e).other(v))] > pos[static_cast<std::size_t>(v)]) ++later;
            total += std::min(d, later);
        }
        best = std::max(best, total);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Smallest k admitting a proper k-edge-colouring, by backtracking.
inline int naive_chromatic_index(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) return 0;
    std::vector<int> colour(static_cast<std::size_t>(m), -1);
    for (int k = 1;; ++k) {
        auto solve = [&](auto&& self, int e) -> bool {
            if (e == m) return true;
            for (int c = 0; c < k; ++c) {
                bool clash = false;
                for (Vertex v : {g.edge(e).u, g.edge(e).v})
                    for (EdgeId f : g.incident(v))
                        if (f < e && colour[static_cast<std::size_t>(f)] == c) clash = true;
                if (clash) continue;
                colour[static_cast<std::size_t>(e)] = c;
                if (self(self, e + 1)) return true;
            }
            colour[static_cast<std::size_t>(e)] = -1;
            return false;
        };
        if (solve(solve, 0)) return k;
    }
}

inline bool connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(v)) {
            Vertex w = g.edge(e).other(v);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.vertex_count();
}

}  // namespace antiramsey::testing
