#include "antiramsey/density.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "antiramsey/errors.hpp"
#include "max_flow.hpp"
#include "subsets.hpp"

namespace antiramsey {

using detail::Mask;

Rational subgraph_density(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw InputError("subgraph_density: empty vertex set");
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 0 || v >= g.vertex_count()) throw InputError("subgraph_density: vertex out of range");
    }
    return Rational(induced_edge_count(g, sorted), static_cast<std::int64_t>(sorted.size()));
}

namespace {

// Maximizes q*e(S) - p*|S| over vertex sets S and returns the
// inclusion-minimal maximizer (possibly empty).
std::vector<Vertex> max_closure(const Graph& g, const Rational& lambda) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int source = n + m;
    const int sink = source + 1;
    detail::MaxFlow flow(n + m + 2);
    for (EdgeId e = 0; e < m; ++e) {
        flow.add_edge(source, n + e, lambda.den());
        flow.add_edge(n + e, g.edge(e).u, detail::MaxFlow::kInfinite);
        flow.add_edge(n + e, g.edge(e).v, detail::MaxFlow::kInfinite);
    }
    for (Vertex v = 0; v < n; ++v) flow.add_edge(v, sink, lambda.num());
    flow.run(source, sink);
    auto side = flow.source_side(source);
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)]) chosen.push_back(v);
    }
    return chosen;
}

DensityWitness make_witness(const Graph& g, std::vector<Vertex> vertices) {
    DensityWitness w;
    w.edge_count = induced_edge_count(g, vertices);
    w.vertex_count = static_cast<int>(vertices.size());
    w.value = Rational(w.edge_count, w.vertex_count);
    w.vertices = std::move(vertices);
    return w;
}

}  // namespace

DensityWitness max_density(const Graph& g) {
    if (g.edge_count() == 0) throw InputError("max_density: graph has no edges");
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 0) all.push_back(v);
    }
    DensityWitness best = make_witness(g, std::move(all));
    // Each round either proves optimality (closure value 0) or strictly
    // raises lambda to another of the finitely many ratios e/v.
    for (;;) {
        auto candidate = max_closure(g, best.value);
        if (candidate.empty()) break;
        DensityWitness next = make_witness(g, std::move(candidate));
        if (next.value <= best.value) {
            if (next.value == best.value) best = std::move(next);  // minimal maximizer
            break;
        }
        best = std::move(next);
    }
    return best;
}

DensityWitness max_density_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxBruteforceDensityVertices) {
        throw InputError("max_density_bruteforce: more than " + std::to_string(kMaxBruteforceDensityVertices) +
                         " vertices");
    }
    if (g.edge_count() == 0) throw InputError("max_density_bruteforce: graph has no edges");
    const auto adj = detail::adjacency_masks(g);
    const Mask full = (Mask{1} << n) - 1;
    std::vector<int> edges(static_cast<std::size_t>(full) + 1, 0);
    Mask best_mask = 0;
    int best_e = 0;
    int best_v = 1;
    for (Mask s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        Mask rest = s & (s - 1);
        int e = edges[rest] + std::popcount(adj[static_cast<std::size_t>(low)] & rest);
        edges[s] = e;
        int v = std::popcount(s);
        auto lhs = static_cast<std::int64_t>(e) * best_v;
        auto rhs = static_cast<std::int64_t>(best_e) * v;
        if (best_mask == 0 || lhs > rhs || (lhs == rhs && detail::lex_less(s, best_mask))) {
            best_mask = s;
            best_e = e;
            best_v = v;
        }
    }
    return make_witness(g, detail::mask_vertices(best_mask));
}

Rational two_density(const Graph& h) {
    if (h.vertex_count() < 3) throw InputError("two_density: needs at least 3 vertices");
    return Rational(h.edge_count() - 1, h.vertex_count() - 2);
}

namespace {

void check_two_density_size(const Graph& h, const char* who) {
    if (h.vertex_count() > kMaxTwoDensityVertices) {
        throw InputError(std::string(who) + ": more than " + std::to_string(kMaxTwoDensityVertices) + " vertices");
    }
}

// Visits every vertex subset of size >= 3 once, in Gray-code order, with its
// induced edge count.
template <class Visit>
void for_each_subset(const Graph& h, Visit&& visit) {
    const int n = h.vertex_count();
    const auto adj = detail::adjacency_masks(h);
    const std::uint64_t total = std::uint64_t{1} << n;
    Mask set = 0;
    int edges = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        int bit = std::countr_zero(i);
        Mask flip = Mask{1} << bit;
        if (set & flip) {
            set ^= flip;
            edges -= std::popcount(adj[static_cast<std::size_t>(bit)] & set);
        } else {
            edges += std::popcount(adj[static_cast<std::size_t>(bit)] & set);
            set ^= flip;
        }
        if (std::popcount(set) >= 3) visit(set, edges);
    }
}

}  // namespace

TwoDensity max_two_density(const Graph& h) {
    check_two_density_size(h, "max_two_density");
    const Rational floor_value(1, 2);
    bool found = false;
    Mask best_mask = 0;
    std::int64_t best_num = 0;
    std::int64_t best_den = 1;
    for_each_subset(h, [&](Mask s, int e) {
        std::int64_t num = e - 1;
        std::int64_t den = std::popcount(s) - 2;
        if (!found || num * best_den > best_num * den ||
            (num * best_den == best_num * den && detail::lex_less(s, best_mask))) {
            found = true;
            best_mask = s;
            best_num = num;
            best_den = den;
        }
    });
    if (!found || Rational(best_num, best_den) < floor_value) return {floor_value, std::nullopt};
    DensityWitness w;
    w.vertices = detail::mask_vertices(best_mask);
    w.vertex_count = static_cast<int>(w.vertices.size());
    w.edge_count = static_cast<int>(best_num) + 1;
    w.value = Rational(best_num, best_den);
    return {w.value, std::move(w)};
}

InducedSubgraph strictly_two_balanced_core(const Graph& h) {
    check_two_density_size(h, "strictly_two_balanced_core");
    const TwoDensity m2 = max_two_density(h);
    if (!m2.witness || m2.value <= Rational(1, 2)) {
        throw InputError("strictly_two_balanced_core: m2 is not attained above 1/2 by a subgraph on >= 3 vertices");
    }
    constexpr std::size_t kMaxMaximizers = 1'000'000;
    std::vector<Mask> maximizers;
    const Rational target = m2.value;
    for_each_subset(h, [&](Mask s, int e) {
        if (Rational(e - 1, std::popcount(s) - 2) == target) {
            if (maximizers.size() == kMaxMaximizers) throw ResourceError("strictly_two_balanced_core: too many maximizers");
            maximizers.push_back(s);
        }
    });
    std::stable_sort(maximizers.begin(), maximizers.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<Mask> minimal;
    for (Mask s : maximizers) {
        bool has_smaller = std::any_of(minimal.begin(), minimal.end(), [s](Mask t) { return (t & s) == t; });
        if (!has_smaller) minimal.push_back(s);
    }
    Mask chosen = *std::min_element(minimal.begin(), minimal.end(), detail::lex_less);
    return induced_subgraph(h, detail::mask_vertices(chosen));
}

bool is_strictly_two_balanced(const Graph& h) {
    check_two_density_size(h, "is_strictly_two_balanced");
    if (h.vertex_count() < 3) return false;
    const Rational whole = two_density(h);
    if (whole <= Rational(1, 2)) return false;
    const Mask full = h.vertex_count() == 32 ? ~Mask{0} : (Mask{1} << h.vertex_count()) - 1;
    bool strict = true;
    for_each_subset(h, [&](Mask s, int e) {
        if (s != full && Rational(e - 1, std::popcount(s) - 2) >= whole) strict = false;
    });
    return strict;
}

}  // namespace antiramsey
