#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"
#include "antiramsey/report.hpp"

namespace antiramsey {

/// Result of a bipartite matching attempt. `partner[u]` is the right vertex
/// matched to left vertex u, or -1. When the left side cannot be saturated,
/// `hall_violator` lists a left set U with |N(U)| < |U|.
struct BipartiteMatching {
    std::vector<int> partner;
    std::vector<int> hall_violator;

    bool saturating() const { return hall_violator.empty(); }
};

/// Hopcroft-Karp with neighbours scanned in the order given, followed by a
/// pass that moves each left vertex (ascending) onto the lowest free right
/// vertex it can reach directly. On failure the violator is the set of left
/// vertices reachable by alternating paths from an unmatched left vertex.
BipartiteMatching saturating_matching(int left_count, int right_count,
                                      const std::vector<std::vector<int>>& adjacency);

/// Thrown by peel_layer when Hall's condition fails, which certifies that the
/// orientation is denser than the `mu` it was promised to respect:
/// |N+(U)| * copies < |U| and the subgraph induced on U and N+(U) has
/// density `witnessed_density` > mu.
class DensityViolation : public std::runtime_error {
public:
    DensityViolation(std::vector<Vertex> hall_set, std::vector<Vertex> out_neighbourhood, int copies,
                     Rational witnessed_density);

    const std::vector<Vertex>& hall_set() const { return hall_set_; }
    const std::vector<Vertex>& out_neighbourhood() const { return out_neighbourhood_; }
    int copies() const { return copies_; }
    const Rational& witnessed_density() const { return witnessed_density_; }

private:
    std::vector<Vertex> hall_set_;
    std::vector<Vertex> out_neighbourhood_;
    int copies_;
    Rational witnessed_density_;
};

struct PeelResult {
    std::vector<EdgeId> forest;      // ascending
    Orientation remainder;
    int copies = 0;                  // c = ceil(mu / (d - mu))
    std::vector<Vertex> saturated;   // L, vertices of out-degree d
};

/// One layer of the peel: every vertex of out-degree d gives up one out-arc
/// to F, with at most `copies` arcs of F entering any vertex. Requires
/// max out-degree == d and d > mu >= m(J).
PeelResult peel_layer(const Orientation& j, int d, const Rational& mu);

struct Decomposition {
    Rational m_value;
    int k = 0;        // floor(m)
    int K = 0;        // floor(2m)
    std::vector<Vertex> order;
    /// One entry for every i in K..k+1 (possibly empty), edge ids ascending.
    std::map<int, std::vector<EdgeId>, std::greater<>> forests;
    std::vector<EdgeId> residual;
};

struct DecomposeOptions {
    /// Peel layer i with mu = m(J_i) instead of m(G).
    bool tight_mu = false;
};

Decomposition degenerate_decomposition(const Graph& g, DecomposeOptions options = {});

/// Edges of B_j, the union of F_i over i > j, ascending.
std::vector<EdgeId> upper_layers(const Decomposition& d, int j);
/// Edges of G minus B_j, ascending.
std::vector<EdgeId> lower_part(const Graph& g, const Decomposition& d, int j);

/// The per-layer degree bound ceil(i / (i - m)).
std::int64_t layer_degree_bound(int i, const Rational& m);

Report verify_decomposition(const Graph& g, const Decomposition& d);

}  // namespace antiramsey
