#pragma once

#include <optional>
#include <span>
#include <vector>

#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey {

/// An optimal vertex set together with the exact value it realizes, either
/// edge_count / vertex_count (density) or (edge_count - 1) / (vertex_count - 2)
/// (2-density) of the induced subgraph.
struct DensityWitness {
    Rational value;
    std::vector<Vertex> vertices;  // ascending
    int edge_count = 0;
    int vertex_count = 0;
};

/// m2 may come from the 1/2 floor alone, in which case there is no witness.
struct TwoDensity {
    Rational value;
    std::optional<DensityWitness> witness;
};

inline constexpr int kMaxBruteforceDensityVertices = 16;
inline constexpr int kMaxTwoDensityVertices = 24;

Rational subgraph_density(const Graph& g, std::span<const Vertex> vertices);

/// m(G), the maximum of e/v over nonempty subgraphs. Solved exactly by
/// Dinkelbach iteration on a max-closure (min-cut) network; the witness is the
/// inclusion-minimal optimal vertex set at the final parameter.
DensityWitness max_density(const Graph& g);

/// Exhaustive 2^n version of max_density for testing; ties go to the
/// lexicographically smallest vertex set.
DensityWitness max_density_bruteforce(const Graph& g);

/// d2(H) = (e_H - 1) / (v_H - 2); requires v_H >= 3.
Rational two_density(const Graph& h);

/// m2(H): max of d2 over subgraphs on >= 3 vertices, floored at 1/2. For a
/// fixed vertex set the induced subgraph is optimal, so the search runs over
/// vertex subsets in Gray-code order.
TwoDensity max_two_density(const Graph& h);

/// The lexicographically smallest inclusion-minimal vertex set attaining
/// m2(H), as an induced subgraph. Requires m2(H) > 1/2.
InducedSubgraph strictly_two_balanced_core(const Graph& h);

/// Every proper subgraph has strictly smaller m2 than the graph itself.
bool is_strictly_two_balanced(const Graph& h);

}  // namespace antiramsey
