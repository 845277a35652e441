#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey::detail {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    return adj;
}

inline std::vector<Vertex> mask_vertices(Mask mask) {
    std::vector<Vertex> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

/// Lexicographic order of the ascending vertex sequences of two sets.
inline bool lex_less(Mask a, Mask b) {
    if (a == b) return false;
    Mask diff = a ^ b;
    Mask low = diff & (~diff + 1);
    // The set holding the first differing vertex is smaller unless the other
    // set has run out of elements at that point (it is then a prefix).
    Mask above = ~((low << 1) - 1);
    if (a & low) return (b & above) != 0;
    return (a & above) == 0;
}

}  // namespace antiramsey::detail
