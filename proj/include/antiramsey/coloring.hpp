#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "antiramsey/decompose.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey {

inline constexpr int kResidualLayer = -1;
/// The rainbow-avoidance guarantee holds from m(G) >= 18 on.
inline constexpr int kGuaranteeThreshold = 18;

struct ColourRange {
    int first = 0;
    int count = 0;

    bool contains(int colour) const { return colour >= first && colour < first + count; }
};

/// Proper edge colouring built from a Decomposition. Colour ids are dense:
/// the palette of F_K comes first, then F_{K-1}, ..., then one fresh colour per
/// residual edge.
struct EdgeColoring {
    Rational m_value;
    int k = 0;
    int K = 0;
    std::int64_t r = 0;
    bool guarantee = false;
    std::vector<int> colour;    // by edge id
    std::vector<int> layer_of;  // forest index, or kResidualLayer
    std::map<int, ColourRange, std::greater<>> palettes;

    int colour_count() const;
};

struct ColoringResult {
    EdgeColoring coloring;
    Decomposition decomposition;
};

/// Proper colouring of a forest with exactly max_degree colours (0 for no
/// edges): trees are rooted at their lowest vertex and each vertex hands its
/// down-edges the smallest colours other than that of its parent edge.
std::vector<int> color_forest(const Graph& f);

ColoringResult anti_rainbow_coloring(const Graph& g, DecomposeOptions options = {});

/// Throws InputError if an edge has no colour.
bool is_proper_coloring(const Graph& g, std::span<const int> colour);
inline bool is_proper_coloring(const Graph& g, const EdgeColoring& c) { return is_proper_coloring(g, c.colour); }

/// Sum over k+2 <= i <= K of ceil(i / (i - m)), with k = floor(m), K = floor(2m).
std::int64_t r_value(const Rational& m);

std::string layer_tag(int layer);

}  // namespace antiramsey
