#include "antiramsey/coloring.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "antiramsey/errors.hpp"

namespace antiramsey {

int EdgeColoring::colour_count() const {
    std::unordered_set<int> distinct(colour.begin(), colour.end());
    return static_cast<int>(distinct.size());
}

std::string layer_tag(int layer) { return layer == kResidualLayer ? "residual" : "F_" + std::to_string(layer); }

std::vector<int> color_forest(const Graph& f) {
    if (!is_forest(f)) throw InputError("color_forest: input has a cycle");
    std::vector<int> colour(static_cast<std::size_t>(f.edge_count()), -1);
    std::vector<char> visited(static_cast<std::size_t>(f.vertex_count()), 0);
    std::vector<int> parent_colour(static_cast<std::size_t>(f.vertex_count()), -1);
    for (Vertex root = 0; root < f.vertex_count(); ++root) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        visited[static_cast<std::size_t>(root)] = 1;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            const int skip = parent_colour[static_cast<std::size_t>(v)];
            int next = 0;
            for (EdgeId e : f.incident(v)) {
                Vertex child = f.edge(e).other(v);
                if (visited[static_cast<std::size_t>(child)]) continue;
                if (next == skip) ++next;
                colour[static_cast<std::size_t>(e)] = next;
                parent_colour[static_cast<std::size_t>(child)] = next;
                ++next;
                visited[static_cast<std::size_t>(child)] = 1;
                queue.push(child);
            }
        }
    }
    return colour;
}

std::int64_t r_value(const Rational& m) {
    const std::int64_t k = m.floor();
    const std::int64_t K = (m * Rational(2)).floor();
    std::int64_t r = 0;
    for (std::int64_t i = k + 2; i <= K; ++i) r += (Rational(i) / (Rational(i) - m)).ceil();
    return r;
}

ColoringResult anti_rainbow_coloring(const Graph& g, DecomposeOptions options) {
    if (g.edge_count() == 0) throw InputError("anti_rainbow_coloring: graph has no edges");
    ColoringResult result;
    result.decomposition = degenerate_decomposition(g, options);
    const Decomposition& d = result.decomposition;
    EdgeColoring& c = result.coloring;
    c.m_value = d.m_value;
    c.k = d.k;
    c.K = d.K;
    c.r = r_value(d.m_value);
    c.guarantee = d.m_value >= Rational(kGuaranteeThreshold);
    c.colour.assign(static_cast<std::size_t>(g.edge_count()), -1);
    c.layer_of.assign(static_cast<std::size_t>(g.edge_count()), kResidualLayer);

    int next_colour = 0;
    for (const auto& [i, edges] : d.forests) {
        Graph f = edge_subgraph(g, edges);
        std::vector<int> local = color_forest(f);
        const int used = edges.empty() ? 0 : *std::max_element(local.begin(), local.end()) + 1;
        for (std::size_t idx = 0; idx < edges.size(); ++idx) {
            auto e = static_cast<std::size_t>(edges[idx]);
            c.colour[e] = next_colour + local[idx];
            c.layer_of[e] = i;
        }
        c.palettes[i] = {next_colour, used};
        next_colour += used;
    }
    c.palettes[kResidualLayer] = {next_colour, static_cast<int>(d.residual.size())};
    for (EdgeId e : d.residual) c.colour[static_cast<std::size_t>(e)] = next_colour++;
    return result;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colour) {
    if (static_cast<int>(colour.size()) != g.edge_count()) {
        throw InputError("is_proper_coloring: colouring covers " + std::to_string(colour.size()) + " of " +
                         std::to_string(g.edge_count()) + " edges");
    }
    for (int c : colour) {
        if (c < 0) throw InputError("is_proper_coloring: uncoloured edge");
    }
    std::vector<int> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (EdgeId e : g.incident(v)) seen.push_back(colour[static_cast<std::size_t>(e)]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

}  // namespace antiramsey
