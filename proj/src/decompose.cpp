#include "antiramsey/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"

namespace antiramsey {

DensityViolation::DensityViolation(std::vector<Vertex> hall_set, std::vector<Vertex> out_neighbourhood, int copies,
                                   Rational witnessed_density)
    : std::runtime_error("Hall's condition fails: |N+(U)| = " + std::to_string(out_neighbourhood.size()) +
                         ", |U| = " + std::to_string(hall_set.size()) + ", c = " + std::to_string(copies) +
                         "; a subgraph of density " + witnessed_density.str() + " exceeds mu"),
      hall_set_(std::move(hall_set)),
      out_neighbourhood_(std::move(out_neighbourhood)),
      copies_(copies),
      witnessed_density_(witnessed_density) {}

std::int64_t layer_degree_bound(int i, const Rational& m) { return (Rational(i) / (Rational(i) - m)).ceil(); }

PeelResult peel_layer(const Orientation& j, int d, const Rational& mu) {
    if (d < 1 || j.max_out_degree() != d) {
        throw InputError("peel_layer: d must equal the maximum out-degree (" + std::to_string(j.max_out_degree()) + ")");
    }
    if (mu < Rational(0) || !(Rational(d) > mu)) throw InputError("peel_layer: requires 0 <= mu < d");

    const Rational ratio = mu / (Rational(d) - mu);
    const std::int64_t copies64 = ratio.ceil();
    if (copies64 > 1'000'000) throw InputError("peel_layer: mu too close to d");
    const int copies = static_cast<int>(copies64);

    PeelResult result;
    result.copies = copies;
    for (Vertex v = 0; v < j.vertex_count(); ++v) {
        if (j.out_degree(v) == d) result.saturated.push_back(v);
    }
    const auto& L = result.saturated;

    std::vector<Vertex> R;
    for (Vertex u : L) {
        for (int a : j.out_arcs(u)) R.push_back(j.arcs()[static_cast<std::size_t>(a)].head);
    }
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    std::vector<int> r_index(static_cast<std::size_t>(j.vertex_count()), -1);
    for (std::size_t i = 0; i < R.size(); ++i) r_index[static_cast<std::size_t>(R[i])] = static_cast<int>(i);

    // u is joined to every copy (v, i) of each of its own out-neighbours v
    std::vector<std::vector<int>> adjacency(L.size());
    for (std::size_t idx = 0; idx < L.size(); ++idx) {
        for (int a : j.out_arcs(L[idx])) {
            int base = r_index[static_cast<std::size_t>(j.arcs()[static_cast<std::size_t>(a)].head)] * copies;
            for (int c = 0; c < copies; ++c) adjacency[idx].push_back(base + c);
        }
    }
    const int right_count = static_cast<int>(R.size()) * copies;
    BipartiteMatching matching = saturating_matching(static_cast<int>(L.size()), right_count, adjacency);

    if (!matching.saturating()) {
        std::vector<Vertex> hall_set;
        std::vector<Vertex> neighbourhood;
        for (int idx : matching.hall_violator) {
            Vertex u = L[static_cast<std::size_t>(idx)];
            hall_set.push_back(u);
            for (int a : j.out_arcs(u)) neighbourhood.push_back(j.arcs()[static_cast<std::size_t>(a)].head);
        }
        std::sort(neighbourhood.begin(), neighbourhood.end());
        neighbourhood.erase(std::unique(neighbourhood.begin(), neighbourhood.end()), neighbourhood.end());
        std::vector<Vertex> span = hall_set;
        span.insert(span.end(), neighbourhood.begin(), neighbourhood.end());
        Rational density = subgraph_density(j.underlying(), span);
        throw DensityViolation(std::move(hall_set), std::move(neighbourhood), copies, density);
    }

    for (std::size_t idx = 0; idx < L.size(); ++idx) {
        int right = matching.partner[idx];
        Vertex head = R[static_cast<std::size_t>(right / copies)];
        for (int a : j.out_arcs(L[idx])) {
            const Arc& arc = j.arcs()[static_cast<std::size_t>(a)];
            if (arc.head == head) {
                result.forest.push_back(arc.edge);
                break;
            }
        }
    }
    std::sort(result.forest.begin(), result.forest.end());
    result.remainder = j.without(result.forest);
    return result;
}

Decomposition degenerate_decomposition(const Graph& g, DecomposeOptions options) {
    if (g.edge_count() == 0) throw InputError("degenerate_decomposition: graph has no edges");
    Decomposition d;
    d.m_value = max_density(g).value;
    d.k = static_cast<int>(d.m_value.floor());
    d.K = static_cast<int>((d.m_value * Rational(2)).floor());
    d.order = degeneracy_ordering(g).order;

    Orientation current = orient_by_ordering(g, d.order);
    for (int i = d.K; i >= d.k + 1; --i) {
        auto& layer = d.forests[i];
        if (current.max_out_degree() <= i - 1) continue;
        if (current.max_out_degree() > i) {
            throw InvariantError("degenerate_decomposition: out-degree " + std::to_string(current.max_out_degree()) +
                                 " exceeds layer " + std::to_string(i));
        }
        Rational mu = options.tight_mu ? max_density(current.underlying()).value : d.m_value;
        try {
            PeelResult peeled = peel_layer(current, i, mu);
            layer = std::move(peeled.forest);
            current = std::move(peeled.remainder);
        } catch (const DensityViolation& e) {
            throw InvariantError(std::string("degenerate_decomposition: ") + e.what());
        }
    }
    d.residual = current.edge_ids();
    std::sort(d.residual.begin(), d.residual.end());
    return d;
}

std::vector<EdgeId> upper_layers(const Decomposition& d, int j) {
    std::vector<EdgeId> out;
    for (const auto& [i, edges] : d.forests) {
        if (i > j) out.insert(out.end(), edges.begin(), edges.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> lower_part(const Graph& g, const Decomposition& d, int j) {
    std::vector<char> upper(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : upper_layers(d, j)) upper[static_cast<std::size_t>(e)] = 1;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!upper[static_cast<std::size_t>(e)]) out.push_back(e);
    }
    return out;
}

namespace {

std::string layer_name(int i) { return "F_" + std::to_string(i); }

}  // namespace

Report verify_decomposition(const Graph& g, const Decomposition& d) {
    Report report;
    if (g.edge_count() == 0) {
        report.add("m_value", false, "graph has no edges");
        return report;
    }
    const Rational m = max_density(g).value;
    {
        bool ok = m == d.m_value && d.k == m.floor() && d.K == (m * Rational(2)).floor();
        report.add("m_value", ok, "m(G) = " + m.str() + ", recorded m = " + d.m_value.str() + ", k = " +
                                      std::to_string(d.k) + ", K = " + std::to_string(d.K));
    }
    {
        bool ok = static_cast<int>(d.forests.size()) == d.K - d.k;
        for (const auto& [i, edges] : d.forests) ok = ok && i >= d.k + 1 && i <= d.K;
        report.add("layer_indices", ok, "expected layers F_" + std::to_string(d.K) + " .. F_" + std::to_string(d.k + 1));
    }
    {
        std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
        bool in_range = true;
        auto mark = [&](EdgeId e) {
            if (e < 0 || e >= g.edge_count()) {
                in_range = false;
                return;
            }
            ++seen[static_cast<std::size_t>(e)];
        };
        for (const auto& [i, edges] : d.forests) std::for_each(edges.begin(), edges.end(), mark);
        std::for_each(d.residual.begin(), d.residual.end(), mark);
        int missing = static_cast<int>(std::count(seen.begin(), seen.end(), 0));
        int repeated = static_cast<int>(std::count_if(seen.begin(), seen.end(), [](int c) { return c > 1; }));
        std::ostringstream details;
        details << missing << " edges uncovered, " << repeated << " edges in more than one part";
        if (!in_range) details << ", edge id out of range";
        const bool ok = in_range && missing == 0 && repeated == 0;
        report.add("partition", ok, details.str());
        // the remaining clauses are stated for a partition
        if (!ok) return report;
    }

    std::int64_t degree_sum = 0;
    std::map<int, int> layer_max_degree;
    for (const auto& [i, edges] : d.forests) {
        Graph f = edge_subgraph(g, edges);
        const std::int64_t bound = layer_degree_bound(i, m);
        if (edges.empty()) {
            report.add("forest[" + layer_name(i) + "]", true, "empty layer");
            report.add("bounded[" + layer_name(i) + "]", true, "empty layer");
        } else {
            report.add("forest[" + layer_name(i) + "]", is_forest(f));
            report.add("bounded[" + layer_name(i) + "]", f.max_degree() <= bound,
                       "max degree " + std::to_string(f.max_degree()) + " <= " + std::to_string(bound));
        }
        layer_max_degree[i] = f.max_degree();
    }
    for (int j = d.K; j >= d.k; --j) {
        const auto upper = upper_layers(d, j);
        const auto lower = lower_part(g, d, j);
        Graph b = edge_subgraph(g, upper);
        Graph rest = edge_subgraph(g, lower);
        const int b_degen = exact_degeneracy(b);
        const int rest_degen = exact_degeneracy(rest);
        const std::string suffix = std::to_string(j);
        report.add("degenerate[B_" + suffix + "]", b_degen <= d.K - j,
                   "degeneracy " + std::to_string(b_degen) + " <= " + std::to_string(d.K - j));
        report.add("degenerate[G-B_" + suffix + "]", rest_degen <= j,
                   "degeneracy " + std::to_string(rest_degen) + " <= " + std::to_string(j));
        degree_sum = 0;
        for (const auto& [i, deg] : layer_max_degree) {
            if (i > j) degree_sum += deg;
        }
        report.add("max_degree[B_" + suffix + "]", b.max_degree() <= degree_sum,
                   "max degree " + std::to_string(b.max_degree()) + " <= " + std::to_string(degree_sum));
    }
    return report;
}

}  // namespace antiramsey
