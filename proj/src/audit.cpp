#include "antiramsey/audit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "antiramsey/density.hpp"
#include "subsets.hpp"

namespace antiramsey {

namespace {

class CopySearch {
public:
    CopySearch(const Graph& host, const Graph& pattern, std::span<const int> colour)
        : host_(host), pattern_(pattern), colour_(colour) {
        const int k = pattern.vertex_count();
        mapping_.assign(static_cast<std::size_t>(k), -1);
        edge_images_.assign(static_cast<std::size_t>(pattern.edge_count()), -1);
        host_used_.assign(static_cast<std::size_t>(host.vertex_count()), 0);
        if (!colour.empty()) {
            int max_colour = *std::max_element(colour.begin(), colour.end());
            colour_used_.assign(static_cast<std::size_t>(max_colour) + 1, 0);
        }
        plan();
    }

    std::optional<Embedding> run() {
        if (extend(0)) return Embedding{mapping_, edge_images_};
        return std::nullopt;
    }

private:
    struct Back {
        int position;
        EdgeId pattern_edge;
    };

    // Highest degree first, then repeatedly the vertex with most placed
    // neighbours (ties: higher degree, then lower id).
    void plan() {
        const int k = pattern_.vertex_count();
        std::vector<char> placed(static_cast<std::size_t>(k), 0);
        std::vector<int> placed_nbrs(static_cast<std::size_t>(k), 0);
        std::vector<int> position(static_cast<std::size_t>(k), -1);
        for (int step = 0; step < k; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < k; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (best < 0) {
                    best = v;
                    continue;
                }
                auto key = [&](Vertex x) { return std::pair(placed_nbrs[static_cast<std::size_t>(x)], pattern_.degree(x)); };
                if (key(v) > key(best)) best = v;
            }
            placed[static_cast<std::size_t>(best)] = 1;
            position[static_cast<std::size_t>(best)] = step;
            order_.push_back(best);
            std::vector<Back> back;
            for (EdgeId e : pattern_.incident(best)) {
                Vertex w = pattern_.edge(e).other(best);
                if (placed[static_cast<std::size_t>(w)] && w != best) {
                    back.push_back({position[static_cast<std::size_t>(w)], e});
                } else {
                    ++placed_nbrs[static_cast<std::size_t>(w)];
                }
            }
            back_.push_back(std::move(back));
        }
    }

    bool try_vertex(int step, Vertex x, Vertex candidate) {
        if (host_used_[static_cast<std::size_t>(candidate)]) return false;
        if (host_.degree(candidate) < pattern_.degree(x)) return false;
        std::size_t added = 0;
        bool ok = true;
        for (const Back& b : back_[static_cast<std::size_t>(step)]) {
            Vertex image = mapping_[static_cast<std::size_t>(order_[static_cast<std::size_t>(b.position)])];
            auto e = host_.find_edge(candidate, image);
            if (!e) {
                ok = false;
                break;
            }
            if (!colour_.empty()) {
                auto& used = colour_used_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(*e)])];
                if (used) {
                    ok = false;
                    break;
                }
                used = 1;
            }
            edge_images_[static_cast<std::size_t>(b.pattern_edge)] = *e;
            ++added;
        }
        if (ok) {
            mapping_[static_cast<std::size_t>(x)] = candidate;
            host_used_[static_cast<std::size_t>(candidate)] = 1;
            if (extend(step + 1)) return true;
            host_used_[static_cast<std::size_t>(candidate)] = 0;
            mapping_[static_cast<std::size_t>(x)] = -1;
        }
        const auto& back = back_[static_cast<std::size_t>(step)];
        for (std::size_t i = 0; i < added; ++i) {
            EdgeId pe = back[i].pattern_edge;
            if (!colour_.empty()) {
                EdgeId he = edge_images_[static_cast<std::size_t>(pe)];
                colour_used_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(he)])] = 0;
            }
            edge_images_[static_cast<std::size_t>(pe)] = -1;
        }
        return false;
    }

    bool extend(int step) {
        if (step == pattern_.vertex_count()) return true;
        const Vertex x = order_[static_cast<std::size_t>(step)];
        const auto& back = back_[static_cast<std::size_t>(step)];
        if (!back.empty()) {
            Vertex anchor = mapping_[static_cast<std::size_t>(order_[static_cast<std::size_t>(back.front().position)])];
            for (const auto& [candidate, e] : host_.neighbours(anchor)) {
                if (try_vertex(step, x, candidate)) return true;
            }
            return false;
        }
        for (Vertex candidate = 0; candidate < host_.vertex_count(); ++candidate) {
            if (try_vertex(step, x, candidate)) return true;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::span<const int> colour_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Back>> back_;
    std::vector<Vertex> mapping_;
    std::vector<EdgeId> edge_images_;
    std::vector<char> host_used_;
    std::vector<char> colour_used_;
};

void check_colouring(const Graph& g, std::span<const int> colour, const char* who) {
    if (static_cast<int>(colour.size()) != g.edge_count()) {
        throw InputError(std::string(who) + ": colouring does not cover the host edges");
    }
    for (int c : colour) {
        if (c < 0) throw InputError(std::string(who) + ": uncoloured edge");
    }
}

}  // namespace

std::optional<Embedding> find_copy(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count()) return std::nullopt;
    return CopySearch(host, pattern, {}).run();
}

std::optional<Embedding> rainbow_copy_search(const Graph& host, std::span<const int> colour, const Graph& pattern) {
    if (pattern.edge_count() == 0) throw InputError("rainbow_copy_search: pattern has no edges");
    check_colouring(host, colour, "rainbow_copy_search");
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count()) return std::nullopt;
    std::unordered_set<int> distinct(colour.begin(), colour.end());
    if (static_cast<int>(distinct.size()) < pattern.edge_count()) return std::nullopt;
    return CopySearch(host, pattern, colour).run();
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.mapping.size()) != pattern.vertex_count()) return false;
    if (static_cast<int>(e.edge_images.size()) != pattern.edge_count()) return false;
    std::unordered_set<Vertex> images;
    for (Vertex v : e.mapping) {
        if (v < 0 || v >= host.vertex_count() || !images.insert(v).second) return false;
    }
    for (EdgeId pe = 0; pe < pattern.edge_count(); ++pe) {
        const Edge& p = pattern.edge(pe);
        auto he = host.find_edge(e.mapping[static_cast<std::size_t>(p.u)], e.mapping[static_cast<std::size_t>(p.v)]);
        if (!he || *he != e.edge_images[static_cast<std::size_t>(pe)]) return false;
    }
    return true;
}

int max_degenerate_subgraph_edges(const Graph& h, int d) {
    const int n = h.vertex_count();
    if (n > kMaxDegenerateOracleVertices) {
        throw InputError("max_degenerate_subgraph_edges: more than " + std::to_string(kMaxDegenerateOracleVertices) +
                         " vertices");
    }
    if (d < 0) throw InputError("max_degenerate_subgraph_edges: negative d");
    const auto adj = detail::adjacency_masks(h);
    const detail::Mask full = (detail::Mask{1} << n) - 1;
    // best[S]: most edges kept once the vertices of S have been placed first
    std::vector<int> best(static_cast<std::size_t>(full) + 1, -1);
    best[0] = 0;
    for (detail::Mask s = 0; s <= full; ++s) {
        if (best[s] < 0) continue;
        for (Vertex v = 0; v < n; ++v) {
            detail::Mask bit = detail::Mask{1} << v;
            if (s & bit) continue;
            int later = std::popcount(adj[static_cast<std::size_t>(v)] & ~s & full & ~bit);
            int value = best[s] + std::min(d, later);
            best[s | bit] = std::max(best[s | bit], value);
        }
    }
    return best[full];
}

Rational degeneracy_gap_bound(const Graph& h, int d, std::int64_t k, const Rational& eps) {
    if (h.vertex_count() < 3) throw InputError("degeneracy_gap_bound: needs at least 3 vertices");
    if (eps < Rational(0) || eps >= Rational(1)) throw InputError("degeneracy_gap_bound: eps must lie in [0, 1)");
    if (d < 0) throw InputError("degeneracy_gap_bound: negative d");
    if (two_density(h) < Rational(k) + eps) {
        throw InputError("degeneracy_gap_bound: d2(H) = " + two_density(h).str() + " is below k + eps");
    }
    return Rational(choose2(d - 1)) - (Rational(d) - Rational(k) - eps) * Rational(h.vertex_count() - 2);
}

Report certificate_check(const Graph& g, const Decomposition& dec, const EdgeColoring& col) {
    Report report;
    const Rational& m = dec.m_value;
    const std::int64_t k = dec.k;

    {
        bool ok = col.m_value == dec.m_value && col.k == dec.k && col.K == dec.K &&
                  static_cast<int>(col.colour.size()) == g.edge_count() &&
                  static_cast<int>(col.layer_of.size()) == g.edge_count();
        if (ok) {
            for (const auto& [i, edges] : dec.forests) {
                for (EdgeId e : edges) {
                    if (e < 0 || e >= g.edge_count() || col.layer_of[static_cast<std::size_t>(e)] != i) ok = false;
                }
            }
            for (EdgeId e : dec.residual) {
                if (e < 0 || e >= g.edge_count() || col.layer_of[static_cast<std::size_t>(e)] != kResidualLayer) ok = false;
            }
        }
        report.add("consistency", ok, "colouring layers and parameters match the decomposition");
        if (!ok) return report;
    }

    std::map<int, std::vector<EdgeId>> by_layer;
    for (EdgeId e = 0; e < g.edge_count(); ++e) by_layer[col.layer_of[static_cast<std::size_t>(e)]].push_back(e);
    auto distinct_colours = [&](auto&& include_layer) {
        std::unordered_set<int> seen;
        for (const auto& [layer, edges] : by_layer) {
            if (!include_layer(layer)) continue;
            for (EdgeId e : edges) seen.insert(col.colour[static_cast<std::size_t>(e)]);
        }
        return static_cast<std::int64_t>(seen.size());
    };

    // (i) per-layer palettes
    for (const auto& [i, edges] : dec.forests) {
        const std::int64_t bound = layer_degree_bound(i, m);
        std::unordered_set<int> seen;
        for (EdgeId e : edges) seen.insert(col.colour[static_cast<std::size_t>(e)]);
        auto used = static_cast<std::int64_t>(seen.size());
        report.add("palette[" + layer_tag(i) + "]", used <= bound,
                   std::to_string(used) + " colours <= " + std::to_string(bound));
    }

    // (v) r against its defining sum
    std::int64_t r_sum = 0;
    for (std::int64_t i = k + 2; i <= dec.K; ++i) r_sum += layer_degree_bound(static_cast<int>(i), m);
    report.add("r_definition", col.r == r_sum,
               "r = " + std::to_string(col.r) + ", sum of ceil(i/(i-m)) over k+2..K = " + std::to_string(r_sum));

    // (ii) colours on B_{k+1}
    const std::int64_t upper_colours = distinct_colours([&](int layer) { return layer >= k + 2; });
    report.add("colours[B_" + std::to_string(k + 1) + "]", upper_colours <= r_sum,
               std::to_string(upper_colours) + " colours <= r = " + std::to_string(r_sum));

    const Rational eps = m - Rational(k);
    const std::int64_t last_layer_budget = (Rational(k + 1) / (Rational(1) - eps)).ceil();
    const std::int64_t all_forest_colours = distinct_colours([](int layer) { return layer != kResidualLayer; });
    report.add("colours[B_" + std::to_string(k) + "]", all_forest_colours <= r_sum + last_layer_budget,
               std::to_string(all_forest_colours) + " colours <= r + ceil((k+1)/(1-eps)) = " +
                   std::to_string(r_sum + last_layer_budget));

    // (iii) residual colours are used exactly once
    {
        std::unordered_map<int, int> uses;
        for (int c : col.colour) ++uses[c];
        int repeated = 0;
        for (EdgeId e : dec.residual) {
            if (uses[col.colour[static_cast<std::size_t>(e)]] != 1) ++repeated;
        }
        report.add("residual_unique", repeated == 0, std::to_string(repeated) + " residual edges share a colour");
    }

    // (iv) closing inequalities
    if (k >= kGuaranteeThreshold) {
        const std::int64_t lhs = choose2(k - 1);
        const std::int64_t rhs = k + 2 + r_sum;
        report.add("inequality[binom]", lhs > rhs,
                   "C(k-1,2) = " + std::to_string(lhs) + " > k + 2 + r = " + std::to_string(rhs));
        const Rational chain_lhs = Rational(last_layer_budget + r_sum);
        const Rational chain_rhs =
            eps / (Rational(1) - eps) * Rational(choose2(k) - r_sum) + Rational(choose2(k - 1));
        report.add("inequality[chain]", chain_lhs <= chain_rhs,
                   "ceil((k+1)/(1-eps)) + r = " + chain_lhs.str() + " <= " + chain_rhs.str());
    } else {
        report.skip("inequality[binom]", "k = " + std::to_string(k) + " < " + std::to_string(kGuaranteeThreshold));
        report.skip("inequality[chain]", "k = " + std::to_string(k) + " < " + std::to_string(kGuaranteeThreshold));
    }
    return report;
}

AuditBudgetExceeded::AuditBudgetExceeded(AuditResult partial)
    : ResourceError("rainbow_subgraph_audit: budget of examined subgraphs exceeded"), partial_(std::move(partial)) {}

namespace {

// ESU enumeration on the line graph: each connected edge set is produced
// exactly once, rooted at its smallest edge id.
class RainbowEnumerator {
public:
    RainbowEnumerator(const Graph& g, std::span<const int> colour, const Rational& threshold, int max_edges,
                      std::uint64_t budget)
        : g_(g), colour_(colour), threshold_(threshold), max_edges_(max_edges), budget_(budget) {
        touch_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        in_set_.assign(static_cast<std::size_t>(g.edge_count()), 0);
        int max_colour = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end());
        colour_used_.assign(static_cast<std::size_t>(max_colour) + 1, 0);
    }

    AuditResult run() {
        for (EdgeId root = 0; root < g_.edge_count(); ++root) {
            add(root);
            std::vector<EdgeId> ext;
            for_each_line_neighbour(root, [&](EdgeId f) {
                if (f > root) ext.push_back(f);
            });
            extend(root, std::move(ext));
            remove(root);
        }
        return std::move(result_);
    }

private:
    template <class F>
    void for_each_line_neighbour(EdgeId e, F&& f) {
        const Edge& edge = g_.edge(e);
        for (EdgeId x : g_.incident(edge.u)) {
            if (x != e) f(x);
        }
        for (EdgeId x : g_.incident(edge.v)) {
            if (x != e) f(x);
        }
    }

    void add(EdgeId e) {
        set_.push_back(e);
        in_set_[static_cast<std::size_t>(e)] = 1;
        colour_used_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(e)])] = 1;
        for (Vertex v : {g_.edge(e).u, g_.edge(e).v}) {
            if (touch_[static_cast<std::size_t>(v)]++ == 0) ++vertices_;
        }
    }

    void remove(EdgeId e) {
        set_.pop_back();
        in_set_[static_cast<std::size_t>(e)] = 0;
        colour_used_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(e)])] = 0;
        for (Vertex v : {g_.edge(e).u, g_.edge(e).v}) {
            if (--touch_[static_cast<std::size_t>(v)] == 0) --vertices_;
        }
    }

    void record() {
        if (result_.subgraphs_examined == budget_) throw AuditBudgetExceeded(std::move(result_));
        ++result_.subgraphs_examined;
        if (vertices_ < 3) return;
        Rational d2(static_cast<std::int64_t>(set_.size()) - 1, vertices_ - 2);
        if (d2 < threshold_) return;
        RainbowViolation v;
        v.edges = set_;
        std::sort(v.edges.begin(), v.edges.end());
        for (Vertex x = 0; x < g_.vertex_count(); ++x) {
            if (touch_[static_cast<std::size_t>(x)] > 0) v.vertices.push_back(x);
        }
        v.two_density = d2;
        result_.violations.push_back(std::move(v));
    }

    void extend(EdgeId root, std::vector<EdgeId> ext) {
        record();
        if (static_cast<int>(set_.size()) >= max_edges_) return;
        while (!ext.empty()) {
            EdgeId w = ext.back();
            ext.pop_back();
            if (colour_used_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(w)])]) continue;
            std::vector<EdgeId> next = ext;
            const Edge& we = g_.edge(w);
            // exclusive neighbours of w: share an endpoint of w that S does not touch
            for (Vertex end : {we.u, we.v}) {
                if (touch_[static_cast<std::size_t>(end)] > 0) continue;
                for (EdgeId u : g_.incident(end)) {
                    if (u == w || u <= root || in_set_[static_cast<std::size_t>(u)]) continue;
                    Vertex other = g_.edge(u).other(end);
                    if (touch_[static_cast<std::size_t>(other)] > 0) continue;
                    next.push_back(u);
                }
            }
            add(w);
            extend(root, std::move(next));
            remove(w);
        }
    }

    const Graph& g_;
    std::span<const int> colour_;
    Rational threshold_;
    int max_edges_;
    std::uint64_t budget_;
    std::vector<EdgeId> set_;
    std::vector<char> in_set_;
    std::vector<int> touch_;
    std::vector<char> colour_used_;
    int vertices_ = 0;
    AuditResult result_;
};

}  // namespace

AuditResult rainbow_subgraph_audit(const Graph& g, std::span<const int> colour, const Rational& threshold,
                                   int max_edges, std::uint64_t budget) {
    check_colouring(g, colour, "rainbow_subgraph_audit");
    if (max_edges < 1) throw InputError("rainbow_subgraph_audit: max_edges must be positive");
    return RainbowEnumerator(g, colour, threshold, max_edges, budget).run();
}

}  // namespace antiramsey
