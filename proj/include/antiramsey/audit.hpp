#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "antiramsey/coloring.hpp"
#include "antiramsey/decompose.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"
#include "antiramsey/report.hpp"

namespace antiramsey {

/// An injective, adjacency-preserving map of a pattern into a host.
struct Embedding {
    std::vector<Vertex> mapping;      // pattern vertex -> host vertex
    std::vector<EdgeId> edge_images;  // pattern edge -> host edge
};

/// Any copy of `pattern` in `host`, first in canonical search order.
std::optional<Embedding> find_copy(const Graph& host, const Graph& pattern);

/// A copy of `pattern` whose host edges all have distinct colours.
/// Backtracking from the highest-degree pattern vertex, host candidates in
/// ascending id; a branch dies as soon as two mapped edges share a colour.
std::optional<Embedding> rainbow_copy_search(const Graph& host, std::span<const int> colour, const Graph& pattern);
inline std::optional<Embedding> rainbow_copy_search(const Graph& host, const EdgeColoring& c, const Graph& pattern) {
    return rainbow_copy_search(host, c.colour, pattern);
}

/// True when `e` maps `pattern` into `host` injectively and preserves edges.
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

inline constexpr int kMaxDegenerateOracleVertices = 10;

/// Largest edge count of a d-degenerate spanning subgraph of h. Exact: a
/// d-degenerate subgraph is one where, for some vertex order, each vertex
/// keeps at most d edges to later vertices, so a DP over the set of already
/// placed vertices finds the best order.
int max_degenerate_subgraph_edges(const Graph& h, int d);

/// C(d-1, 2) - (d - k - eps) * (v_H - 2): a lower bound on how many edges must
/// be removed from h to leave a d-degenerate subgraph, given d2(h) >= k + eps.
/// The bound rests on a d-degenerate graph on v_H vertices having at most
/// C(d, 2) + d (v_H - d) edges, which needs d <= v_H.
Rational degeneracy_gap_bound(const Graph& h, int d, std::int64_t k, const Rational& eps);

/// Checks the palette budgets, residual uniqueness and the closing integer
/// inequalities that make the colouring avoid dense rainbow subgraphs.
Report certificate_check(const Graph& g, const Decomposition& dec, const EdgeColoring& col);

struct RainbowViolation {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
    Rational two_density;
};

struct AuditResult {
    std::vector<RainbowViolation> violations;
    std::uint64_t subgraphs_examined = 0;
};

/// Thrown when the enumeration budget runs out; carries what was found so far.
class AuditBudgetExceeded : public ResourceError {
public:
    explicit AuditBudgetExceeded(AuditResult partial);
    const AuditResult& partial() const { return partial_; }

private:
    AuditResult partial_;
};

inline constexpr std::uint64_t kDefaultAuditBudget = 100'000'000;

/// Enumerates connected rainbow subgraphs with at most `max_edges` edges and
/// at least 3 vertices, and reports those whose 2-density reaches `threshold`.
AuditResult rainbow_subgraph_audit(const Graph& g, std::span<const int> colour, const Rational& threshold,
                                   int max_edges, std::uint64_t budget = kDefaultAuditBudget);
inline AuditResult rainbow_subgraph_audit(const Graph& g, const EdgeColoring& col, int max_edges,
                                          std::uint64_t budget = kDefaultAuditBudget) {
    return rainbow_subgraph_audit(g, col.colour, col.m_value, max_edges, budget);
}

}  // namespace antiramsey
