#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace antiramsey {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edge ids are positions in
/// edges() and never change; the graph is immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    /// Throws InputError on a self-loop, a duplicate edge or an endpoint out of range.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(incident_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const EdgeId> incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;

    /// (neighbour, edge id) pairs ascending by neighbour.
    std::span<const std::pair<Vertex, EdgeId>> neighbours(Vertex v) const {
        return sorted_[static_cast<std::size_t>(v)];
    }
    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    // per vertex: (neighbour, edge id) sorted by neighbour
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> sorted_;
};

/// A subgraph relabelled onto 0..k-1; `original[i]` is the host id of vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

/// Same vertex set, only the listed edges (in the given order).
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edge_ids);
/// Vertices sorted ascending before relabelling.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);
/// Number of edges of g with both endpoints in `vertices`.
int induced_edge_count(const Graph& g, std::span<const Vertex> vertices);

/// Edge-list text: whitespace separated id pairs, '#' comments, optional
/// first line "n <count>". Vertex ids are used as given, so vertex_count is
/// 1 + the largest id unless the header says more.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

struct DegeneracyOrdering {
    std::vector<Vertex> order;
    int degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex, lowest id first on ties.
DegeneracyOrdering degeneracy_ordering(const Graph& g);
int exact_degeneracy(const Graph& g);
bool is_forest(const Graph& g);

struct Arc {
    EdgeId edge = 0;
    Vertex tail = 0;
    Vertex head = 0;
};

/// A set of arcs over a graph's edges, all pointing forward in a fixed linear
/// vertex order. Removing arcs keeps the order, so every sub-orientation is
/// acyclic as well.
class Orientation {
public:
    Orientation() = default;
    /// Throws InputError if `order` is not a permutation or an arc points backwards.
    Orientation(std::vector<Vertex> order, std::vector<Arc> arcs);

    int vertex_count() const { return static_cast<int>(order_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    std::span<const Vertex> order() const { return order_; }
    int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
    std::span<const Arc> arcs() const { return arcs_; }

    /// Indices into arcs(), ascending by head id.
    std::span<const int> out_arcs(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_arcs(v).size()); }
    int in_degree(Vertex v) const { return in_degree_[static_cast<std::size_t>(v)]; }
    int max_out_degree() const;
    int max_in_degree() const;

    /// The arcs not listed in `removed_edges`, same order.
    Orientation without(std::span<const EdgeId> removed_edges) const;
    /// Underlying undirected graph; edge i of the result is arcs()[i].
    Graph underlying() const;
    std::vector<EdgeId> edge_ids() const;

private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> in_degree_;
};

/// Directs every edge from its earlier endpoint in `order` to the later one.
Orientation orient_by_ordering(const Graph& g, std::span<const Vertex> order);

}  // namespace antiramsey
