#include "antiramsey/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "antiramsey/errors.hpp"

namespace antiramsey {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    incident_.resize(static_cast<std::size_t>(vertex_count));
    sorted_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
    edges_ = std::move(edges);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
            throw InputError("edge " + std::to_string(i) + " has an endpoint out of range");
        }
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        auto id = static_cast<EdgeId>(i);
        incident_[static_cast<std::size_t>(e.u)].push_back(id);
        incident_[static_cast<std::size_t>(e.v)].push_back(id);
        sorted_[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
        sorted_[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
    }
    for (auto& list : sorted_) {
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end(),
                                      [](const auto& a, const auto& b) { return a.first == b.first; });
        if (dup != list.end()) {
            const Edge& e = edges_[static_cast<std::size_t>(dup->second)];
            throw InputError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : incident_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    const auto& list = sorted_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair<Vertex, EdgeId>{b, -1});
    if (it != list.end() && it->first == b) return it->second;
    return std::nullopt;
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edge_ids) {
    std::vector<Edge> edges;
    edges.reserve(edge_ids.size());
    for (EdgeId e : edge_ids) edges.push_back(g.edge(e));
    return Graph(g.vertex_count(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = index[static_cast<std::size_t>(e.u)];
        int b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b});
    }
    int k = static_cast<int>(vertices.size());
    return {Graph(k, std::move(edges)), std::move(vertices)};
}

int induced_edge_count(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
    int count = 0;
    for (const Edge& e : g.edges()) {
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ++count;
    }
    return count;
}

namespace {

bool parse_id(std::string_view token, long long& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    constexpr long long kMaxVertices = 1LL << 30;
    std::vector<Edge> edges;
    long long declared = -1;
    long long max_id = -1;
    bool seen_content = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        line = line.substr(0, line.find('#'));
        ++line_no;
        start = end + 1;

        auto tokens = split_ws(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        auto fail = [&](const std::string& why) {
            return InputError("line " + std::to_string(line_no) + ": " + why);
        };
        if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
            if (!parse_id(tokens[1], declared) || declared > kMaxVertices) throw fail("bad vertex count");
            seen_content = true;
            if (end == text.size()) break;
            continue;
        }
        seen_content = true;
        long long a = 0;
        long long b = 0;
        if (tokens.size() != 2 || !parse_id(tokens[0], a) || !parse_id(tokens[1], b)) {
            throw fail("expected two nonnegative integer vertex ids");
        }
        if (a > kMaxVertices || b > kMaxVertices) throw fail("vertex id too large");
        if (a == b) throw fail("self-loop at vertex " + std::to_string(a));
        max_id = std::max({max_id, a, b});
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        if (end == text.size()) break;
    }
    if (declared >= 0 && max_id >= declared) {
        throw InputError("vertex id " + std::to_string(max_id) + " exceeds declared count " + std::to_string(declared));
    }
    auto n = static_cast<int>(declared >= 0 ? declared : max_id + 1);
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_graph(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) edges.push_back({a, (a + 1) % n});
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (Vertex a = 1; a <= leaves; ++a) edges.push_back({0, a});
    return Graph(leaves + 1, std::move(edges));
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    DegeneracyOrdering result;
    result.order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, deg);
        for (EdgeId e : g.incident(v)) {
            Vertex w = g.edge(e).other(v);
            auto& dw = degree[static_cast<std::size_t>(w)];
            if (removed[static_cast<std::size_t>(w)]) continue;
            queue.erase({dw, w});
            --dw;
            queue.emplace(dw, w);
        }
    }
    return result;
}

int exact_degeneracy(const Graph& g) { return degeneracy_ordering(g).degeneracy; }

bool is_forest(const Graph& g) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            auto& p = parent[static_cast<std::size_t>(v)];
            p = parent[static_cast<std::size_t>(p)];
            v = p;
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        Vertex a = find(e.u);
        Vertex b = find(e.v);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

Orientation::Orientation(std::vector<Vertex> order, std::vector<Arc> arcs)
    : order_(std::move(order)), arcs_(std::move(arcs)) {
    const auto n = order_.size();
    position_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = order_[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || position_[static_cast<std::size_t>(v)] != -1) {
            throw InputError("vertex order is not a permutation");
        }
        position_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    out_.assign(n, {});
    in_degree_.assign(n, 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail < 0 || a.head < 0 || static_cast<std::size_t>(a.tail) >= n || static_cast<std::size_t>(a.head) >= n) {
            throw InputError("arc endpoint out of range");
        }
        if (position(a.tail) >= position(a.head)) throw InputError("arc does not point forward in the order");
        out_[static_cast<std::size_t>(a.tail)].push_back(static_cast<int>(i));
        ++in_degree_[static_cast<std::size_t>(a.head)];
    }
    for (auto& list : out_) {
        std::sort(list.begin(), list.end(), [this](int x, int y) {
            return arcs_[static_cast<std::size_t>(x)].head < arcs_[static_cast<std::size_t>(y)].head;
        });
    }
}

int Orientation::max_out_degree() const {
    int best = 0;
    for (const auto& list : out_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Orientation::max_in_degree() const {
    return in_degree_.empty() ? 0 : *std::max_element(in_degree_.begin(), in_degree_.end());
}

Orientation Orientation::without(std::span<const EdgeId> removed_edges) const {
    std::set<EdgeId> removed(removed_edges.begin(), removed_edges.end());
    std::vector<Arc> kept;
    kept.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        if (!removed.contains(a.edge)) kept.push_back(a);
    }
    return Orientation(order_, std::move(kept));
}

Graph Orientation::underlying() const {
    std::vector<Edge> edges;
    edges.reserve(arcs_.size());
    for (const Arc& a : arcs_) edges.push_back({a.tail, a.head});
    return Graph(vertex_count(), std::move(edges));
}

std::vector<EdgeId> Orientation::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(arcs_.size());
    for (const Arc& a : arcs_) ids.push_back(a.edge);
    return ids;
}

Orientation orient_by_ordering(const Graph& g, std::span<const Vertex> order) {
    if (static_cast<int>(order.size()) != g.vertex_count()) throw InputError("vertex order is not a permutation");
    std::vector<int> position(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= g.vertex_count() || position[static_cast<std::size_t>(v)] != -1) {
            throw InputError("vertex order is not a permutation");
        }
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        bool forward = position[static_cast<std::size_t>(edge.u)] < position[static_cast<std::size_t>(edge.v)];
        arcs.push_back(forward ? Arc{e, edge.u, edge.v} : Arc{e, edge.v, edge.u});
    }
    return Orientation(std::vector<Vertex>(order.begin(), order.end()), std::move(arcs));
}

}  // namespace antiramsey
