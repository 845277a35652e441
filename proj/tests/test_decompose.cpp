#include <doctest.h>

#include <random>
#include <set>

#include "antiramsey/decompose.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"
#include "support.hpp"

using namespace antiramsey;
using namespace antiramsey::testing;

namespace {

Orientation random_forward_orientation(std::mt19937_64& rng, const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return orient_by_ordering(g, order);
}

// K_{a,b} with every arc from the a side (0..a-1) to the b side.
Orientation complete_bipartite_forward(int a, int b) {
    std::vector<Edge> edges;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y) edges.push_back({x, a + y});
    Graph g(a + b, edges);
    std::vector<Vertex> order(static_cast<std::size_t>(a + b));
    std::iota(order.begin(), order.end(), 0);
    return orient_by_ordering(g, order);
}

void check_peel_contract(const Orientation& j, int d, const Rational& mu, const PeelResult& r) {
    Graph g = j.underlying();
    std::set<EdgeId> forest(r.forest.begin(), r.forest.end());
    CHECK(forest.size() == r.saturated.size());
    std::vector<int> out(static_cast<std::size_t>(j.vertex_count()), 0);
    std::vector<int> in(static_cast<std::size_t>(j.vertex_count()), 0);
    std::vector<EdgeId> host_ids;
    for (const Arc& a : j.arcs()) {
        if (!forest.count(a.edge)) continue;
        ++out[static_cast<std::size_t>(a.tail)];
        ++in[static_cast<std::size_t>(a.head)];
    }
    for (Vertex v = 0; v < j.vertex_count(); ++v) {
        CHECK(out[static_cast<std::size_t>(v)] <= 1);
        CHECK(in[static_cast<std::size_t>(v)] <= r.copies);
        CHECK(out[static_cast<std::size_t>(v)] + in[static_cast<std::size_t>(v)] <=
              (Rational(d) / (Rational(d) - mu)).ceil());
    }
    CHECK(r.copies == (mu / (Rational(d) - mu)).ceil());
    CHECK(r.remainder.max_out_degree() == d - 1);
    CHECK(r.remainder.arc_count() + static_cast<int>(forest.size()) == j.arc_count());
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("saturating matching agrees with Hall's condition") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 400; ++t) {
        int left = 1 + static_cast<int>(rng() % 8);
        int right = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
        for (auto& row : adj)
            for (int r = 0; r < right; ++r)
                if (rng() % 3 == 0) row.push_back(r);
        BipartiteMatching m = saturating_matching(left, right, adj);
        CHECK(m.saturating() == hall_holds(left, adj));
        if (m.saturating()) {
            std::set<int> used;
            for (int u = 0; u < left; ++u) {
                int p = m.partner[static_cast<std::size_t>(u)];
                REQUIRE(p >= 0);
                CHECK(std::find(adj[static_cast<std::size_t>(u)].begin(), adj[static_cast<std::size_t>(u)].end(), p) !=
                      adj[static_cast<std::size_t>(u)].end());
                CHECK(used.insert(p).second);
            }
        } else {
            std::set<int> nbrs;
            for (int u : m.hall_violator) nbrs.insert(adj[static_cast<std::size_t>(u)].begin(), adj[static_cast<std::size_t>(u)].end());
            CHECK(nbrs.size() < m.hall_violator.size());
        }
    }
}

TEST_CASE("peel a single arc") {
    Graph g = graph_from(2, {{0, 1}});
    Orientation j = orient_by_ordering(g, std::vector<Vertex>{0, 1});
    PeelResult r = peel_layer(j, 1, Rational(1, 2));
    CHECK(r.forest == std::vector<EdgeId>{0});
    CHECK(r.copies == 1);
    CHECK(r.remainder.arc_count() == 0);
}

TEST_CASE("peel the top layer of a forward K4") {
    Orientation j = orient_by_ordering(complete_graph(4), std::vector<Vertex>{0, 1, 2, 3});
    PeelResult r = peel_layer(j, 3, Rational(3, 2));
    CHECK(r.copies == 1);
    CHECK(r.saturated == std::vector<Vertex>{0});
    REQUIRE(r.forest.size() == 1);
    check_peel_contract(j, 3, Rational(3, 2), r);
}

TEST_CASE("peel a star oriented away from its centre") {
    Graph star = star_graph(3);
    std::vector<Vertex> order{0, 1, 2, 3};
    Orientation j = orient_by_ordering(star, order);
    REQUIRE(j.max_out_degree() == 3);
    PeelResult r = peel_layer(j, 3, max_density(star).value);
    CHECK(r.copies == 1);
    CHECK(r.forest.size() == 1);
    CHECK(r.remainder.max_out_degree() == 2);
}

TEST_CASE("peel preconditions") {
    Orientation j = orient_by_ordering(complete_graph(4), std::vector<Vertex>{0, 1, 2, 3});
    CHECK_THROWS_AS(peel_layer(j, 2, Rational(1)), InputError);
    CHECK_THROWS_AS(peel_layer(j, 3, Rational(3)), InputError);
    CHECK_THROWS_AS(peel_layer(j, 3, Rational(-1)), InputError);
}

TEST_CASE("peel fuzz with mu = m(J)") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_nonempty_graph(rng, 2, 14);
        Orientation j = random_forward_orientation(rng, g);
        int d = j.max_out_degree();
        Rational mu = max_density(g).value;
        REQUIRE(Rational(d) > mu);
        PeelResult r = peel_layer(j, d, mu);
        check_peel_contract(j, d, mu, r);
    }
}

TEST_CASE("a Hall failure certifies a subgraph denser than mu") {
    // K_{5,2} directed 5 -> 2: d = 2, m = 10/7; with mu = 1/2 only one copy
    // of each head exists and five tails compete for two slots
    Orientation j = complete_bipartite_forward(5, 2);
    try {
        peel_layer(j, 2, Rational(1, 2));
        FAIL("expected DensityViolation");
    } catch (const DensityViolation& e) {
        CHECK(e.copies() == 1);
        CHECK(static_cast<int>(e.out_neighbourhood().size()) * e.copies() < static_cast<int>(e.hall_set().size()));
        CHECK(e.witnessed_density() > Rational(1, 2));
        std::vector<Vertex> span = e.hall_set();
        span.insert(span.end(), e.out_neighbourhood().begin(), e.out_neighbourhood().end());
        CHECK(subgraph_density(j.underlying(), span) == e.witnessed_density());
    }
    // with the true density there is room for everyone
    CHECK_NOTHROW(peel_layer(j, 2, max_density(j.underlying()).value));
}

TEST_CASE("decomposition of named graphs") {
    Decomposition edge = degenerate_decomposition(graph_from(2, {{0, 1}}));
    CHECK(edge.m_value == Rational(1, 2));
    CHECK(edge.k == 0);
    CHECK(edge.K == 1);
    CHECK(edge.forests.at(1) == std::vector<EdgeId>{0});
    CHECK(edge.residual.empty());

    Graph k4 = complete_graph(4);
    Decomposition d4 = degenerate_decomposition(k4);
    CHECK(d4.m_value == Rational(3, 2));
    CHECK(d4.k == 1);
    CHECK(d4.K == 3);
    CHECK(d4.forests.size() == 2);
    CHECK(edge_subgraph(k4, d4.forests.at(3)).max_degree() <= layer_degree_bound(3, d4.m_value));
    CHECK(layer_degree_bound(3, d4.m_value) == 2);
    CHECK(layer_degree_bound(2, d4.m_value) == 4);
    CHECK(is_forest(edge_subgraph(k4, d4.residual)));
    CHECK(verify_decomposition(k4, d4).passed());

    Graph k40 = complete_graph(40);
    Decomposition d40 = degenerate_decomposition(k40);
    CHECK(d40.k == 19);
    CHECK(d40.K == 39);
    CHECK(d40.forests.size() == 20);
    CHECK(exact_degeneracy(edge_subgraph(k40, lower_part(k40, d40, 19))) <= 19);
    CHECK(verify_decomposition(k40, d40).passed());
}

TEST_CASE("empty layers pass vacuously") {
    // K_{2,6}: m = 3/2 so layers F_3 and F_2 exist, but the graph is 2-degenerate
    std::vector<Edge> edges;
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 8; ++b) edges.push_back({a, b});
    Graph g(8, edges);
    Decomposition d = degenerate_decomposition(g);
    CHECK(d.K == 3);
    CHECK(d.forests.at(3).empty());
    Report r = verify_decomposition(g, d);
    CHECK(r.passed());
    REQUIRE(r.find("forest[F_3]") != nullptr);
    CHECK(r.find("forest[F_3]")->details == "empty layer");
}

TEST_CASE("random decompositions verify, with either mu") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 150; ++t) {
        Graph g = random_nonempty_graph(rng, 2, 24);
        for (bool tight : {false, true}) {
            Decomposition d = degenerate_decomposition(g, {tight});
            Report r = verify_decomposition(g, d);
            for (const auto* f : r.failures()) FAIL_CHECK(f->check << ": " << f->details);
        }
    }
}

TEST_CASE("decomposition is deterministic") {
    std::mt19937_64 rng(5);
    Graph g = random_graph(rng, 30, 0.4);
    Decomposition a = degenerate_decomposition(g);
    Decomposition b = degenerate_decomposition(g);
    CHECK(a.forests == b.forests);
    CHECK(a.residual == b.residual);
    CHECK(a.order == b.order);
}

TEST_CASE("tampering is caught by the named clause") {
    Graph k4 = complete_graph(4);
    Decomposition d = degenerate_decomposition(k4);

    Decomposition twice = d;
    twice.forests.at(2).push_back(twice.forests.at(3).front());
    CHECK(verify_decomposition(k4, twice).find("partition")->status == CheckStatus::fail);

    Decomposition missing = d;
    missing.residual.pop_back();
    CHECK(verify_decomposition(k4, missing).find("partition")->status == CheckStatus::fail);

    Decomposition wrong_m = d;
    wrong_m.m_value = Rational(2);
    CHECK(verify_decomposition(k4, wrong_m).find("m_value")->status == CheckStatus::fail);

    // the whole graph as F_3: not a forest, degree too high
    Decomposition lumped = d;
    lumped.forests.at(3) = {0, 1, 2, 3, 4, 5};
    lumped.forests.at(2).clear();
    lumped.residual.clear();
    Report r = verify_decomposition(k4, lumped);
    CHECK(r.find("forest[F_3]")->status == CheckStatus::fail);
    CHECK(r.find("bounded[F_3]")->status == CheckStatus::fail);
    CHECK(r.find("degenerate[B_2]")->status == CheckStatus::fail);
}

TEST_CASE("edgeless input is rejected") {
    CHECK_THROWS_AS(degenerate_decomposition(Graph(3)), InputError);
}

}
