#include <doctest.h>

#include <random>

#include "antiramsey/errors.hpp"
#include "antiramsey/graph.hpp"
#include "support.hpp"

using namespace antiramsey;
using namespace antiramsey::testing;

TEST_SUITE("graph") {

TEST_CASE("parse edge lists") {
    Graph g = parse_graph("0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    Graph empty = parse_graph("");
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph header = parse_graph("# a comment\nn 5\n0 1 # trailing\n");
    CHECK(header.vertex_count() == 5);
    CHECK(header.edge_count() == 1);
}

TEST_CASE("malformed input is rejected with a line number") {
    CHECK_THROWS_AS(parse_graph("0 1\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("1 0\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("0 -1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 5\n"), InputError);
    try {
        parse_graph("0 1\n1 x\n");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("format and parse round trip") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(rng, 1 + t % 12, 0.4);
        Graph back = parse_graph(format_graph(g));
        CHECK(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(back.edge(e) == g.edge(e));
    }
}

TEST_CASE("degeneracy of small families") {
    CHECK(exact_degeneracy(complete_graph(4)) == 3);
    CHECK(exact_degeneracy(complete_graph(5)) == 4);
    CHECK(exact_degeneracy(cycle_graph(5)) == 2);
    CHECK(exact_degeneracy(star_graph(5)) == 1);
    CHECK(exact_degeneracy(path_graph(6)) == 1);
    CHECK(exact_degeneracy(Graph(4)) == 0);
    CHECK(exact_degeneracy(Graph()) == 0);
}

TEST_CASE("degeneracy ordering matches the subset oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_graph(rng, 1 + t % 12, 0.1 + 0.8 * (t % 7) / 6.0);
        DegeneracyOrdering ord = degeneracy_ordering(g);
        CHECK(ord.degeneracy == naive_degeneracy(g));
        Orientation o = orient_by_ordering(g, ord.order);
        CHECK(o.max_out_degree() == ord.degeneracy);
        for (const Arc& a : o.arcs()) CHECK(o.position(a.tail) < o.position(a.head));
    }
}

TEST_CASE("orientation of K4 and a single edge") {
    Graph k4 = complete_graph(4);
    Orientation o = orient_by_ordering(k4, std::vector<Vertex>{0, 1, 2, 3});
    CHECK(o.out_degree(0) == 3);
    CHECK(o.out_degree(1) == 2);
    CHECK(o.out_degree(2) == 1);
    CHECK(o.out_degree(3) == 0);
    CHECK(o.in_degree(3) == 3);

    Graph edge = graph_from(2, {{0, 1}});
    Orientation rev = orient_by_ordering(edge, std::vector<Vertex>{1, 0});
    CHECK(rev.out_degree(1) == 1);
    CHECK(rev.out_degree(0) == 0);
    CHECK(rev.arcs()[0].tail == 1);

    CHECK_THROWS_AS(orient_by_ordering(edge, std::vector<Vertex>{0, 0}), InputError);
    CHECK_THROWS_AS(Orientation({0, 1}, {Arc{0, 1, 0}}), InputError);
}

TEST_CASE("out-degree at most one gives a forest") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(rng, 2 + t % 10, 0.5);
        std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        Orientation o = orient_by_ordering(g, order);
        std::vector<EdgeId> keep;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (o.out_degree(v) > 0) keep.push_back(o.arcs()[static_cast<std::size_t>(o.out_arcs(v)[0])].edge);
        CHECK(is_forest(edge_subgraph(g, keep)));
    }
}

TEST_CASE("forest detection") {
    CHECK(is_forest(path_graph(4)));
    CHECK_FALSE(is_forest(complete_graph(3)));
    CHECK(is_forest(Graph(3)));
    CHECK(is_forest(star_graph(6)));
}

TEST_CASE("subgraph helpers") {
    Graph k4 = complete_graph(4);
    InducedSubgraph s = induced_subgraph(k4, {3, 1, 2});
    CHECK(s.graph.vertex_count() == 3);
    CHECK(s.graph.edge_count() == 3);
    CHECK(s.original == std::vector<Vertex>{1, 2, 3});
    std::vector<Vertex> verts{0, 1};
    CHECK(induced_edge_count(k4, verts) == 1);
    std::vector<EdgeId> ids{0, 2};
    Graph sub = edge_subgraph(k4, ids);
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.edge(1) == k4.edge(2));
}

TEST_CASE("orientation without removes arcs but keeps the order") {
    Graph k4 = complete_graph(4);
    Orientation o = orient_by_ordering(k4, std::vector<Vertex>{2, 0, 3, 1});
    std::vector<EdgeId> drop{0, 1};
    Orientation rest = o.without(drop);
    CHECK(rest.arc_count() == 4);
    CHECK(rest.position(2) == 0);
    for (const Arc& a : rest.arcs()) CHECK((a.edge != 0 && a.edge != 1));
    CHECK(rest.underlying().edge_count() == 4);
}

}
