#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fc/embedding.hpp"
#include "fc/multigraph.hpp"
#include "test_util.hpp"

using namespace fc;
using namespace fc::testutil;

TEST_CASE("contract triangle edge leaves a parallel pair") {
    MultiGraph g = cycle(3);
    EdgeId ab = 0;
    g.contract_edge(ab);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 2);
    CHECK_FALSE(g.is_simple());
}

TEST_CASE("contract path edge gives a single edge") {
    MultiGraph g = make_graph(3, {{0, 1}, {1, 2}});
    g.contract_edge(0);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_vertex(0));
    CHECK_FALSE(g.has_vertex(1));
}

TEST_CASE("contract K4 edge stays planar with a parallel pair") {
    MultiGraph g = complete(4);
    g.contract_edge(0);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 5);
    CHECK(is_planar(g));
}

TEST_CASE("contraction merges terminal marks into the smaller id") {
    MultiGraph g = make_graph(3, {{0, 1}, {1, 2}});
    g.set_terminal(1, true);
    g.contract_edge(0);
    CHECK(g.is_terminal(0));
    CHECK(g.terminals().size() == 1);
}

TEST_CASE("subdivide with terminal") {
    MultiGraph g = make_graph(2, {{0, 1}});
    VertexId t = g.subdivide_edge(0, true);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.is_terminal(t));
    CHECK(g.degree(t) == 2);
}

TEST_CASE("subdivide without terminal, twice") {
    MultiGraph g = make_graph(2, {{0, 1}});
    VertexId x = g.subdivide_edge(0, false);
    CHECK_FALSE(g.is_terminal(x));
    auto es = g.incident_edges(x);
    g.subdivide_edge(es.front(), false);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
}

TEST_CASE("mutations preserve planarity on small samples") {
    MultiGraph g = complete(4);
    CHECK(is_planar(g));
    g.subdivide_edge(2, false);
    CHECK(is_planar(g));
    g.contract_edge(0);
    CHECK(is_planar(g));
    g.delete_edge(g.edges().begin()->first);
    CHECK(is_planar(g));
}

TEST_CASE("self loops and bad ids are rejected") {
    MultiGraph g = make_graph(2, {{0, 1}});
    CHECK_THROWS_AS(g.add_edge(0, 0, EdgeKind::Real), StructuralError);
    CHECK_THROWS_AS(g.contract_edge(99), StructuralError);
    CHECK_THROWS_AS(g.subdivide_edge(99, false), StructuralError);
    CHECK_THROWS_AS(g.delete_vertex(0), StructuralError);
}

TEST_CASE("ids are not reused after mutations") {
    MultiGraph g = make_graph(3, {{0, 1}, {1, 2}});
    g.contract_edge(0);
    VertexId v = g.add_vertex();
    CHECK(v >= 3);
    EdgeId e = g.add_edge(0, v, EdgeKind::Real);
    CHECK(e >= 2);
}

TEST_CASE("components and connectivity") {
    MultiGraph g = make_graph(5, {{0, 1}, {2, 3}});
    auto comps = g.components();
    CHECK(comps.size() == 3);
    CHECK_FALSE(g.is_connected());
    CHECK(cycle(5).is_connected());
}

TEST_CASE("edge_subgraph keeps ids and marks") {
    MultiGraph g = cycle(4);
    g.set_terminal(2, true);
    MultiGraph h = g.edge_subgraph({1, 2});
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 2);
    CHECK(h.is_terminal(2));
    CHECK(h.has_edge(1));
    CHECK(h.has_edge(2));
}
