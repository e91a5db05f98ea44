#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fc/harness.hpp"
#include "fc/io.hpp"
#include "fc/kernelize.hpp"
#include "fc/oracle.hpp"
#include "test_util.hpp"

using namespace fc;
using namespace fc::testutil;

TEST_CASE("generator is deterministic per seed") {
    GenParams p;
    p.seed = 99;
    p.n = 10;
    p.density = 0.8;
    p.terminal_fraction = 0.5;
    Instance a = gen_planar(p);
    Instance b = gen_planar(p);
    CHECK(a.graph == b.graph);
    CHECK(serialize_instance(a) == serialize_instance(b));
}

TEST_CASE("full density yields a maximal planar graph") {
    GenParams p;
    p.seed = 5;
    p.n = 10;
    p.density = 1.0;
    Instance inst = gen_planar(p);
    CHECK(inst.graph.num_edges() == 24);  // 3n - 6
    CHECK(inst.graph.is_simple());
    CHECK(is_planar(inst.graph));
}

TEST_CASE("zero terminal fraction gives fcn zero") {
    GenParams p;
    p.seed = 7;
    p.n = 9;
    p.density = 0.7;
    p.terminal_fraction = 0;
    Instance inst = gen_planar(p);
    CHECK(inst.graph.terminals().empty());
    CHECK(fcn_exact(inst.graph) == 0);
}

TEST_CASE("generator output always validates") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 3 + static_cast<int>(seed % 10);
        p.density = 0.4 + 0.08 * (seed % 8);
        p.terminal_fraction = 0.5;
        Instance inst = gen_planar(p);
        CHECK(inst.graph.is_simple());
        CHECK(is_planar(inst.graph));
    }
}

TEST_CASE("instance round-trip is identity on canonical files") {
    GenParams p;
    p.seed = 11;
    p.n = 8;
    p.density = 0.75;
    p.terminal_fraction = 0.4;
    p.k = 2;
    Instance inst = gen_planar(p);
    std::string text = serialize_instance(inst);
    std::istringstream in(text);
    Instance back = parse_instance(in);
    CHECK(serialize_instance(back) == text);
    CHECK(back.k == inst.k);
    CHECK(back.graph.num_vertices() == inst.graph.num_vertices());
    CHECK(back.graph.num_edges() == inst.graph.num_edges());
    CHECK(back.graph.terminals().size() == inst.graph.terminals().size());
}

TEST_CASE("parser rejects malformed input") {
    auto bad = [](const std::string &text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_instance(in), ParseError);
    };
    bad("e 1 2\n");
    bad("p facecover 2 1 0 1\ne 2 1\n");
    bad("p facecover 2 2 0 1\ne 1 2\ne 1 2\n");
    bad("p facecover 2 1 0 1\ne 1 3\n");
    bad("p facecover 2 0 1 1\nt 5\n");
    bad("p facecover 2 1 0 1\n");
    bad("x nonsense\n");
}

TEST_CASE("comments are ignored") {
    std::istringstream in("c header\np facecover 3 3 1 1\nc mid\ne 1 2\ne 2 3\ne 1 3\nt 2\n");
    Instance inst = parse_instance(in);
    CHECK(inst.graph.num_vertices() == 3);
    CHECK(inst.graph.num_edges() == 3);
    CHECK(inst.graph.terminals().size() == 1);
}

TEST_CASE("trace json carries rules and hints") {
    Instance inst;
    inst.graph = complete(4);
    for (VertexId v : inst.graph.vertices()) inst.graph.set_terminal(v, true);
    inst.k = 2;
    KernelizeResult res = kernelize(inst);
    std::string j = trace_json(res);
    CHECK(j.find("rules_fired") != std::string::npos);
    CHECK(j.find("decision_hint") != std::string::npos);
    CHECK(j.find("kernel_size") != std::string::npos);
}

TEST_CASE("spr dot export mentions every node") {
    MultiGraph g = complete(4);
    g.delete_edge(g.edges().rbegin()->first);
    SprTree t = spr_tree(g);
    std::string dot = spr_dot(t);
    for (int i = 0; i < t.size(); ++i)
        CHECK(dot.find("cluster_" + std::to_string(i)) != std::string::npos);
}

TEST_CASE("smoke suites pass") {
    SuiteReport gadget = run_suite("gadget");
    CHECK(gadget.pass);
    SuiteReport counting = run_suite("counting");
    CHECK(counting.pass);
    SuiteReport decision = run_suite("decision-smoke");
    CAPTURE(decision.detail);
    CHECK(decision.pass);
}
