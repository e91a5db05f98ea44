#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fc/decomposition.hpp"
#include "fc/embedding.hpp"
#include "test_util.hpp"

using namespace fc;
using namespace fc::testutil;

namespace {

// All face signatures reachable by brute-force rotation enumeration.
std::set<std::vector<std::vector<VertexId>>> rotation_signatures(const MultiGraph &g) {
    std::set<std::vector<std::vector<VertexId>>> out;
    enumerate_planar_rotations(g, 1000000, [&](const RotationSystem &rs) {
        out.insert(face_signature(trace_faces(g, rs)));
        return true;
    });
    return out;
}

std::set<std::vector<std::vector<VertexId>>> spr_signatures(const MultiGraph &g) {
    SprTree t = spr_tree(g);
    std::set<std::vector<std::vector<VertexId>>> out;
    enumerate_embeddings_spr(t, 100000, [&](const RotationSystem &rs) {
        out.insert(face_signature(trace_faces(g, rs)));
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("block cut tree of two triangles sharing a vertex") {
    MultiGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    BlockCutTree bct = block_cut_tree(g);
    CHECK(bct.blocks.size() == 2);
    CHECK(bct.cutvertices == std::set<VertexId>{2});
}

TEST_CASE("block cut tree of a biconnected graph") {
    BlockCutTree bct = block_cut_tree(complete(4));
    CHECK(bct.blocks.size() == 1);
    CHECK(bct.cutvertices.empty());
}

TEST_CASE("block cut tree of P4") {
    MultiGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    BlockCutTree bct = block_cut_tree(g);
    CHECK(bct.blocks.size() == 3);
    CHECK(bct.cutvertices == std::set<VertexId>{1, 2});
}

TEST_CASE("blocks cover all edges and pairwise share at most one vertex") {
    MultiGraph g = make_graph(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5},
                                  {5, 3}, {5, 6}, {6, 7}});
    BlockCutTree bct = block_cut_tree(g);
    std::size_t total = 0;
    for (auto &es : bct.block_edges) total += es.size();
    CHECK(total == g.num_edges());
    for (std::size_t i = 0; i < bct.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < bct.blocks.size(); ++j) {
            std::vector<VertexId> inter;
            std::set_intersection(bct.blocks[i].begin(), bct.blocks[i].end(),
                                  bct.blocks[j].begin(), bct.blocks[j].end(),
                                  std::back_inserter(inter));
            CHECK(inter.size() <= 1);
        }
}

TEST_CASE("K4 decomposes into a single R node") {
    SprTree t = spr_tree(complete(4));
    REQUIRE(t.size() == 1);
    CHECK(t.nodes[0].type == SprType::R);
}

TEST_CASE("C5 decomposes into a single S node") {
    SprTree t = spr_tree(cycle(5));
    REQUIRE(t.size() == 1);
    CHECK(t.nodes[0].type == SprType::S);
}

TEST_CASE("K4 minus an edge is a P node with two triangle children") {
    MultiGraph g = complete(4);
    // Remove edge 2-3 (the last id).
    EdgeId last = g.edges().rbegin()->first;
    g.delete_edge(last);
    SprTree t = spr_tree(g);
    REQUIRE(t.size() == 3);
    int p = 0, s = 0;
    for (const SprNode &n : t.nodes) {
        if (n.type == SprType::P) ++p;
        if (n.type == SprType::S) ++s;
    }
    CHECK(p == 1);
    CHECK(s == 2);
    // Round trip.
    MultiGraph back = induced_graph(t, t.root);
    CHECK(back == g);
}

TEST_CASE("induced graph round-trips through the SPR tree") {
    for (MultiGraph g : {complete(4), cycle(6), wheel(5)}) {
        SprTree t = spr_tree(g);
        CHECK(induced_graph(t, t.root) == g);
    }
    // Theta graph: three 0-1 paths.
    MultiGraph theta = make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    SprTree t = spr_tree(theta);
    CHECK(induced_graph(t, t.root) == theta);
}

TEST_CASE("leaf enhancement equals its skeleton shape") {
    MultiGraph g = complete(4);
    EdgeId last = g.edges().rbegin()->first;
    g.delete_edge(last);  // P node with two triangles
    SprTree t = spr_tree(g);
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].children.empty() && t.nodes[i].parent >= 0) {
            auto [enh, c] = enhancement(t, i);
            CHECK(enh.num_vertices() == 3);
            CHECK(enh.num_edges() == 3);
        }
    }
}

TEST_CASE("enhancement of a triangle child may create a parallel pair") {
    // Triangle 0-1-2 with the 1-2 edge doubled through vertex 3. The P child
    // on {1,2} induces a real triangle; its enhancement has a parallel 1-2
    // pair and exactly 3 faces in its unique embedding.
    MultiGraph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 2}});
    SprTree t = spr_tree(g);
    bool found = false;
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].parent >= 0 && t.nodes[i].type == SprType::P) {
            auto [enh, c] = enhancement(t, i);
            CHECK_FALSE(enh.is_simple());
            auto rot = planar_embedding(enh);
            REQUIRE(rot.has_value());
            CHECK(trace_faces(enh, *rot).faces.size() == 3);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("theta graph yields one distinct face multiset") {
    MultiGraph theta = make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto sigs = spr_signatures(theta);
    CHECK(sigs.size() == 1);
}

TEST_CASE("K4 has a unique face multiset via SPR") {
    auto sigs = spr_signatures(complete(4));
    CHECK(sigs.size() == 1);
}

TEST_CASE("cross-oracle face multiset equality on small biconnected graphs") {
    std::vector<MultiGraph> gs;
    gs.push_back(complete(4));
    gs.push_back(cycle(4));
    gs.push_back(cycle(6));
    gs.push_back(wheel(4));
    gs.push_back(wheel(5));
    {
        MultiGraph g = complete(4);
        g.delete_edge(g.edges().rbegin()->first);
        gs.push_back(g);  // K4 - e
    }
    gs.push_back(make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
    {
        // Two squares sharing an edge.
        gs.push_back(make_graph(6, {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}}));
    }
    {
        // Prism (3-connected).
        gs.push_back(make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                    {0, 3}, {1, 4}, {2, 5}}));
    }
    {
        // K4 with one edge subdivided: mixes S, R structure.
        MultiGraph g = complete(4);
        g.subdivide_edge(0, false);
        gs.push_back(g);
    }
    for (const MultiGraph &g : gs) {
        CAPTURE(g.num_vertices());
        CAPTURE(g.num_edges());
        CHECK(rotation_signatures(g) == spr_signatures(g));
    }
}

TEST_CASE("spr embedding budget refusal") {
    // A dipole-rich graph with large P degree: many parallel paths.
    std::vector<std::pair<int, int>> es;
    for (int i = 2; i < 12; ++i) {
        es.push_back({0, i});
        es.push_back({i, 1});
    }
    MultiGraph g = make_graph(12, es);
    SprTree t = spr_tree(g);
    CHECK(spr_embedding_count(t) > 100);
    CHECK_THROWS_AS(
        enumerate_embeddings_spr(t, 100, [](const RotationSystem &) { return true; }),
        BudgetError);
}

TEST_CASE("spr rejects bad inputs") {
    CHECK_THROWS_AS(spr_tree(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})), StructuralError);
    MultiGraph two;
    two.add_vertex(0);
    two.add_vertex(1);
    two.add_edge(0, 1, EdgeKind::Real);
    CHECK_THROWS_AS(spr_tree(two), StructuralError);
}
