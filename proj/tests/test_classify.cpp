#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_util.hpp"
#include "fc/classify.hpp"
#include "test_util.hpp"

using namespace fc;
using namespace fc::testutil;

namespace {

// Gadget host: corner edge c1c2 first (so the S node holding it is the root),
// attachments c1-a, c2-b, then the W4 rim/spokes.
MultiGraph gadget_host() {
    MultiGraph g;
    for (int i = 0; i < 7; ++i) g.add_vertex(i);  // 0=c1 1=c2 2=a 3=b 4=t1 5=t2 6=h
    g.add_edge(0, 1, EdgeKind::Real);
    g.add_edge(0, 2, EdgeKind::Real);
    g.add_edge(1, 3, EdgeKind::Real);
    g.add_edge(2, 4, EdgeKind::Real);
    g.add_edge(4, 3, EdgeKind::Real);
    g.add_edge(3, 5, EdgeKind::Real);
    g.add_edge(5, 2, EdgeKind::Real);
    g.add_edge(6, 2, EdgeKind::Real);
    g.add_edge(6, 4, EdgeKind::Real);
    g.add_edge(6, 3, EdgeKind::Real);
    g.add_edge(6, 5, EdgeKind::Real);
    g.set_terminal(4, true);
    g.set_terminal(5, true);
    return g;
}

}  // namespace

TEST_CASE("terminal-free recognition") {
    MultiGraph g = complete(4);
    g.subdivide_edge(0, false);
    SprTree t = spr_tree(g);
    Classifier cls(t);
    for (int i = 0; i < t.size(); ++i) CHECK(cls.is_terminal_free(i));

    // Only-corner terminals stay terminal-free.
    MultiGraph h = complete(4);
    Corners c = spr_tree(h).corners(spr_tree(h).root);
    h.set_terminal(c.c1, true);
    SprTree th = spr_tree(h);
    CHECK(Classifier(th).is_terminal_free(th.root));

    // An interior terminal is not.
    MultiGraph q = complete(4);
    q.set_terminal(3, true);
    SprTree tq = spr_tree(q);
    CHECK_FALSE(Classifier(tq).is_terminal_free(tq.root));
}

TEST_CASE("triangle child with one interior terminal is unproblematic") {
    // K4 minus edge 2-3: P node on {0,1} with two triangle children.
    MultiGraph g = complete(4);
    g.delete_edge(g.edges().rbegin()->first);
    g.set_terminal(2, true);
    SprTree t = spr_tree(g);
    Classifier cls(t);
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].parent < 0) continue;
        Corners c = t.corners(i);
        if (cls.component_terminals(i).count(2) && c.c1 == 0 && c.c2 == 1)
            CHECK(cls.classify(i) == ComponentClass::Unproblematic);
    }
}

TEST_CASE("P child with two terminal-bearing children is not unproblematic but EFC") {
    // Theta with the root forced into the terminal-free path through 4: the P
    // node on {0,1} becomes a child with two terminal-bearing path children.
    MultiGraph g = make_graph(5, {{0, 4}, {4, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
    g.set_terminal(2, true);
    g.set_terminal(3, true);
    SprTree t = spr_tree(g);
    Classifier cls(t);
    bool found = false;
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].type != SprType::P || t.nodes[i].parent < 0) continue;
        CHECK_FALSE(cls.is_unproblematic(i));
        CHECK(cls.is_efc(i));
        CHECK(cls.classify(i) == ComponentClass::SemiProblematic);
        found = true;
    }
    CHECK(found);
}

TEST_CASE("three terminal-bearing P children break EFC") {
    // Four 0-1 paths; root forced into the terminal-free one through 5.
    MultiGraph g = make_graph(6, {{0, 5}, {5, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1},
                                  {0, 4}, {4, 1}});
    g.set_terminal(2, true);
    g.set_terminal(3, true);
    g.set_terminal(4, true);
    SprTree t = spr_tree(g);
    Classifier cls(t);
    bool found = false;
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].type != SprType::P || t.nodes[i].parent < 0) continue;
        CHECK_FALSE(cls.is_efc(i));
        CHECK(cls.classify(i) == ComponentClass::Problematic);
        found = true;
    }
    CHECK(found);
}

TEST_CASE("W4 gadget component is semi-problematic") {
    MultiGraph g = gadget_host();
    SprTree t = spr_tree(g);
    Classifier cls(t);
    bool found = false;
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].parent < 0) continue;
        if (t.nodes[i].type == SprType::R) {
            CHECK(cls.classify(i) == ComponentClass::SemiProblematic);
            CHECK(brute_class(t, i) == ComponentClass::SemiProblematic);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("antipodal octahedron terminals are problematic") {
    // Octahedron: 3-connected, antipodal pairs share no face.
    MultiGraph g = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                                  {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    g.set_terminal(0, true);
    g.set_terminal(5, true);
    SprTree t = spr_tree(g);
    Classifier cls(t);
    CHECK(cls.classify(t.root) == ComponentClass::Problematic);
    CHECK_FALSE(cls.single_face_coverable(t.root));
}

TEST_CASE("empty terminal set is terminal-free everywhere") {
    MultiGraph g = wheel(5);
    SprTree t = spr_tree(g);
    Classifier cls(t);
    CHECK(cls.classify(t.root) == ComponentClass::TerminalFree);
}

TEST_CASE("DP verdicts match brute force over terminal patterns") {
    std::vector<MultiGraph> hosts;
    {
        MultiGraph g = complete(4);
        g.delete_edge(g.edges().rbegin()->first);
        hosts.push_back(g);  // P + triangles
    }
    hosts.push_back(wheel(4));
    {
        MultiGraph g = complete(4);
        g.subdivide_edge(1, false);
        hosts.push_back(g);  // S over an R component
    }
    hosts.push_back(make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
    hosts.push_back(make_graph(6, {{0, 5}, {5, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1},
                                   {0, 4}, {4, 1}}));
    hosts.push_back(cycle(5));
    {
        // Square with both diagonal diamonds: nested P structure.
        hosts.push_back(
            make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}, {1, 5}, {5, 3}}));
    }

    for (const MultiGraph &base : hosts) {
        int n = static_cast<int>(base.num_vertices());
        for (int mask = 0; mask < (1 << n); ++mask) {
            MultiGraph g = base;
            std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) g.set_terminal(vs[b], true);
            SprTree t = spr_tree(g);
            Classifier cls(t);
            for (int i = 0; i < t.size(); ++i) {
                const auto &terms = cls.component_terminals(i);
                CAPTURE(mask);
                CAPTURE(i);
                CHECK(cls.is_unproblematic(i) == brute_unproblematic(t, i, terms));
                CHECK(cls.is_efc(i) == brute_efc(t, i, terms));
                CHECK(cls.single_face_coverable(i) == brute_single_face(t, i, terms));
                CHECK(cls.classify(i) == brute_class(t, i));
            }
        }
    }
}

TEST_CASE("EFC implies single-face coverability for proper components") {
    // Deleting the virtual edge merges the two external faces, so for any
    // node below the root EFC forces a one-face cover of the bare component.
    // (At the root the corner edge is a real edge and stays.)
    std::vector<MultiGraph> hosts = {wheel(4), cycle(6)};
    {
        MultiGraph g = complete(4);
        g.delete_edge(g.edges().rbegin()->first);
        hosts.push_back(g);
    }
    for (const MultiGraph &base : hosts) {
        int n = static_cast<int>(base.num_vertices());
        for (int mask = 0; mask < (1 << n); ++mask) {
            MultiGraph g = base;
            std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) g.set_terminal(vs[b], true);
            SprTree t = spr_tree(g);
            Classifier cls(t);
            for (int i = 0; i < t.size(); ++i)
                if (t.nodes[i].parent >= 0 && cls.is_efc(i))
                    CHECK(cls.single_face_coverable(i));
        }
    }
}
