#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fc/embedding.hpp"
#include "test_util.hpp"

using namespace fc;
using namespace fc::testutil;

TEST_CASE("C4 has two faces, each with all vertices") {
    MultiGraph g = cycle(4);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    FaceSet fs = trace_faces(g, *rot);
    CHECK(fs.faces.size() == 2);
    for (const Face &f : fs.faces) CHECK(f.vertex_set.size() == 4);
}

TEST_CASE("K4 planar rotation has four triangular faces") {
    MultiGraph g = complete(4);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    FaceSet fs = trace_faces(g, *rot);
    CHECK(fs.faces.size() == 4);
    for (const Face &f : fs.faces) CHECK(f.walk.size() == 3);
}

TEST_CASE("transposing one K4 rotation breaks the Euler count") {
    MultiGraph g = complete(4);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    RotationSystem bad = *rot;
    auto &cyc = bad.rot.at(0);
    REQUIRE(cyc.size() == 3);
    std::swap(cyc[0], cyc[1]);
    FaceSet fs = trace_faces(g, bad);
    CHECK(fs.faces.size() == 2);
    CHECK_FALSE(rotation_is_planar(g, bad, fs));
}

TEST_CASE("K5 is non-planar, W4 has five faces") {
    CHECK_FALSE(is_planar(complete(5)));
    MultiGraph w = wheel(4);
    auto rot = planar_embedding(w);
    REQUIRE(rot.has_value());
    CHECK(trace_faces(w, *rot).faces.size() == 5);
}

TEST_CASE("every dart lies on exactly one face") {
    MultiGraph g = wheel(5);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    FaceSet fs = trace_faces(g, *rot);
    std::size_t total = 0;
    for (const Face &f : fs.faces) total += f.walk.size();
    CHECK(total == 2 * g.num_edges());
    CHECK(fs.dart_face.size() == 2 * g.num_edges());
}

TEST_CASE("parallel edges embed as bigons") {
    MultiGraph g;
    g.add_vertex(0);
    g.add_vertex(1);
    g.add_edge(0, 1, EdgeKind::Real);
    g.add_edge(0, 1, EdgeKind::Real);
    g.add_edge(0, 1, EdgeKind::Real);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    FaceSet fs = trace_faces(g, *rot);
    CHECK(fs.faces.size() == 3);
    CHECK(rotation_is_planar(g, *rot, fs));
}

TEST_CASE("flip is an involution") {
    MultiGraph g = complete(4);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    std::set<VertexId> sub = {0, 1, 2, 3};
    RotationSystem once = flip_subembedding(g, *rot, sub, 0, 1);
    RotationSystem twice = flip_subembedding(g, once, sub, 0, 1);
    CHECK(twice.rot == rot->rot);
}

TEST_CASE("flipping the middle path of a theta keeps the face signature") {
    // Three parallel 0-1 paths through 2, 3, 4.
    MultiGraph g = make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    FaceSet before = trace_faces(g, *rot);
    RotationSystem flipped = flip_subembedding(g, *rot, {0, 1, 3}, 0, 1);
    FaceSet after = trace_faces(g, flipped);
    CHECK(face_signature(before) == face_signature(after));
}

TEST_CASE("flip rejects violated attachment condition") {
    MultiGraph g = complete(4);
    auto rot = planar_embedding(g);
    REQUIRE(rot.has_value());
    CHECK_THROWS_AS(flip_subembedding(g, *rot, {0, 1, 2}, 0, 1), StructuralError);
}

TEST_CASE("C4 has exactly one planar rotation") {
    MultiGraph g = cycle(4);
    int count = 0;
    enumerate_planar_rotations(g, 1000, [&](const RotationSystem &) {
        ++count;
        return true;
    });
    CHECK(count == 1);
}

TEST_CASE("all enumerated K4 rotations satisfy Euler") {
    MultiGraph g = complete(4);
    int count = 0;
    enumerate_planar_rotations(g, 1000000, [&](const RotationSystem &rs) {
        FaceSet fs = trace_faces(g, rs);
        CHECK(rotation_is_planar(g, rs, fs));
        CHECK(fs.faces.size() == 4);
        ++count;
        return true;
    });
    CHECK(count == 2);  // unique embedding and its mirror
}

TEST_CASE("budget refusal fires on a degree-6 vertex") {
    MultiGraph g = wheel(6);
    CHECK(planar_rotation_count_bound(g) > 100);
    CHECK_THROWS_AS(
        enumerate_planar_rotations(g, 100, [](const RotationSystem &) { return true; }),
        BudgetError);
}

TEST_CASE("planar embedding of a non-planar verdict cross-checks enumeration") {
    // K5 minus an edge is planar; K5 is not. The enumerator agrees.
    MultiGraph k5 = complete(5);
    bool any = false;
    enumerate_planar_rotations(k5, 1000000, [&](const RotationSystem &) {
        any = true;
        return false;
    });
    CHECK_FALSE(any);

    MultiGraph k5e = complete(5);
    k5e.delete_edge(0);
    CHECK(is_planar(k5e));
    bool found = false;
    enumerate_planar_rotations(k5e, 1000000, [&](const RotationSystem &) {
        found = true;
        return false;
    });
    CHECK(found);
}

TEST_CASE("apex test recognizes cofacial vertex sets") {
    MultiGraph g = complete(4);
    CHECK(cofacial_in_some_embedding(g, {0, 1, 2}));
    CHECK_FALSE(cofacial_in_some_embedding(g, {0, 1, 2, 3}));
    MultiGraph c = cycle(6);
    CHECK(cofacial_in_some_embedding(c, {0, 1, 2, 3, 4, 5}));
}
