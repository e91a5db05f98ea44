#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fc/multigraph.hpp"

namespace fc {

// A dart is one end of an edge: the slot of edge `e` at vertex `at`.
struct Dart {
    EdgeId e = -1;
    VertexId at = -1;

    bool operator==(const Dart &o) const { return e == o.e && at == o.at; }
    bool operator<(const Dart &o) const {
        return e != o.e ? e < o.e : at < o.at;
    }
};

// Cyclic order of darts around each vertex. A rotation system fixes a
// combinatorial embedding; it is planar iff Euler's count holds per component.
struct RotationSystem {
    std::map<VertexId, std::vector<Dart>> rot;

    const std::vector<Dart> &at(VertexId v) const { return rot.at(v); }
    bool valid_for(const MultiGraph &g) const;
    void reverse_all();
};

struct Face {
    std::vector<Dart> walk;          // directed slots in order
    std::set<VertexId> vertex_set;   // distinct vertices on the boundary
    std::vector<EdgeId> edge_walk;   // edges in walk order (with repeats)
};

struct FaceSet {
    std::vector<Face> faces;

    int face_of(const Dart &d) const { return dart_face.at(d); }
    bool on_face(int f, VertexId v) const { return faces[f].vertex_set.count(v) != 0; }
    // Faces whose boundary uses edge e (one or two, in ascending index order).
    std::vector<int> faces_of_edge(EdgeId e) const;

    std::map<Dart, int> dart_face;
};

// Walks every directed slot exactly once; deterministic (starts from the
// smallest unused dart). Works on any rotation system, planar or not.
FaceSet trace_faces(const MultiGraph &g, const RotationSystem &rot);

// Euler characterization for a rotation system: planar iff
// |V| - |E| + |F| = 1 + #components per the whole graph.
bool rotation_is_planar(const MultiGraph &g, const RotationSystem &rot);
bool rotation_is_planar(const MultiGraph &g, const RotationSystem &rot,
                        const FaceSet &fs);

// Boyer-Myrvold planarity with embedding extraction; parallel edges are
// inserted next to a retained representative. Returns nullopt when non-planar.
std::optional<RotationSystem> planar_embedding(const MultiGraph &g);
bool is_planar(const MultiGraph &g);

// True iff some planar embedding of g has one face whose boundary contains
// all of `want` (the standard apex test: g plus a vertex joined to `want`).
bool cofacial_in_some_embedding(const MultiGraph &g, const std::set<VertexId> &want);

// Reverses the rotations of sub's interior; at the two corners only the slots
// of edges inside sub are reversed in place.
RotationSystem flip_subembedding(const MultiGraph &g, const RotationSystem &rot,
                                 const std::set<VertexId> &sub, VertexId corner1,
                                 VertexId corner2);

// Streams every planar rotation system of a connected graph exactly once in
// deterministic order. Throws BudgetError when prod (deg-1)! exceeds budget.
// The visitor may return false to stop early.
void enumerate_planar_rotations(const MultiGraph &g, long long slot_budget,
                                const std::function<bool(const RotationSystem &)> &visit);

long long planar_rotation_count_bound(const MultiGraph &g);

// Canonical signature of an embedding: sorted multiset of per-face boundary
// vertex multisets. Mirror images share a signature.
std::vector<std::vector<VertexId>> face_signature(const FaceSet &fs);

}  // namespace fc
