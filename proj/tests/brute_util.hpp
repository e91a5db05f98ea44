#pragma once

// Brute-force reference predicates used by the classification and oracle
// tests. Everything here quantifies over embeddings by explicit enumeration
// and stays independent of the DP implementations it checks.

#include <set>

#include "fc/classify.hpp"
#include "fc/decomposition.hpp"
#include "fc/embedding.hpp"

namespace fc::testutil {

constexpr long long kBruteBudget = 1000000;

inline bool brute_unproblematic(const SprTree &t, int node,
                                const std::set<VertexId> &terms) {
    auto [enh, corners] = enhancement(t, node);
    bool found = false;
    enumerate_planar_rotations(enh, kBruteBudget, [&](const RotationSystem &rs) {
        FaceSet fs = trace_faces(enh, rs);
        for (int f : fs.faces_of_edge(corners.corner_edge)) {
            bool all = true;
            for (VertexId v : terms) all = all && fs.on_face(f, v);
            if (all) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

inline bool brute_efc(const SprTree &t, int node, const std::set<VertexId> &terms) {
    auto [enh, corners] = enhancement(t, node);
    bool found = false;
    enumerate_planar_rotations(enh, kBruteBudget, [&](const RotationSystem &rs) {
        FaceSet fs = trace_faces(enh, rs);
        auto ext = fs.faces_of_edge(corners.corner_edge);
        bool all = true;
        for (VertexId v : terms) {
            bool on = false;
            for (int f : ext) on = on || fs.on_face(f, v);
            all = all && on;
        }
        if (all) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

inline bool brute_single_face(const SprTree &t, int node,
                              const std::set<VertexId> &terms) {
    MultiGraph comp = induced_graph(t, node);
    bool found = false;
    enumerate_planar_rotations(comp, kBruteBudget, [&](const RotationSystem &rs) {
        FaceSet fs = trace_faces(comp, rs);
        for (const Face &f : fs.faces) {
            bool all = true;
            for (VertexId v : terms) all = all && (f.vertex_set.count(v) != 0);
            if (all) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

inline ComponentClass brute_class(const SprTree &t, int node) {
    Classifier cls(t);
    const auto &terms = cls.component_terminals(node);
    if (cls.is_terminal_free(node)) return ComponentClass::TerminalFree;
    if (brute_unproblematic(t, node, terms)) return ComponentClass::Unproblematic;
    if (brute_efc(t, node, terms) && brute_single_face(t, node, terms))
        return ComponentClass::SemiProblematic;
    return ComponentClass::Problematic;
}

}  // namespace fc::testutil
