#include "fc/classify.hpp"

#include <algorithm>

#include "fc/embedding.hpp"

namespace fc {

const char *to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::TerminalFree: return "terminal-free";
        case ComponentClass::Unproblematic: return "unproblematic";
        case ComponentClass::SemiProblematic: return "semi-problematic";
        case ComponentClass::Problematic: return "problematic";
    }
    return "?";
}

Classifier::Classifier(const SprTree &t) : t_(t) {
    // Terminal sets bottom-up: own skeleton marks plus children.
    std::vector<int> order = t.subtree(t.root);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int idx = *it;
        std::set<VertexId> ts(t.nodes[idx].skeleton.terminals().begin(),
                              t.nodes[idx].skeleton.terminals().end());
        for (int c : t.nodes[idx].children)
            ts.insert(terminals_[c].begin(), terminals_[c].end());
        terminals_[idx] = std::move(ts);
    }
}

const std::set<VertexId> &Classifier::component_terminals(int node) const {
    return terminals_.at(node);
}

bool Classifier::node_has_interior_terminal(int node) const {
    Corners c = t_.corners(node);
    for (VertexId v : terminals_.at(node))
        if (v != c.c1 && v != c.c2) return true;
    return false;
}

bool Classifier::is_terminal_free(int node) const {
    return !node_has_interior_terminal(node);
}

bool Classifier::is_unproblematic(int node) const {
    auto it = unprob_.find(node);
    if (it != unprob_.end()) return it->second;

    const SprNode &n = t_.nodes[node];
    bool ok = true;
    for (int c : n.children) ok = ok && is_unproblematic(c);

    if (ok) {
        switch (n.type) {
            case SprType::S:
                // Every skeleton vertex lies on both external faces of the
                // ring, so unproblematic children are the whole condition.
                break;
            case SprType::P: {
                int bearing = 0;
                for (int c : n.children)
                    if (node_has_interior_terminal(c)) ++bearing;
                ok = bearing <= 1;
                break;
            }
            case SprType::R: {
                Corners corner = t_.corners(node);
                FaceSet fs = trace_faces(n.skeleton, *planar_embedding(n.skeleton));
                auto ext = fs.faces_of_edge(corner.corner_edge);
                bool any = false;
                for (int f : ext) {
                    bool fits = true;
                    for (VertexId v : n.skeleton.terminals())
                        fits = fits && fs.on_face(f, v);
                    std::set<EdgeId> walk(fs.faces[f].edge_walk.begin(),
                                          fs.faces[f].edge_walk.end());
                    for (int c : n.children)
                        if (node_has_interior_terminal(c))
                            fits = fits && walk.count(t_.nodes[c].parent_side_edge);
                    any = any || fits;
                }
                ok = any;
                break;
            }
        }
    }
    unprob_[node] = ok;
    return ok;
}

bool Classifier::is_efc(int node) const {
    auto it = efc_.find(node);
    if (it != efc_.end()) return it->second;

    const SprNode &n = t_.nodes[node];
    bool ok = true;
    switch (n.type) {
        case SprType::S:
            for (int c : n.children) ok = ok && is_efc(c);
            break;
        case SprType::P: {
            int bearing = 0;
            for (int c : n.children) {
                ok = ok && is_unproblematic(c);
                if (node_has_interior_terminal(c)) ++bearing;
            }
            ok = ok && bearing <= 2;
            break;
        }
        case SprType::R: {
            for (int c : n.children) ok = ok && is_unproblematic(c);
            if (ok) {
                Corners corner = t_.corners(node);
                FaceSet fs = trace_faces(n.skeleton, *planar_embedding(n.skeleton));
                auto ext = fs.faces_of_edge(corner.corner_edge);
                std::set<EdgeId> walk;
                for (int f : ext)
                    walk.insert(fs.faces[f].edge_walk.begin(), fs.faces[f].edge_walk.end());
                for (VertexId v : n.skeleton.terminals()) {
                    bool on = false;
                    for (int f : ext) on = on || fs.on_face(f, v);
                    ok = ok && on;
                }
                for (int c : n.children)
                    if (node_has_interior_terminal(c))
                        ok = ok && walk.count(t_.nodes[c].parent_side_edge);
            }
            break;
        }
    }
    efc_[node] = ok;
    return ok;
}

bool Classifier::single_face_coverable(int node) const {
    auto it = sfc_.find(node);
    if (it != sfc_.end()) return it->second;
    MultiGraph comp = induced_graph(t_, node);
    bool ok = cofacial_in_some_embedding(comp, terminals_.at(node));
    sfc_[node] = ok;
    return ok;
}

ComponentClass Classifier::classify(int node, int /*k*/) const {
    if (is_terminal_free(node)) return ComponentClass::TerminalFree;
    if (is_unproblematic(node)) return ComponentClass::Unproblematic;
    if (is_efc(node) && single_face_coverable(node))
        return ComponentClass::SemiProblematic;
    return ComponentClass::Problematic;
}

ComponentClass classify(const SprTree &t, int node, int k) {
    return Classifier(t).classify(node, k);
}

}  // namespace fc
