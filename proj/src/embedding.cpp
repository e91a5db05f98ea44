#include "fc/embedding.hpp"

#include <algorithm>
#include <cassert>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace fc {

bool RotationSystem::valid_for(const MultiGraph &g) const {
    std::set<Dart> seen;
    for (const auto &[v, cyc] : rot) {
        if (!g.has_vertex(v)) return false;
        for (const Dart &d : cyc) {
            if (d.at != v) return false;
            if (!g.has_edge(d.e) || !g.edge(d.e).incident(v)) return false;
            if (!seen.insert(d).second) return false;
        }
    }
    // Every edge contributes exactly one slot at each endpoint.
    for (const auto &[id, ed] : g.edges()) {
        if (!seen.count(Dart{id, ed.u}) || !seen.count(Dart{id, ed.v})) return false;
    }
    std::size_t total = 0;
    for (const auto &[v, cyc] : rot) total += cyc.size();
    return total == 2 * g.num_edges();
}

void RotationSystem::reverse_all() {
    for (auto &[v, cyc] : rot) std::reverse(cyc.begin(), cyc.end());
}

FaceSet trace_faces(const MultiGraph &g, const RotationSystem &rot) {
    if (!rot.valid_for(g)) throw StructuralError("trace_faces: invalid rotation system");
    // Position of each dart inside its vertex cycle.
    std::map<Dart, int> pos;
    for (const auto &[v, cyc] : rot.rot)
        for (int i = 0; i < static_cast<int>(cyc.size()); ++i) pos[cyc[i]] = i;

    FaceSet fs;
    std::set<Dart> used;
    // Deterministic start order: darts sorted by (edge, endpoint).
    std::vector<Dart> all;
    for (const auto &[id, ed] : g.edges()) {
        all.push_back(Dart{id, std::min(ed.u, ed.v)});
        all.push_back(Dart{id, std::max(ed.u, ed.v)});
    }
    std::sort(all.begin(), all.end());

    for (const Dart &start : all) {
        if (used.count(start)) continue;
        Face face;
        Dart d = start;
        do {
            used.insert(d);
            fs.dart_face[d] = static_cast<int>(fs.faces.size());
            face.walk.push_back(d);
            face.vertex_set.insert(d.at);
            face.edge_walk.push_back(d.e);
            // Step: traverse e to the far endpoint, then take the next slot
            // after e's slot there.
            VertexId w = g.edge(d.e).other(d.at);
            const auto &cyc = rot.at(w);
            int i = pos.at(Dart{d.e, w});
            d = cyc[(i + 1) % cyc.size()];
        } while (!(d == start));
        fs.faces.push_back(std::move(face));
    }
    return fs;
}

std::vector<int> FaceSet::faces_of_edge(EdgeId e) const {
    std::set<int> out;
    for (const auto &[d, f] : dart_face)
        if (d.e == e) out.insert(f);
    return {out.begin(), out.end()};
}

bool rotation_is_planar(const MultiGraph &g, const RotationSystem &rot,
                        const FaceSet &fs) {
    long long v = static_cast<long long>(g.num_vertices());
    long long e = static_cast<long long>(g.num_edges());
    long long f = static_cast<long long>(fs.faces.size());
    long long c = static_cast<long long>(g.components().size());
    return v - e + f == 1 + c;
}

bool rotation_is_planar(const MultiGraph &g, const RotationSystem &rot) {
    return rotation_is_planar(g, rot, trace_faces(g, rot));
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

std::optional<RotationSystem> planar_embedding(const MultiGraph &g) {
    if (g.num_vertices() == 0) return RotationSystem{};
    // Work on a simple representative graph; parallel copies are re-inserted
    // beside their representative afterwards.
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> groups;
    for (const auto &[id, ed] : g.edges()) {
        auto key = std::minmax(ed.u, ed.v);
        groups[{key.first, key.second}].push_back(id);
    }

    AdjacencyView adj(g);
    BoostGraph bg(adj.n());
    std::vector<std::pair<VertexId, VertexId>> rep_ends;
    std::vector<EdgeId> rep_edge;
    int eidx = 0;
    for (auto &[key, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        boost::add_edge(adj.vertex_to_idx[key.first], adj.vertex_to_idx[key.second],
                        eidx, bg);
        rep_ends.push_back(key);
        rep_edge.push_back(ids.front());
        ++eidx;
    }

    using EmbeddingStorage = std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
    EmbeddingStorage storage(boost::num_vertices(bg));
    auto emb = boost::make_iterator_property_map(storage.begin(),
                                                 boost::get(boost::vertex_index, bg));
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb);
    if (!ok) return std::nullopt;

    auto eindex = boost::get(boost::edge_index, bg);
    RotationSystem rs;
    for (VertexId v : g.vertices()) rs.rot[v] = {};
    for (int i = 0; i < adj.n(); ++i) {
        VertexId v = adj.idx_to_vertex[i];
        for (auto ed : storage[i]) {
            int k = eindex[ed];
            // Insert the representative, then its parallel copies right after
            // (same spot on both endpoints keeps each bigon planar).
            const auto &ids = groups[{rep_ends[k].first, rep_ends[k].second}];
            if (v == rep_ends[k].first) {
                for (EdgeId id : ids) rs.rot[v].push_back(Dart{id, v});
            } else {
                for (auto it = ids.rbegin(); it != ids.rend(); ++it)
                    rs.rot[v].push_back(Dart{*it, v});
            }
        }
    }
    return rs;
}

bool is_planar(const MultiGraph &g) { return planar_embedding(g).has_value(); }

bool cofacial_in_some_embedding(const MultiGraph &g, const std::set<VertexId> &want) {
    if (want.size() <= 1) return true;
    MultiGraph h = g;
    VertexId apex = h.add_vertex();
    for (VertexId v : want) h.add_edge(apex, v, EdgeKind::Real);
    return is_planar(h);
}

RotationSystem flip_subembedding(const MultiGraph &g, const RotationSystem &rot,
                                 const std::set<VertexId> &sub, VertexId corner1,
                                 VertexId corner2) {
    if (!sub.count(corner1) || !sub.count(corner2))
        throw StructuralError("flip_subembedding: corners must lie in sub");
    // Attachment condition: edges may leave sub only at the corners.
    for (const auto &[id, ed] : g.edges()) {
        bool iu = sub.count(ed.u) != 0, iv = sub.count(ed.v) != 0;
        if (iu != iv) {
            VertexId inside = iu ? ed.u : ed.v;
            if (inside != corner1 && inside != corner2)
                throw StructuralError("flip_subembedding: attachment through non-corner");
        }
    }
    auto edge_in_sub = [&](EdgeId e) {
        const Edge &ed = g.edge(e);
        return sub.count(ed.u) && sub.count(ed.v);
    };
    RotationSystem out = rot;
    for (VertexId v : sub) {
        auto &cyc = out.rot.at(v);
        if (v != corner1 && v != corner2) {
            std::reverse(cyc.begin(), cyc.end());
        } else {
            std::vector<int> idx;
            for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
                if (edge_in_sub(cyc[i].e)) idx.push_back(i);
            std::vector<Dart> vals;
            for (int i : idx) vals.push_back(cyc[i]);
            std::reverse(vals.begin(), vals.end());
            for (std::size_t i = 0; i < idx.size(); ++i) cyc[idx[i]] = vals[i];
        }
    }
    return out;
}

long long planar_rotation_count_bound(const MultiGraph &g) {
    long long total = 1;
    for (VertexId v : g.vertices()) {
        int d = g.degree(v);
        for (int i = 2; i < d; ++i) {
            total *= i;
            if (total > (1LL << 62) / 64) return total;  // already huge
        }
    }
    return total;
}

namespace {

void enumerate_rotations_rec(const MultiGraph &g, std::vector<VertexId> &order,
                             std::size_t vi, RotationSystem &current,
                             const std::function<bool(const RotationSystem &)> &visit,
                             bool &keep_going) {
    if (!keep_going) return;
    if (vi == order.size()) {
        if (rotation_is_planar(g, current)) {
            if (!visit(current)) keep_going = false;
        }
        return;
    }
    VertexId v = order[vi];
    std::vector<Dart> slots;
    for (EdgeId e : g.incident_edges(v)) slots.push_back(Dart{e, v});
    std::sort(slots.begin(), slots.end());
    if (slots.size() <= 2) {
        current.rot[v] = slots;
        enumerate_rotations_rec(g, order, vi + 1, current, visit, keep_going);
        return;
    }
    // Fix the first slot; permute the rest lexicographically.
    std::vector<Dart> rest(slots.begin() + 1, slots.end());
    std::sort(rest.begin(), rest.end());
    do {
        current.rot[v].clear();
        current.rot[v].push_back(slots.front());
        current.rot[v].insert(current.rot[v].end(), rest.begin(), rest.end());
        enumerate_rotations_rec(g, order, vi + 1, current, visit, keep_going);
        if (!keep_going) return;
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

void enumerate_planar_rotations(const MultiGraph &g, long long slot_budget,
                                const std::function<bool(const RotationSystem &)> &visit) {
    if (!g.is_connected())
        throw StructuralError("enumerate_planar_rotations: graph must be connected");
    long long bound = planar_rotation_count_bound(g);
    if (bound > slot_budget)
        throw BudgetError("enumerate_planar_rotations: budget exceeded (" +
                          std::to_string(bound) + " > " + std::to_string(slot_budget) + ")");
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    RotationSystem current;
    bool keep_going = true;
    enumerate_rotations_rec(g, order, 0, current, visit, keep_going);
}

std::vector<std::vector<VertexId>> face_signature(const FaceSet &fs) {
    std::vector<std::vector<VertexId>> sig;
    for (const Face &f : fs.faces) {
        std::vector<VertexId> verts;
        for (const Dart &d : f.walk) verts.push_back(d.at);
        std::sort(verts.begin(), verts.end());
        sig.push_back(std::move(verts));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace fc
