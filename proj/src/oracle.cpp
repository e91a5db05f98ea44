#include "fc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>

namespace fc {

namespace {

// Exact minimum set cover by branch and bound over at most 64 elements.
struct CoverSolver {
    std::vector<uint64_t> masks;   // per face, restricted to required elements
    std::vector<int> face_ids;
    uint64_t full = 0;
    int best = kInf;
    std::vector<int> best_sel;
    std::vector<int> cur;

    void run(uint64_t covered, int used) {
        if (used >= best) return;
        if ((covered & full) == full) {
            best = used;
            best_sel = cur;
            return;
        }
        // Branch on the uncovered element with the fewest candidate faces.
        int pick = -1, pick_count = -1;
        uint64_t rest = full & ~covered;
        for (int e = 0; e < 64; ++e) {
            if (!(rest & (1ULL << e))) continue;
            int cnt = 0;
            for (std::size_t f = 0; f < masks.size(); ++f)
                if (masks[f] & (1ULL << e)) ++cnt;
            if (pick < 0 || cnt < pick_count) {
                pick = e;
                pick_count = cnt;
            }
        }
        if (pick < 0 || pick_count == 0) return;
        for (std::size_t f = 0; f < masks.size(); ++f) {
            if (!(masks[f] & (1ULL << pick))) continue;
            cur.push_back(static_cast<int>(f));
            run(covered | masks[f], used + 1);
            cur.pop_back();
        }
    }
};

CoverResult cover_over(const FaceSet &fs, const std::set<VertexId> &required,
                       const std::vector<int> &pool, const std::vector<int> &preset) {
    CoverResult res;
    std::vector<VertexId> elems;
    std::set<VertexId> covered_by_preset;
    for (int f : preset)
        for (VertexId v : fs.faces[f].vertex_set)
            if (required.count(v)) covered_by_preset.insert(v);
    for (VertexId v : required)
        if (!covered_by_preset.count(v)) elems.push_back(v);
    if (elems.size() > 64)
        throw BudgetError("embedded_fcn: more than 64 required terminals");

    CoverSolver solver;
    for (std::size_t i = 0; i < elems.size(); ++i) solver.full |= 1ULL << i;
    for (int f : pool) {
        uint64_t m = 0;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (fs.faces[f].vertex_set.count(elems[i])) m |= 1ULL << i;
        solver.masks.push_back(m);
        solver.face_ids.push_back(f);
    }
    solver.run(0, 0);
    if (solver.best >= kInf) return res;  // UNSAT
    res.size = static_cast<int>(preset.size()) + solver.best;
    res.faces = preset;
    for (int f : solver.best_sel) res.faces.push_back(solver.face_ids[f]);
    std::sort(res.faces.begin(), res.faces.end());
    return res;
}

}  // namespace

CoverResult embedded_fcn(const FaceSet &fs, const std::set<VertexId> &required,
                         const std::vector<int> &externals, int exact_external) {
    std::vector<int> all_faces(fs.faces.size());
    for (std::size_t i = 0; i < all_faces.size(); ++i) all_faces[i] = static_cast<int>(i);

    if (exact_external < 0) {
        CoverResult r = cover_over(fs, required, all_faces, {});
        for (int f : r.faces)
            if (std::find(externals.begin(), externals.end(), f) != externals.end())
                ++r.external_used;
        return r;
    }

    std::vector<int> internal;
    for (int f : all_faces)
        if (std::find(externals.begin(), externals.end(), f) == externals.end())
            internal.push_back(f);

    CoverResult best;
    auto consider = [&](const std::vector<int> &preset) {
        CoverResult r = cover_over(fs, required, internal, preset);
        r.external_used = static_cast<int>(preset.size());
        if (r.size < best.size ||
            (r.size == best.size && r.size < kInf && r.faces < best.faces))
            best = r;
    };
    if (exact_external == 0) {
        consider({});
    } else if (exact_external == 1) {
        for (int f : externals) consider({f});
    } else if (exact_external == 2) {
        if (externals.size() >= 2) consider({externals[0], externals[1]});
    }
    return best;
}

namespace {

int min_cover_over_embedding(const MultiGraph &g, const RotationSystem &rs,
                             const std::set<VertexId> &required) {
    FaceSet fs = trace_faces(g, rs);
    return embedded_fcn(fs, required, {}, -1).size;
}

// Exact fcn of a biconnected block (or single edge) with the given required
// vertex set, over all embeddings.
int fcn_block(const MultiGraph &block, const std::set<VertexId> &required,
              const OracleBudgets &budgets) {
    if (required.empty()) return 0;
    if (block.num_vertices() <= 2) return 1;  // an edge: its one face covers all
    int best = kInf;
    if (block.is_simple()) {
        SprTree t = spr_tree(block);
        if (spr_embedding_count(t) <= budgets.spr_choices) {
            enumerate_embeddings_spr(t, budgets.spr_choices, [&](const RotationSystem &rs) {
                best = std::min(best, min_cover_over_embedding(block, rs, required));
                return true;
            });
            return best;
        }
    }
    enumerate_planar_rotations(block, budgets.rotations, [&](const RotationSystem &rs) {
        best = std::min(best, min_cover_over_embedding(block, rs, required));
        return true;
    });
    return best;
}

struct PhiPair {
    int plain = 0;      // subtree terminals only
    int required = 0;   // subtree terminals plus the attachment cutvertex
};

struct BlockComposer {
    const MultiGraph &g;
    const BlockCutTree &bct;
    const OracleBudgets &budgets;
    std::vector<MultiGraph> block_graphs;
    std::map<std::pair<int, std::set<VertexId>>, int> cache;

    int block_value(int b, const std::set<VertexId> &extra) {
        auto key = std::make_pair(b, extra);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::set<VertexId> req;
        for (VertexId v : block_graphs[b].vertices())
            if (g.is_terminal(v)) req.insert(v);
        req.insert(extra.begin(), extra.end());
        int val = fcn_block(block_graphs[b], req, budgets);
        cache[key] = val;
        return val;
    }

    // Subtree hanging below block b entered through cutvertex pv (-1 at root).
    PhiPair solve_block(int b, VertexId pv) {
        std::vector<VertexId> cuts;
        for (VertexId v : bct.blocks[b])
            if (v != pv && bct.cutvertices.count(v)) cuts.push_back(v);
        if (static_cast<int>(cuts.size()) > budgets.max_block_cuts)
            throw BudgetError("fcn_exact: too many cutvertices in one block");

        // Combined pairs for the structures hanging below each child cut.
        std::vector<PhiPair> below(cuts.size());
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            VertexId w = cuts[i];
            int sum_plain = 0, sum_req = 0, free_count = 0, m = 0;
            for (int nb : bct.blocks_of(w)) {
                if (nb == b) continue;
                PhiPair p = solve_block(nb, w);
                sum_plain += p.plain;
                sum_req += p.required;
                if (p.required == p.plain) ++free_count;
                ++m;
            }
            PhiPair comb;
            comb.plain = sum_plain - std::max(0, free_count - 1);
            comb.required = m == 0 ? 1 : sum_req - (m - 1);
            below[i] = comb;
        }

        auto phi = [&](bool need_pv) {
            int best = kInf;
            for (int s = 0; s < (1 << cuts.size()); ++s) {
                std::set<VertexId> extra;
                if (need_pv && pv >= 0) extra.insert(pv);
                int side = 0;
                for (std::size_t i = 0; i < cuts.size(); ++i) {
                    if (s & (1 << i)) {
                        extra.insert(cuts[i]);  // block's face merges at this cut
                        side += below[i].required - 1;
                    } else {
                        side += g.is_terminal(cuts[i]) ? below[i].required
                                                       : below[i].plain;
                    }
                }
                best = std::min(best, block_value(b, extra) + side);
            }
            return best;
        };
        PhiPair out;
        out.plain = phi(false);
        out.required = pv >= 0 ? phi(true) : out.plain;
        return out;
    }
};

int fcn_connected(const MultiGraph &g, const OracleBudgets &budgets) {
    if (g.terminals().empty()) return 0;
    if (g.num_vertices() == 1) return 1;
    BlockCutTree bct = block_cut_tree(g);
    BlockComposer comp{g, bct, budgets, {}, {}};
    for (const auto &es : bct.block_edges)
        comp.block_graphs.push_back(g.edge_subgraph(es));
    return comp.solve_block(0, -1).plain;
}

MultiGraph component_subgraph(const MultiGraph &g, const std::set<VertexId> &comp) {
    std::vector<EdgeId> es;
    for (const auto &[id, ed] : g.edges())
        if (comp.count(ed.u)) es.push_back(id);
    MultiGraph sub = g.edge_subgraph(es);
    for (VertexId v : comp) {
        if (!sub.has_vertex(v)) {
            sub.add_vertex(v);
            if (g.is_terminal(v)) sub.set_terminal(v, true);
        }
    }
    return sub;
}

// Components can share one ambient region per nesting link, forest-wise, so
// the composition saves exactly one face per extra terminal component.
int compose_components(const std::vector<int> &per_component) {
    int sum = 0, cnt = 0;
    for (int v : per_component) {
        if (v == 0) continue;
        if (v >= kInf) return kInf;
        sum += v - 1;
        ++cnt;
    }
    return cnt == 0 ? 0 : sum + 1;
}

}  // namespace

int fcn_exact(const MultiGraph &g, const OracleBudgets &budgets) {
    std::vector<int> vals;
    for (const auto &comp : g.components())
        vals.push_back(fcn_connected(component_subgraph(g, comp), budgets));
    return compose_components(vals);
}

int fcn_exact(const MultiGraph &g, const std::set<VertexId> &terminals,
              const OracleBudgets &budgets) {
    MultiGraph h = g;
    for (VertexId v : h.vertices()) h.set_terminal(v, terminals.count(v) != 0);
    return fcn_exact(h, budgets);
}

int fcn_exact_rotation_only(const MultiGraph &g, const OracleBudgets &budgets) {
    std::vector<int> vals;
    for (const auto &comp : g.components()) {
        MultiGraph sub = component_subgraph(g, comp);
        if (sub.terminals().empty()) {
            vals.push_back(0);
            continue;
        }
        if (sub.num_vertices() == 1) {
            vals.push_back(1);
            continue;
        }
        int best = kInf;
        enumerate_planar_rotations(sub, budgets.rotations, [&](const RotationSystem &rs) {
            best = std::min(best, min_cover_over_embedding(sub, rs, sub.terminals()));
            return true;
        });
        vals.push_back(best);
    }
    return compose_components(vals);
}

FcnProfile fcn_profile_exact(const MultiGraph &enh, const Corners &corners,
                             const OracleBudgets &budgets) {
    FcnProfile best;
    std::set<VertexId> base;
    for (VertexId v : enh.terminals())
        if (v != corners.c1 && v != corners.c2) base.insert(v);
    std::set<VertexId> full = enh.terminals();

    auto absorb = [&](const RotationSystem &rs) {
        FaceSet fs = trace_faces(enh, rs);
        std::vector<int> ext = fs.faces_of_edge(corners.corner_edge);
        for (int mask = 0; mask < 4; ++mask) {
            std::set<VertexId> req = base;
            if (mask & 1) req.insert(corners.c1);
            if (mask & 2) req.insert(corners.c2);
            best.f0[mask] =
                std::min(best.f0[mask], embedded_fcn(fs, req, ext, 0).size);
        }
        best.f1 = std::min(best.f1, embedded_fcn(fs, full, ext, 1).size);
        best.f2 = std::min(best.f2, embedded_fcn(fs, full, ext, 2).size);
        return true;
    };

    bool done = false;
    if (enh.num_vertices() >= 3 && enh.is_simple() && is_biconnected(enh)) {
        SprTree t = spr_tree(enh);
        if (spr_embedding_count(t) <= budgets.spr_choices) {
            enumerate_embeddings_spr(t, budgets.spr_choices, absorb);
            done = true;
        }
    }
    if (!done) {
        if (enh.num_vertices() >= 3 && !is_biconnected(enh))
            throw StructuralError("fcn_profile_exact: enhancement must be biconnected");
        enumerate_planar_rotations(enh, budgets.rotations, absorb);
    }
    return best;
}

VerifyReport verify_nice_kernel(const MultiGraph &orig_enh, const Corners &orig_corners,
                                const MultiGraph &kern_enh, const Corners &kern_corners,
                                int k, const OracleBudgets &budgets) {
    VerifyReport rep;
    rep.original = fcn_profile_exact(orig_enh, orig_corners, budgets);
    rep.kernel = fcn_profile_exact(kern_enh, kern_corners, budgets);

    rep.k1 = kern_enh.has_vertex(kern_corners.c1) &&
             kern_enh.has_vertex(kern_corners.c2) &&
             kern_enh.has_edge(kern_corners.corner_edge);

    bool oc1 = orig_enh.is_terminal(orig_corners.c1);
    bool oc2 = orig_enh.is_terminal(orig_corners.c2);
    bool kc1 = kern_enh.is_terminal(kern_corners.c1);
    bool kc2 = kern_enh.is_terminal(kern_corners.c2);

    rep.k2 = sat_eq(rep.original.f0_minus(oc1, oc2, 0),
                    rep.kernel.f0_minus(kc1, kc2, 0), k) &&
             sat_eq(rep.original.f1, rep.kernel.f1, k) &&
             sat_eq(rep.original.f2, rep.kernel.f2, k);

    rep.k3 = true;
    for (int removed = 0; removed < 4; ++removed)
        rep.k3 = rep.k3 && sat_eq(rep.original.f0_minus(oc1, oc2, removed),
                                  rep.kernel.f0_minus(kc1, kc2, removed), k);

    int fcn = std::min({rep.kernel.f0_minus(kc1, kc2, 0), rep.kernel.f1, rep.kernel.f2});
    int internal = kInf;
    if (rep.kernel.f0_minus(kc1, kc2, 0) == fcn) internal = std::min(internal, fcn);
    if (rep.kernel.f1 == fcn) internal = std::min(internal, fcn - 1);
    if (rep.kernel.f2 == fcn) internal = std::min(internal, fcn - 2);
    double nv = static_cast<double>(kern_enh.num_vertices());
    rep.k4_ratio = internal >= kInf ? 0.0 : internal / std::cbrt(std::max(1.0, nv));
    return rep;
}

}  // namespace fc
