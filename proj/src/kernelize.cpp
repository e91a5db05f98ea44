#include "fc/kernelize.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "fc/oracle.hpp"

namespace fc {

namespace {

// ---------------------------------------------------------------- utilities

void rename_vertex(MultiGraph &g, VertexId from, VertexId to) {
    if (from == to) return;
    if (!g.has_vertex(from) || g.has_vertex(to))
        throw StructuralError("rename_vertex: bad ids");
    g.add_vertex(to);
    if (g.is_terminal(from)) g.set_terminal(to, true);
    std::vector<std::pair<EdgeId, Edge>> touched;
    for (const auto &[id, ed] : g.edges())
        if (ed.incident(from)) touched.push_back({id, ed});
    for (auto &[id, ed] : touched) {
        g.delete_edge(id);
        VertexId u = ed.u == from ? to : ed.u;
        VertexId v = ed.v == from ? to : ed.v;
        g.add_edge(id, u, v, ed.kind);
    }
    g.delete_vertex(from);
}

Strand strand_from_real_edge(EdgeId id, VertexId a, VertexId b, bool a_term, bool b_term) {
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    if (a_term) s.graph.set_terminal(a, true);
    if (b_term) s.graph.set_terminal(b, true);
    s.graph.add_edge(id, a, b, EdgeKind::Real);
    s.profile.f0 = {0, kInf, kInf, kInf};
    s.profile.f1 = 1;
    s.profile.f2 = 2;
    s.terminal_bearing = false;
    return s;
}

Strand strand_from_kernel(const NiceKernel &k) {
    Strand s;
    s.graph = k.graph;
    s.graph.delete_edge(k.corners.corner_edge);
    s.a = k.corners.c1;
    s.b = k.corners.c2;
    s.profile = k.profile;
    for (VertexId v : s.graph.terminals())
        if (v != s.a && v != s.b) s.terminal_bearing = true;
    return s;
}

bool corner_variants_infinite(const FcnProfile &p) {
    return p.f0[1] >= kInf && p.f0[2] >= kInf && p.f0[3] >= kInf;
}

bool all_equal_f0(const FcnProfile &p, int v) {
    return p.f0[0] == v && p.f0[1] == v && p.f0[2] == v && p.f0[3] == v;
}

// The tuple-matched basic replacement for an unproblematic strand; returns
// nullopt when no library gadget realizes the profile (keep the strand).
std::optional<Strand> match_unproblematic(PipelineContext &ctx, const Strand &s) {
    if (s.profile.f0[0] >= kInf) return p3_strand(ctx, s.a, s.b);
    if (all_equal_f0(s.profile, 1)) return triangle_strand(ctx, s.a, s.b);
    for (int j = 2; j <= ctx.cap; ++j)
        if (all_equal_f0(s.profile, j)) return wheel_strand(ctx, s.a, s.b, j);
    return std::nullopt;
}

std::optional<Strand> match_semi_problematic(PipelineContext &ctx, const Strand &s) {
    if (s.profile.f0[0] == 1 && s.profile.f0[1] == 1 && s.profile.f0[2] == 1 &&
        s.profile.f0[3] == 2 && s.profile.f1 == 2)
        return diamond_strand(ctx, s.a, s.b);
    if (s.profile.f0[0] == 2 && corner_variants_infinite(s.profile) && s.profile.f1 == 2)
        return w4_strand(ctx, s.a, s.b);
    return std::nullopt;
}

MultiGraph compose_strand_union(const std::vector<Strand> &strands,
                                const std::set<VertexId> &marked) {
    MultiGraph out;
    for (const Strand &s : strands) {
        for (VertexId v : s.graph.vertices()) {
            if (!out.has_vertex(v)) out.add_vertex(v);
            if (s.graph.is_terminal(v)) out.set_terminal(v, true);
        }
        for (const auto &[id, ed] : s.graph.edges())
            out.add_edge(id, ed.u, ed.v, EdgeKind::Real);
    }
    for (VertexId v : marked)
        if (out.has_vertex(v)) out.set_terminal(v, true);
    return out;
}

int graph_size(const MultiGraph &g) { return static_cast<int>(g.num_vertices()); }

// ------------------------------------------------------------ S-node rules

struct ChainState {
    std::vector<Strand> strands;
    std::vector<VertexId> joints;  // strands.size() + 1 entries
    std::set<VertexId> marked;     // marked joints (corners included)
    std::vector<ComponentClass> cls;
};

int chain_vertices(const ChainState &ch) {
    std::set<VertexId> vs;
    for (const Strand &s : ch.strands)
        vs.insert(s.graph.vertices().begin(), s.graph.vertices().end());
    return static_cast<int>(vs.size());
}

void chain_contract_strand(ChainState &ch, std::size_t i, bool mark_merged) {
    VertexId u = ch.joints[i], w = ch.joints[i + 1];
    VertexId keep = std::min(u, w), drop = std::max(u, w);
    bool merged_mark = mark_merged || ch.marked.count(u) || ch.marked.count(w);
    ch.strands.erase(ch.strands.begin() + i);
    ch.cls.erase(ch.cls.begin() + i);
    ch.joints.erase(ch.joints.begin() + i);
    ch.joints[i] = keep;
    ch.marked.erase(drop);
    if (merged_mark) ch.marked.insert(keep);
    // The neighbours keep drop as an endpoint; rename it inside them.
    auto fix = [&](Strand &s) {
        if (s.a == drop) {
            rename_vertex(s.graph, drop, keep);
            s.a = keep;
        } else if (s.b == drop) {
            rename_vertex(s.graph, drop, keep);
            s.b = keep;
        }
    };
    if (i > 0) fix(ch.strands[i - 1]);
    if (i < ch.strands.size()) fix(ch.strands[i]);
}

NiceKernel kernelize_s_node(const SprTree &t, int node, PipelineContext &ctx,
                            const Classifier &cls, std::map<int, NiceKernel> &kids) {
    const SprNode &n = t.nodes[node];
    Corners corners = t.corners(node);

    // Walk the cycle from c1 to c2 avoiding the corner edge.
    ChainState ch;
    {
        VertexId prev = corners.c1;
        EdgeId banned = corners.corner_edge;
        ch.joints.push_back(prev);
        VertexId cur = prev;
        EdgeId via = banned;
        do {
            EdgeId next_edge = -1;
            for (EdgeId e : n.skeleton.incident_edges(cur))
                if (e != via && e != banned) next_edge = e;
            if (next_edge < 0) throw StructuralError("s-node: broken cycle");
            const Edge &ed = n.skeleton.edge(next_edge);
            VertexId nxt = ed.other(cur);
            int child = t.child_at(node, next_edge);
            if (child >= 0) {
                ch.strands.push_back(strand_from_kernel(kids.at(child)));
                if (ch.strands.back().a != cur) {
                    std::swap(ch.strands.back().a, ch.strands.back().b);
                    ch.strands.back().profile = kids.at(child).profile;
                    std::swap(ch.strands.back().profile.f0[1], ch.strands.back().profile.f0[2]);
                }
                ch.cls.push_back(cls.classify(child));
            } else {
                ch.strands.push_back(strand_from_real_edge(next_edge, cur, nxt,
                                                           n.skeleton.is_terminal(cur),
                                                           n.skeleton.is_terminal(nxt)));
                ch.cls.push_back(ComponentClass::TerminalFree);
            }
            ch.joints.push_back(nxt);
            via = next_edge;
            cur = nxt;
        } while (cur != corners.c2);
        for (VertexId v : ch.joints)
            if (n.skeleton.is_terminal(v)) ch.marked.insert(v);
    }

    int before = chain_vertices(ch);

    // Rule: keep one internally-uncoverable skeleton terminal, unmark the rest.
    {
        std::vector<VertexId> unmarkable;
        for (std::size_t i = 1; i + 1 < ch.joints.size(); ++i) {
            VertexId v = ch.joints[i];
            if (!ch.marked.count(v)) continue;
            bool left = ch.strands[i - 1].profile_from(ch.joints[i - 1]).f0[2] < kInf;
            bool right = ch.strands[i].profile_from(v).f0[1] < kInf;
            if (!left && !right) unmarkable.push_back(v);
        }
        if (unmarkable.size() >= 2) {
            std::sort(unmarkable.begin(), unmarkable.end());
            for (std::size_t i = 1; i < unmarkable.size(); ++i)
                ch.marked.erase(unmarkable[i]);
            ctx.fire("s-skeleton-terminals", node, before, chain_vertices(ch));
        }
    }

    // Rule: collapse runs of real edges with unmarked interior joints.
    {
        bool changed = true;
        bool fired = false;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < ch.strands.size(); ++i) {
                bool real_pair = ch.strands[i].graph.num_edges() == 1 &&
                                 !ch.strands[i].terminal_bearing &&
                                 ch.strands[i].graph.num_vertices() == 2 &&
                                 ch.strands[i + 1].graph.num_edges() == 1 &&
                                 !ch.strands[i + 1].terminal_bearing &&
                                 ch.strands[i + 1].graph.num_vertices() == 2 &&
                                 ch.cls[i] == ComponentClass::TerminalFree &&
                                 ch.cls[i + 1] == ComponentClass::TerminalFree;
                VertexId shared = ch.joints[i + 1];
                if (!real_pair || ch.marked.count(shared)) continue;
                Strand merged = strand_from_real_edge(ctx.fresh_edge(), ch.joints[i],
                                                      ch.joints[i + 2], false, false);
                ch.strands[i] = merged;
                ch.strands.erase(ch.strands.begin() + i + 1);
                ch.cls.erase(ch.cls.begin() + i + 1);
                ch.joints.erase(ch.joints.begin() + i + 1);
                changed = true;
                fired = true;
                break;
            }
        }
        if (fired) ctx.fire("s-real-path", node, before, chain_vertices(ch));
    }

    // Rule: contract terminal-free virtual components to vertices.
    {
        bool fired = false;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < ch.strands.size(); ++i) {
                if (ch.cls[i] != ComponentClass::TerminalFree) continue;
                if (ch.strands[i].graph.num_edges() == 1) continue;  // already an edge
                VertexId u = ch.joints[i], w = ch.joints[i + 1];
                if (ch.marked.count(u) || ch.marked.count(w)) {
                    // Replace by a single edge when the profile matches one.
                    if (corner_variants_infinite(ch.strands[i].profile)) {
                        ch.strands[i] = edge_strand(ctx, u, w);
                        fired = changed = true;
                    }
                    continue;
                }
                if (ch.strands.size() == 1) {
                    if (corner_variants_infinite(ch.strands[i].profile)) {
                        ch.strands[i] = edge_strand(ctx, u, w);
                        fired = changed = true;
                    }
                    continue;
                }
                chain_contract_strand(ch, i, false);
                fired = changed = true;
                break;
            }
        }
        if (fired) ctx.fire("s-terminal-free", node, before, chain_vertices(ch));
    }

    // Rule: bound unproblematic components by k+1, contracting the excess,
    // then apply the basic replacement to the survivors.
    {
        std::vector<std::size_t> unprob;
        for (std::size_t i = 0; i < ch.strands.size(); ++i)
            if (ch.cls[i] == ComponentClass::Unproblematic) unprob.push_back(i);
        if (static_cast<int>(unprob.size()) > ctx.k + 1) {
            // Contract all but the first k+1, right to left to keep indices valid.
            for (std::size_t r = unprob.size(); r-- > ctx.k + 1;) {
                chain_contract_strand(ch, unprob[r], true);
            }
            ctx.fire("s-unproblematic-excess", node, before, chain_vertices(ch));
        }
        bool fired = false;
        for (std::size_t i = 0; i < ch.strands.size(); ++i) {
            if (ch.cls[i] != ComponentClass::Unproblematic) continue;
            if (auto rep = match_unproblematic(ctx, ch.strands[i])) {
                ch.strands[i] = *rep;
                fired = true;
            }
        }
        if (fired) ctx.fire("rr2-unproblematic", node, before, chain_vertices(ch));
    }

    // Rule: bound semi-problematic components by k+1 and replace survivors by
    // gadgets.
    {
        std::vector<std::size_t> semi;
        for (std::size_t i = 0; i < ch.strands.size(); ++i)
            if (ch.cls[i] == ComponentClass::SemiProblematic) semi.push_back(i);
        if (static_cast<int>(semi.size()) > ctx.k + 1) {
            for (std::size_t r = semi.size(); r-- > ctx.k + 1;)
                chain_contract_strand(ch, semi[r], true);
            ctx.fire("s-semi-problematic-excess", node, before, chain_vertices(ch));
        }
        bool fired = false;
        for (std::size_t i = 0; i < ch.strands.size(); ++i) {
            if (ch.cls[i] != ComponentClass::SemiProblematic) continue;
            if (auto rep = match_semi_problematic(ctx, ch.strands[i])) {
                ch.strands[i] = *rep;
                fired = true;
            }
        }
        if (fired) ctx.fire("rr3-semi-problematic", node, before, chain_vertices(ch));
    }

    NiceKernel out;
    out.profile = compose_s_chain(ch.strands, ch.joints, ch.marked, ctx.cap);
    out.graph = compose_strand_union(ch.strands, ch.marked);
    out.corners.c1 = std::min(ch.joints.front(), ch.joints.back());
    out.corners.c2 = std::max(ch.joints.front(), ch.joints.back());
    if (n.parent < 0 && n.skeleton.edge(corners.corner_edge).kind == EdgeKind::Real) {
        out.corners.corner_edge =
            out.graph.add_edge(corners.corner_edge, out.corners.c1, out.corners.c2,
                               EdgeKind::Real);
    } else {
        out.corners.corner_edge =
            out.graph.add_edge(ctx.fresh_edge(), out.corners.c1, out.corners.c2,
                               EdgeKind::Real);
    }
    return out;
}

// ------------------------------------------------------------ P-node rules

NiceKernel kernelize_p_node(const SprTree &t, int node, PipelineContext &ctx,
                            const Classifier &cls, std::map<int, NiceKernel> &kids,
                            bool &no_fired) {
    const SprNode &n = t.nodes[node];
    Corners corners = t.corners(node);
    VertexId c1 = corners.c1, c2 = corners.c2;

    struct PS {
        Strand strand;
        ComponentClass cls;
        bool real_edge;
        EdgeId skeleton_edge;
    };
    std::vector<PS> strands;
    for (const auto &[id, ed] : n.skeleton.edges()) {
        if (id == corners.corner_edge) continue;
        int child = t.child_at(node, id);
        if (child >= 0) {
            PS ps{strand_from_kernel(kids.at(child)), cls.classify(child), false, id};
            strands.push_back(std::move(ps));
        } else {
            PS ps{strand_from_real_edge(id, c1, c2, n.skeleton.is_terminal(c1),
                                        n.skeleton.is_terminal(c2)),
                  ComponentClass::TerminalFree, true, id};
            strands.push_back(std::move(ps));
        }
    }
    auto count_vertices = [&]() {
        std::set<VertexId> vs = {c1, c2};
        for (auto &ps : strands)
            vs.insert(ps.strand.graph.vertices().begin(), ps.strand.graph.vertices().end());
        return static_cast<int>(vs.size());
    };
    int before = count_vertices();

    int problematic = 0;
    for (auto &ps : strands)
        if (!ps.real_edge && ps.cls == ComponentClass::Problematic) ++problematic;
    if (problematic > ctx.k) {
        ctx.fire_no("p-problematic-exit", node);
        no_fired = true;
        return {};
    }

    // Keep one real edge (none at the root, where the corner edge is real).
    {
        bool is_root = n.parent < 0;
        int keep = is_root ? 0 : 1;
        int seen = 0;
        bool fired = false;
        for (auto it = strands.begin(); it != strands.end();) {
            if (it->real_edge) {
                ++seen;
                if (seen > keep) {
                    it = strands.erase(it);
                    fired = true;
                    continue;
                }
            }
            ++it;
        }
        if (fired) ctx.fire("p-real-edge", node, before, count_vertices());
    }

    // Keep at most one terminal-free component; deletions require that the
    // strand could not cover a corner internally.
    {
        bool have_real = false;
        for (auto &ps : strands) have_real = have_real || ps.real_edge;
        bool kept_one = have_real;
        bool fired = false;
        for (auto it = strands.begin(); it != strands.end();) {
            bool tf = !it->real_edge && it->cls == ComponentClass::TerminalFree;
            if (tf && corner_variants_infinite(it->strand.profile)) {
                if (!kept_one) {
                    kept_one = true;
                    // Basic replacement: the survivor becomes a plain edge.
                    it->strand = edge_strand(ctx, c1, c2);
                    it->real_edge = true;
                    ++it;
                } else {
                    it = strands.erase(it);
                    fired = true;
                }
            } else {
                ++it;
            }
        }
        if (fired) ctx.fire("p-terminal-free", node, before, count_vertices());
    }

    int bearing = 0;
    for (auto &ps : strands)
        if (ps.strand.terminal_bearing) ++bearing;
    if (bearing > 4 * ctx.k + 2) {
        ctx.fire_no("p-4k2-exit", node);
        no_fired = true;
        return {};
    }

    // Basic replacements.
    {
        bool fired = false;
        for (auto &ps : strands) {
            if (ps.real_edge) continue;
            if (ps.cls == ComponentClass::Unproblematic) {
                ps.strand = p3_strand(ctx, ps.strand.a, ps.strand.b);
                fired = true;
            } else if (ps.cls == ComponentClass::SemiProblematic) {
                if (auto rep = match_semi_problematic(ctx, ps.strand)) {
                    ps.strand = *rep;
                    fired = true;
                }
            } else if (ps.cls == ComponentClass::TerminalFree &&
                       corner_variants_infinite(ps.strand.profile) &&
                       ps.strand.graph.num_edges() > 1) {
                ps.strand = edge_strand(ctx, ps.strand.a, ps.strand.b);
                fired = true;
            }
        }
        if (fired) ctx.fire("p-basic-replacements", node, before, count_vertices());
    }

    std::vector<Strand> plain;
    for (auto &ps : strands) plain.push_back(ps.strand);

    NiceKernel out;
    out.profile = compose_p_node(plain, n.skeleton.is_terminal(c1),
                                 n.skeleton.is_terminal(c2), ctx.cap);
    std::set<VertexId> marked;
    if (n.skeleton.is_terminal(c1)) marked.insert(c1);
    if (n.skeleton.is_terminal(c2)) marked.insert(c2);
    out.graph = compose_strand_union(plain, marked);
    out.corners.c1 = c1;
    out.corners.c2 = c2;
    if (n.parent < 0 && n.skeleton.edge(corners.corner_edge).kind == EdgeKind::Real)
        out.corners.corner_edge =
            out.graph.add_edge(corners.corner_edge, c1, c2, EdgeKind::Real);
    else
        out.corners.corner_edge = out.graph.add_edge(ctx.fresh_edge(), c1, c2,
                                                     EdgeKind::Real);
    return out;
}

// ----------------------------------------------------- embedded operations

void erase_edge_embedded(MultiGraph &g, RotationSystem &rot, EdgeId e) {
    const Edge ed = g.edge(e);
    for (VertexId v : {ed.u, ed.v}) {
        auto &cyc = rot.rot.at(v);
        cyc.erase(std::remove(cyc.begin(), cyc.end(), Dart{e, v}), cyc.end());
    }
    g.delete_edge(e);
}

void remove_isolated(MultiGraph &g, RotationSystem &rot,
                     const std::function<bool(VertexId)> &interesting) {
    std::vector<VertexId> drop;
    for (VertexId v : g.vertices())
        if (g.degree(v) == 0 && !interesting(v)) drop.push_back(v);
    for (VertexId v : drop) {
        rot.rot.erase(v);
        g.delete_vertex(v);
    }
}

// Degree-two suppression; returns false when not applicable.
bool suppress_embedded(MultiGraph &g, RotationSystem &rot, VertexId v,
                       PipelineContext &ctx) {
    auto es = g.incident_edges(v);
    if (es.size() != 2) return false;
    EdgeId e1 = es[0], e2 = es[1];
    VertexId u = g.edge(e1).other(v);
    VertexId w = g.edge(e2).other(v);
    if (u == w) return false;  // would create a loop; leave the bigon alone
    EdgeId enew = ctx.fresh_edge();
    auto replace = [&](VertexId at, EdgeId old) {
        auto &cyc = rot.rot.at(at);
        for (Dart &d : cyc)
            if (d == Dart{old, at}) d = Dart{enew, at};
    };
    replace(u, e1);
    replace(w, e2);
    g.delete_edge(e1);
    g.delete_edge(e2);
    rot.rot.erase(v);
    g.delete_vertex(v);
    g.add_edge(enew, u, w, EdgeKind::Real);
    return true;
}

}  // namespace

std::set<VertexId> small_separator_vertices(const MultiGraph &g) {
    std::set<VertexId> out;
    std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
    auto arts = articulation_vertices(g, -1);
    out.insert(arts.begin(), arts.end());
    for (VertexId a : verts) {
        auto arts2 = articulation_vertices(g, a);
        if (!arts2.empty()) {
            out.insert(a);
            out.insert(arts2.begin(), arts2.end());
        }
    }
    return out;
}

std::pair<MultiGraph, RotationSystem> rigidize(const MultiGraph &g,
                                               const RotationSystem &rot,
                                               const std::set<VertexId> &U,
                                               PipelineContext &ctx) {
    if (U.empty()) return {g, rot};
    if (!rotation_is_planar(g, rot))
        throw StructuralError("rigidize: rotation is not planar");

    MultiGraph h;
    RotationSystem hr;
    for (VertexId v : g.vertices()) {
        h.add_vertex(v);
        if (g.is_terminal(v)) h.set_terminal(v, true);
    }

    struct StrandInfo {
        EdgeId first_u = -1;  // edge of the strand incident to u
        EdgeId first_v = -1;
        VertexId sub_u = -1;  // subdivision vertex near u (if u in U)
        VertexId sub_v = -1;
    };
    // Per original edge: three strands (copy before, original, copy after).
    std::map<EdgeId, std::array<StrandInfo, 3>> strands;

    for (const auto &[id, ed] : g.edges()) {
        bool tu = U.count(ed.u), tv = U.count(ed.v);
        if (!tu && !tv) {
            h.add_edge(id, ed.u, ed.v, ed.kind);
            continue;
        }
        for (int s = 0; s < 3; ++s) {
            StrandInfo info;
            std::vector<VertexId> chain = {ed.u};
            if (tu) {
                info.sub_u = h.add_vertex(ctx.fresh_vertex());
                chain.push_back(info.sub_u);
            }
            if (tv) {
                info.sub_v = h.add_vertex(ctx.fresh_vertex());
                chain.push_back(info.sub_v);
            }
            chain.push_back(ed.v);
            std::vector<EdgeId> piece;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                piece.push_back(h.add_edge(ctx.fresh_edge(), chain[i], chain[i + 1],
                                           EdgeKind::Real));
            info.first_u = piece.front();
            info.first_v = piece.back();
            strands[id][s] = info;
        }
    }

    // Rotations at original vertices: strands replace their edge's dart. A
    // parallel bundle appears reversed from the far endpoint.
    for (VertexId v : g.vertices()) {
        std::vector<Dart> cyc;
        for (const Dart &d : rot.at(v)) {
            auto it = strands.find(d.e);
            if (it == strands.end()) {
                cyc.push_back(d);
            } else {
                bool at_u = g.edge(d.e).u == v;
                for (int i = 0; i < 3; ++i) {
                    int s = at_u ? i : 2 - i;
                    cyc.push_back(Dart{at_u ? it->second[s].first_u
                                            : it->second[s].first_v,
                                       v});
                }
            }
        }
        hr.rot[v] = std::move(cyc);
    }

    // Epsilon cycles around each u in U, in stub order.
    for (VertexId u : U) {
        std::vector<VertexId> ring;
        for (const Dart &d : rot.at(u)) {
            auto &arr = strands.at(d.e);
            bool at_u = g.edge(d.e).u == u;
            for (int i = 0; i < 3; ++i) {
                int s = at_u ? i : 2 - i;
                ring.push_back(at_u ? arr[s].sub_u : arr[s].sub_v);
            }
        }
        std::size_t m = ring.size();
        std::vector<EdgeId> ring_edges(m);
        for (std::size_t i = 0; i < m; ++i)
            ring_edges[i] = h.add_edge(ctx.fresh_edge(), ring[i], ring[(i + 1) % m],
                                       EdgeKind::Real);
        for (std::size_t i = 0; i < m; ++i) {
            VertexId s = ring[i];
            EdgeId prev = ring_edges[(i + m - 1) % m];
            EdgeId next = ring_edges[i];
            // The strand through s: inward edge (toward u) and outward edge.
            EdgeId inward = -1, outward = -1;
            for (EdgeId e : h.incident_edges(s)) {
                if (e == prev || e == next) continue;
                const Edge &ee = h.edge(e);
                if (ee.incident(u))
                    inward = e;
                else
                    outward = e;
            }
            if (inward < 0 || outward < 0)
                throw StructuralError("rigidize: lost strand at a subdivision vertex");
            hr.rot[s] = {Dart{inward, s}, Dart{prev, s}, Dart{outward, s},
                         Dart{next, s}};
        }
    }

    if (!rotation_is_planar(h, hr))
        throw StructuralError("rigidize: result is not planar");
    return {h, hr};
}

namespace {

// ------------------------------------------------------------ R-node rules

NiceKernel kernelize_r_node(const SprTree &t, int node, PipelineContext &ctx,
                            const Classifier &cls, std::map<int, NiceKernel> &kids,
                            bool &no_fired) {
    const SprNode &n = t.nodes[node];
    Corners corners = t.corners(node);
    MultiGraph skel = n.skeleton;
    int before = graph_size(skel);

    // Classify children and count early exits.
    std::map<EdgeId, int> slot_child;
    int problematic = 0, semi = 0;
    for (int c : n.children) slot_child[t.nodes[c].parent_side_edge] = c;
    std::map<EdgeId, ComponentClass> slot_class;
    for (auto &[e, c] : slot_child) {
        ComponentClass cc = cls.classify(c);
        slot_class[e] = cc;
        if (cc == ComponentClass::Problematic) ++problematic;
        if (cc == ComponentClass::SemiProblematic) ++semi;
    }
    if (problematic > ctx.k) {
        ctx.fire_no("r-problematic-exit", node);
        no_fired = true;
        return {};
    }
    if (semi > ctx.k * ctx.k) {
        ctx.fire_no("r-semiprob-exit", node);
        no_fired = true;
        return {};
    }

    auto emb = planar_embedding(skel);
    if (!emb) throw StructuralError("r-node: skeleton not planar");
    RotationSystem rot = *emb;

    // Extended skeleton: terminal-free slots become real edges; unproblematic
    // slots become terminal-subdivided edges; the rest keep strand slots.
    std::map<EdgeId, Strand> slot_strands;
    for (auto &[e, c] : slot_child) {
        switch (slot_class[e]) {
            case ComponentClass::TerminalFree: {
                // A fresh real edge stands in for the component.
                const Edge ed = skel.edge(e);
                EdgeId enew = ctx.fresh_edge();
                for (VertexId x : {ed.u, ed.v}) {
                    auto &cyc = rot.rot.at(x);
                    for (Dart &d : cyc)
                        if (d == Dart{e, x}) d = Dart{enew, x};
                }
                skel.delete_edge(e);
                skel.add_edge(enew, ed.u, ed.v, EdgeKind::Real);
                break;
            }
            case ComponentClass::Unproblematic: {
                VertexId mid = ctx.fresh_vertex();
                const Edge ed = skel.edge(e);
                EdgeId e1 = ctx.fresh_edge(), e2 = ctx.fresh_edge();
                auto &cu = rot.rot.at(ed.u);
                auto &cv = rot.rot.at(ed.v);
                for (Dart &d : cu)
                    if (d == Dart{e, ed.u}) d = Dart{e1, ed.u};
                for (Dart &d : cv)
                    if (d == Dart{e, ed.v}) d = Dart{e2, ed.v};
                skel.delete_edge(e);
                skel.add_vertex(mid);
                skel.set_terminal(mid, true);
                skel.add_edge(e1, ed.u, mid, EdgeKind::Real);
                skel.add_edge(e2, mid, ed.v, EdgeKind::Real);
                rot.rot[mid] = {Dart{e1, mid}, Dart{e2, mid}};
                break;
            }
            case ComponentClass::SemiProblematic: {
                Strand s = strand_from_kernel(kids.at(c));
                if (auto rep = match_semi_problematic(ctx, s)) s = *rep;
                slot_strands[e] = std::move(s);
                break;
            }
            case ComponentClass::Problematic: {
                slot_strands[e] = strand_from_kernel(kids.at(c));
                break;
            }
        }
    }
    ctx.fire("r-extended-skeleton", node, before, graph_size(skel));

    // Terminal-heavy face reduction.
    {
        bool changed = true;
        bool fired = false;
        while (changed) {
            changed = false;
            FaceSet fs = trace_faces(skel, rot);
            for (const Face &f : fs.faces) {
                std::vector<VertexId> terms;
                for (VertexId v : f.vertex_set)
                    if (skel.is_terminal(v)) terms.push_back(v);
                if (static_cast<int>(terms.size()) <= 3 * ctx.k + 1) continue;
                // Keep corners first, then smallest ids.
                std::sort(terms.begin(), terms.end(), [&](VertexId a, VertexId b) {
                    bool ca = a == corners.c1 || a == corners.c2;
                    bool cb = b == corners.c1 || b == corners.c2;
                    if (ca != cb) return ca;
                    return a < b;
                });
                for (std::size_t i = 3 * ctx.k + 1; i < terms.size(); ++i)
                    skel.set_terminal(terms[i], false);
                changed = true;
                fired = true;
                break;
            }
        }
        if (fired) ctx.fire("r-heavy-face", node, before, graph_size(skel));
    }

    {
        int terminals = static_cast<int>(skel.terminals().size());
        if (terminals > 3 * ctx.k * ctx.k + ctx.k) {
            ctx.fire_no("r-terminal-exit", node);
            no_fired = true;
            return {};
        }
    }

    auto interesting = [&](VertexId v) {
        if (skel.has_vertex(v) && skel.is_terminal(v)) return true;
        if (v == corners.c1 || v == corners.c2) return true;
        for (auto &[e, s] : slot_strands)
            if (skel.has_edge(e) && skel.edge(e).incident(v)) return true;
        return false;
    };
    auto face_interesting = [&](const Face &f) {
        for (VertexId v : f.vertex_set)
            if (interesting(v)) return true;
        return false;
    };

    // Boring edge removal, private face merging, boring edge contraction; the
    // outer loop re-runs the phase order until nothing changes.
    bool outer_changed = true;
    while (outer_changed) {
        outer_changed = false;

        // Boring edge removal (batched per trace).
        {
            bool changed = true;
            bool fired = false;
            while (changed) {
                changed = false;
                FaceSet fs = trace_faces(skel, rot);
                std::vector<bool> boring(fs.faces.size());
                for (std::size_t f = 0; f < fs.faces.size(); ++f)
                    boring[f] = !face_interesting(fs.faces[f]);
                std::vector<EdgeId> doomed;
                for (const auto &[id, ed] : skel.edges()) {
                    auto faces = fs.faces_of_edge(id);
                    bool all = true;
                    for (int f : faces) all = all && boring[f];
                    if (all) doomed.push_back(id);
                }
                for (EdgeId e : doomed) erase_edge_embedded(skel, rot, e);
                remove_isolated(skel, rot, interesting);
                if (!doomed.empty()) changed = fired = outer_changed = true;
            }
            if (fired) ctx.fire("r-boring-edge-removal", node, before, graph_size(skel));
        }

        // Private face merging.
        {
            bool changed = true;
            bool fired = false;
            while (changed) {
                changed = false;
                FaceSet fs = trace_faces(skel, rot);
                std::vector<std::set<VertexId>> intr(fs.faces.size());
                for (std::size_t f = 0; f < fs.faces.size(); ++f)
                    for (VertexId v : fs.faces[f].vertex_set)
                        if (interesting(v)) intr[f].insert(v);
                // Pairs of faces sharing edges, both private to the same x.
                std::map<std::pair<int, int>, std::vector<EdgeId>> shared;
                for (const auto &[id, ed] : skel.edges()) {
                    auto faces = fs.faces_of_edge(id);
                    if (faces.size() != 2) continue;
                    shared[{faces[0], faces[1]}].push_back(id);
                }
                for (auto &[pair, edges] : shared) {
                    auto [f1, f2] = pair;
                    if (intr[f1].size() != 1 || intr[f2] != intr[f1]) continue;
                    VertexId x = *intr[f1].begin();
                    // Component of the shared edges containing x.
                    MultiGraph sharedg;
                    for (EdgeId e : edges) {
                        const Edge &ed = skel.edge(e);
                        if (!sharedg.has_vertex(ed.u)) sharedg.add_vertex(ed.u);
                        if (!sharedg.has_vertex(ed.v)) sharedg.add_vertex(ed.v);
                        sharedg.add_edge(e, ed.u, ed.v, EdgeKind::Real);
                    }
                    if (!sharedg.has_vertex(x)) continue;
                    std::set<VertexId> comp;
                    for (auto &cset : sharedg.components())
                        if (cset.count(x)) comp = cset;
                    std::vector<EdgeId> doomed;
                    for (const auto &[id, ed] : sharedg.edges())
                        if (comp.count(ed.u)) doomed.push_back(id);
                    if (doomed.empty()) continue;
                    // Keep x attached: skip when the deletion would strand it.
                    std::size_t at_x = 0;
                    for (EdgeId e : doomed)
                        if (skel.edge(e).incident(x)) ++at_x;
                    if (at_x == static_cast<std::size_t>(skel.degree(x))) continue;
                    for (EdgeId e : doomed) erase_edge_embedded(skel, rot, e);
                    remove_isolated(skel, rot, interesting);
                    changed = fired = outer_changed = true;
                    break;
                }
            }
            if (fired) ctx.fire("r-private-face-merge", node, before, graph_size(skel));
        }

        // Boring edge contraction: drop boring leaves, suppress boring
        // degree-2 vertices.
        {
            bool changed = true;
            bool fired = false;
            while (changed) {
                changed = false;
                for (VertexId v : std::vector<VertexId>(skel.vertices().begin(),
                                                        skel.vertices().end())) {
                    if (!skel.has_vertex(v) || interesting(v)) continue;
                    int d = skel.degree(v);
                    if (d == 1) {
                        erase_edge_embedded(skel, rot, skel.incident_edges(v).front());
                        rot.rot.erase(v);
                        skel.delete_vertex(v);
                        changed = fired = outer_changed = true;
                    } else if (d == 2 && suppress_embedded(skel, rot, v, ctx)) {
                        changed = fired = outer_changed = true;
                    }
                }
            }
            if (fired)
                ctx.fire("r-boring-edge-contraction", node, before, graph_size(skel));
        }
    }

    // Rigidize around all vertices of small separators. Separators that exist
    // only because of degree-two subdivision vertices do not break embedding
    // uniqueness, so U is computed on the suppressed skeleton.
    std::set<VertexId> U;
    {
        MultiGraph suppressed = skel;
        PipelineContext scratch;
        scratch.next_edge = ctx.next_edge + 1000000;
        RotationSystem srot = rot;
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v : std::vector<VertexId>(suppressed.vertices().begin(),
                                                    suppressed.vertices().end())) {
                if (!suppressed.has_vertex(v)) continue;
                if (v == corners.c1 || v == corners.c2) continue;
                if (suppressed.degree(v) == 2 && suppress_embedded(suppressed, srot, v, scratch))
                    changed = true;
            }
        }
        U = small_separator_vertices(suppressed);
    }
    for (VertexId v : U)
        if (interesting(v))
            throw StructuralError("r-node: interesting vertex in a small separator");
    if (!U.empty()) {
        auto [h, hr] = rigidize(skel, rot, U, ctx);
        skel = std::move(h);
        rot = std::move(hr);
        ctx.fire("r-rigidize", node, before, graph_size(skel));
    }

    // Compose the profile over the final embedding, then splice strand graphs
    // into their slots.
    FaceSet fs = trace_faces(skel, rot);
    std::map<EdgeId, const Strand *> slot_ptrs;
    for (auto &[e, s] : slot_strands) slot_ptrs[e] = &s;
    NiceKernel out;
    out.profile = compose_r_node(skel, fs, corners.corner_edge, slot_ptrs, ctx.cap);

    MultiGraph composed = skel;
    for (auto &[e, s] : slot_strands) {
        composed.delete_edge(e);
        for (VertexId v : s.graph.vertices()) {
            if (!composed.has_vertex(v)) composed.add_vertex(v);
            if (s.graph.is_terminal(v)) composed.set_terminal(v, true);
        }
        for (const auto &[id, ed] : s.graph.edges())
            composed.add_edge(id, ed.u, ed.v, EdgeKind::Real);
    }
    // The corner edge stays in the kernel; a parent virtual edge id is
    // replaced by a fresh real edge so tree-internal ids never leak out.
    out.graph = std::move(composed);
    out.corners = corners;
    if (out.graph.edge(corners.corner_edge).kind == EdgeKind::Virtual) {
        const Edge ce = out.graph.edge(corners.corner_edge);
        EdgeId fresh = ctx.fresh_edge();
        out.graph.delete_edge(corners.corner_edge);
        out.graph.add_edge(fresh, ce.u, ce.v, EdgeKind::Real);
        out.corners.corner_edge = fresh;
    }
    return out;
}

}  // namespace

std::optional<NiceKernel> kernelize_node(const SprTree &t, int node, PipelineContext &ctx,
                                         const Classifier &cls,
                                         std::map<int, NiceKernel> &memo) {
    for (int c : t.nodes[node].children) {
        if (memo.count(c)) continue;
        auto sub = kernelize_node(t, c, ctx, cls, memo);
        if (!sub) return std::nullopt;
        memo.emplace(c, std::move(*sub));
    }
    bool no_fired = false;
    NiceKernel out;
    switch (t.nodes[node].type) {
        case SprType::S:
            out = kernelize_s_node(t, node, ctx, cls, memo);
            break;
        case SprType::P:
            out = kernelize_p_node(t, node, ctx, cls, memo, no_fired);
            break;
        case SprType::R:
            out = kernelize_r_node(t, node, ctx, cls, memo, no_fired);
            break;
    }
    if (no_fired) return std::nullopt;
    return out;
}

std::optional<NiceKernel> kernelize_block(const MultiGraph &block, PipelineContext &ctx) {
    SprTree t = spr_tree(block);
    Classifier cls(t);
    std::map<int, NiceKernel> memo;
    return kernelize_node(t, t.root, ctx, cls, memo);
}

Instance canonical_no_instance() {
    Instance inst;
    for (int i = 0; i < 4; ++i) {
        inst.graph.add_vertex(i);
        inst.graph.set_terminal(i, true);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inst.graph.add_edge(i, j, EdgeKind::Real);
    inst.k = 1;
    return inst;
}

Instance canonical_yes_instance() {
    Instance inst;
    inst.graph.add_vertex(0);
    inst.graph.add_vertex(1);
    inst.graph.add_edge(0, 1, EdgeKind::Real);
    inst.graph.set_terminal(0, true);
    inst.k = 1;
    return inst;
}

namespace {

// A connected instance with face cover number exactly j: a chain of j-1 K4
// blocks glued at terminal cutvertices (j >= 2), a marked edge (j == 1).
MultiGraph synthesized_component(int j, PipelineContext &ctx) {
    MultiGraph g;
    if (j <= 0) return g;
    if (j == 1) {
        VertexId a = g.add_vertex(ctx.fresh_vertex());
        VertexId b = g.add_vertex(ctx.fresh_vertex());
        g.add_edge(ctx.fresh_edge(), a, b, EdgeKind::Real);
        g.set_terminal(a, true);
        return g;
    }
    VertexId shared = g.add_vertex(ctx.fresh_vertex());
    g.set_terminal(shared, true);
    for (int i = 0; i + 1 < j; ++i) {
        VertexId a = g.add_vertex(ctx.fresh_vertex());
        VertexId b = g.add_vertex(ctx.fresh_vertex());
        VertexId c = g.add_vertex(ctx.fresh_vertex());
        for (VertexId v : {a, b, c}) g.set_terminal(v, true);
        for (VertexId v : {a, b, c}) g.add_edge(ctx.fresh_edge(), shared, v, EdgeKind::Real);
        g.add_edge(ctx.fresh_edge(), a, b, EdgeKind::Real);
        g.add_edge(ctx.fresh_edge(), b, c, EdgeKind::Real);
        g.add_edge(ctx.fresh_edge(), a, c, EdgeKind::Real);
        shared = c;
    }
    return g;
}

struct PhiPair {
    int plain = 0;
    int required = 0;
};

// Saturated fcn of one connected component via block-cut composition with
// kernel-backed block values.
struct DriverComposer {
    const MultiGraph &g;
    const BlockCutTree &bct;
    PipelineContext &ctx;
    std::vector<MultiGraph> block_graphs;
    std::map<std::pair<int, std::set<VertexId>>, int> cache;

    int block_value(int b, const std::set<VertexId> &extra) {
        auto key = std::make_pair(b, extra);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        MultiGraph blk = block_graphs[b];
        for (VertexId v : extra) blk.set_terminal(v, true);
        int val;
        bool any_term = !blk.terminals().empty();
        if (!any_term) {
            val = 0;
        } else if (blk.num_vertices() <= 2) {
            val = 1;
        } else {
            PipelineContext sub;
            sub.k = ctx.k;
            sub.cap = ctx.cap;
            sub.next_vertex = ctx.next_vertex;
            sub.next_edge = ctx.next_edge;
            auto kern = kernelize_block(blk, sub);
            ctx.next_vertex = sub.next_vertex;
            ctx.next_edge = sub.next_edge;
            for (auto &ev : sub.trace) ctx.trace.push_back(ev);
            if (!kern) {
                val = kAbove;
            } else {
                bool c1m = kern->graph.is_terminal(kern->corners.c1);
                bool c2m = kern->graph.is_terminal(kern->corners.c2);
                val = std::min({kern->profile.f0_minus(c1m, c2m, 0), kern->profile.f1,
                                kern->profile.f2});
            }
        }
        cache[key] = val;
        return val;
    }

    PhiPair solve_block(int b, VertexId pv) {
        std::vector<VertexId> cuts;
        for (VertexId v : bct.blocks[b])
            if (v != pv && bct.cutvertices.count(v)) cuts.push_back(v);
        if (cuts.size() > 12)
            throw BudgetError("kernelize: block-cut composition too wide");

        std::vector<PhiPair> below(cuts.size());
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            VertexId w = cuts[i];
            int sum_plain = 0, sum_req = 0, free_count = 0, m = 0;
            for (int nb : bct.blocks_of(w)) {
                if (nb == b) continue;
                PhiPair p = solve_block(nb, w);
                sum_plain = sat_add(sum_plain, p.plain);
                sum_req = sat_add(sum_req, p.required);
                if (p.required == p.plain) ++free_count;
                ++m;
            }
            below[i].plain = sum_plain >= kAbove
                                 ? sum_plain
                                 : sum_plain - std::max(0, free_count - 1);
            below[i].required = sum_req >= kAbove ? sum_req : sum_req - (m - 1);
        }

        auto phi = [&](bool need_pv) {
            int best = kInf;
            for (int s = 0; s < (1 << cuts.size()); ++s) {
                std::set<VertexId> extra;
                if (need_pv && pv >= 0) extra.insert(pv);
                int side = 0;
                for (std::size_t i = 0; i < cuts.size(); ++i) {
                    if (s & (1 << i)) {
                        extra.insert(cuts[i]);
                        side = sat_add(side, below[i].required >= kAbove
                                                 ? below[i].required
                                                 : below[i].required - 1);
                    } else {
                        side = sat_add(side, g.is_terminal(cuts[i]) ? below[i].required
                                                                    : below[i].plain);
                    }
                }
                best = std::min(best, sat_add(block_value(b, extra), side));
            }
            return best;
        };
        PhiPair out;
        out.plain = phi(false);
        out.required = pv >= 0 ? phi(true) : out.plain;
        return out;
    }
};

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

void merge_into(MultiGraph &out, const MultiGraph &piece) {
    for (VertexId v : piece.vertices()) {
        if (!out.has_vertex(v)) out.add_vertex(v);
        if (piece.is_terminal(v)) out.set_terminal(v, true);
    }
    for (const auto &[id, ed] : piece.edges())
        out.add_edge(id, ed.u, ed.v, EdgeKind::Real);
}

// Output instances are simple: parallel copies collapse to the smallest id
// (deleting a parallel edge merges its bigon and covers nothing new).
void simplify_parallel(MultiGraph &g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<EdgeId> doomed;
    for (const auto &[id, ed] : g.edges()) {
        auto key = std::minmax(ed.u, ed.v);
        if (!seen.insert({key.first, key.second}).second) doomed.push_back(id);
    }
    for (EdgeId e : doomed) g.delete_edge(e);
}

}  // namespace

KernelizeResult kernelize(const Instance &inst) {
    if (!inst.graph.is_simple())
        throw StructuralError("kernelize: instance must be simple");
    if (!is_planar(inst.graph)) throw StructuralError("kernelize: instance must be planar");
    if (inst.k < 0) throw StructuralError("kernelize: k must be nonnegative");

    PipelineContext ctx;
    ctx.k = inst.k;
    ctx.cap = inst.k + 2;
    ctx.next_vertex = inst.graph.next_vertex_id();
    // Fresh edge ids live above the range the SPR builder hands to skeleton
    // virtual edges, so the two never meet inside one graph.
    ctx.next_edge = inst.graph.next_edge_id() + 1000000;

    KernelizeResult res;
    std::vector<int> comp_values;
    std::vector<MultiGraph> comp_kernels;

    for (const auto &comp : inst.graph.components()) {
        MultiGraph sub = component_subgraph(inst.graph, comp);
        if (sub.terminals().empty()) continue;  // covered by nothing, dropped
        int value;
        MultiGraph kernel_graph;
        bool have_graph = false;

        if (sub.num_vertices() >= 3 && is_biconnected(sub)) {
            auto kern = kernelize_block(sub, ctx);
            if (!kern) {
                value = kAbove;
            } else {
                bool c1m = kern->graph.is_terminal(kern->corners.c1);
                bool c2m = kern->graph.is_terminal(kern->corners.c2);
                value = std::min({kern->profile.f0_minus(c1m, c2m, 0), kern->profile.f1,
                                  kern->profile.f2});
                kernel_graph = kern->graph;
                have_graph = true;
            }
        } else if (sub.num_vertices() <= 2) {
            value = 1;
        } else {
            BlockCutTree bct = block_cut_tree(sub);
            DriverComposer comp_solver{sub, bct, ctx, {}, {}};
            for (const auto &es : bct.block_edges)
                comp_solver.block_graphs.push_back(sub.edge_subgraph(es));
            value = comp_solver.solve_block(0, -1).plain;
        }
        comp_values.push_back(value);
        if (!have_graph) {
            int j = value >= kAbove ? inst.k + 1 : value;
            kernel_graph = synthesized_component(j, ctx);
        }
        comp_kernels.push_back(std::move(kernel_graph));
    }

    // Disconnected composition: more than k components needing two or more
    // faces certify NO outright.
    int multi = 0;
    for (int v : comp_values)
        if (v >= 2) ++multi;
    if (multi > inst.k) ctx.fire_no("disconnected-exit", -1);

    int total = 0, bearing = 0;
    for (int v : comp_values) {
        total = sat_add(total, v >= kAbove ? v : v - 1);
        ++bearing;
    }
    if (bearing > 0) total = sat_add(total, 1);
    res.saturated_fcn = total;
    res.decision_hint = (total <= inst.k && !ctx.no_fired) ? "YES" : "NO";

    if (ctx.no_fired || res.decision_hint == "NO") {
        res.kernel = canonical_no_instance();
        res.is_no = true;
    } else {
        Instance out;
        for (const MultiGraph &kg : comp_kernels) merge_into(out.graph, kg);
        out.k = inst.k;
        simplify_parallel(out.graph);
        res.kernel = std::move(out);
    }
    res.rules = ctx.trace;
    for (VertexId v : res.kernel.graph.vertices())
        if (inst.graph.has_vertex(v)) res.vertex_origin[v] = v;
    return res;
}

}  // namespace fc
