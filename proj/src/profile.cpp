#include <algorithm>
#include <cassert>
#include <functional>

#include "fc/kernelize.hpp"

namespace fc {

namespace {

int clamp_cap(int v, int cap) {
    if (v >= kInf) return kInf;
    if (v > cap) return kAbove;
    return v;
}

// f - d for exactly known values; saturated values keep their certificate
// (callers re-add at least d faces alongside).
int sat_sub(int v, int d) { return v >= kAbove ? v : v - d; }

}  // namespace

FcnProfile Strand::profile_from(VertexId first) const {
    if (first == a) return profile;
    FcnProfile p = profile;
    std::swap(p.f0[1], p.f0[2]);
    return p;
}

Strand edge_strand(PipelineContext &ctx, VertexId a, VertexId b) {
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    s.graph.add_edge(ctx.fresh_edge(), a, b, EdgeKind::Real);
    s.profile.f0 = {0, kInf, kInf, kInf};
    s.profile.f1 = 1;
    s.profile.f2 = 2;
    s.terminal_bearing = false;
    return s;
}

Strand p3_strand(PipelineContext &ctx, VertexId a, VertexId b) {
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    VertexId t = s.graph.add_vertex(ctx.fresh_vertex());
    s.graph.add_edge(ctx.fresh_edge(), a, t, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t, b, EdgeKind::Real);
    s.graph.set_terminal(t, true);
    s.profile.f0 = {kInf, kInf, kInf, kInf};
    s.profile.f1 = 1;
    s.profile.f2 = 2;
    s.terminal_bearing = true;
    return s;
}

Strand triangle_strand(PipelineContext &ctx, VertexId a, VertexId b) {
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    VertexId t = s.graph.add_vertex(ctx.fresh_vertex());
    s.graph.add_edge(ctx.fresh_edge(), a, b, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), a, t, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t, b, EdgeKind::Real);
    s.graph.set_terminal(t, true);
    s.profile.f0 = {1, 1, 1, 1};
    s.profile.f1 = 1;
    s.profile.f2 = 2;
    s.terminal_bearing = true;
    return s;
}

Strand wheel_strand(PipelineContext &ctx, VertexId a, VertexId b, int j) {
    if (j < 2) throw StructuralError("wheel_strand: needs j >= 2");
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    VertexId hub = s.graph.add_vertex(ctx.fresh_vertex());
    std::vector<VertexId> rim = {a};
    for (int i = 0; i < j; ++i) {
        VertexId t = s.graph.add_vertex(ctx.fresh_vertex());
        s.graph.set_terminal(t, true);
        rim.push_back(t);
        if (i + 1 < j) rim.push_back(s.graph.add_vertex(ctx.fresh_vertex()));
    }
    rim.push_back(b);
    // A fan: the corner edge itself closes the rim into a wheel.
    for (std::size_t i = 0; i + 1 < rim.size(); ++i)
        s.graph.add_edge(ctx.fresh_edge(), rim[i], rim[i + 1], EdgeKind::Real);
    for (VertexId v : rim) s.graph.add_edge(ctx.fresh_edge(), hub, v, EdgeKind::Real);
    s.profile.f0 = {j, j, j, j};
    s.profile.f1 = 1;
    s.profile.f2 = 2;
    s.terminal_bearing = true;
    return s;
}

Strand diamond_strand(PipelineContext &ctx, VertexId a, VertexId b) {
    // A four-cycle through the corners with a chord between the terminals;
    // the chord keeps the gadget one separation class at the corner pair.
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    VertexId t1 = s.graph.add_vertex(ctx.fresh_vertex());
    VertexId t2 = s.graph.add_vertex(ctx.fresh_vertex());
    s.graph.set_terminal(t1, true);
    s.graph.set_terminal(t2, true);
    s.graph.add_edge(ctx.fresh_edge(), a, t1, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t1, b, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), b, t2, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t2, a, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t1, t2, EdgeKind::Real);
    s.profile.f0 = {1, 1, 1, 2};
    s.profile.f1 = 2;
    s.profile.f2 = 2;
    s.terminal_bearing = true;
    return s;
}

Strand w4_strand(PipelineContext &ctx, VertexId a, VertexId b) {
    Strand s;
    s.a = a;
    s.b = b;
    s.graph.add_vertex(a);
    s.graph.add_vertex(b);
    VertexId ga = s.graph.add_vertex(ctx.fresh_vertex());
    VertexId gb = s.graph.add_vertex(ctx.fresh_vertex());
    VertexId t1 = s.graph.add_vertex(ctx.fresh_vertex());
    VertexId t2 = s.graph.add_vertex(ctx.fresh_vertex());
    VertexId hub = s.graph.add_vertex(ctx.fresh_vertex());
    s.graph.set_terminal(t1, true);
    s.graph.set_terminal(t2, true);
    s.graph.add_edge(ctx.fresh_edge(), a, ga, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), gb, b, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), ga, t1, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t1, gb, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), gb, t2, EdgeKind::Real);
    s.graph.add_edge(ctx.fresh_edge(), t2, ga, EdgeKind::Real);
    for (VertexId v : {ga, t1, gb, t2})
        s.graph.add_edge(ctx.fresh_edge(), hub, v, EdgeKind::Real);
    s.profile.f0 = {2, kInf, kInf, kInf};
    s.profile.f1 = 2;
    s.profile.f2 = 2;
    s.terminal_bearing = true;
    return s;
}

FcnProfile compose_s_chain(const std::vector<Strand> &strands,
                           const std::vector<VertexId> &joints,
                           const std::set<VertexId> &marked, int cap) {
    FcnProfile out;
    if (joints.size() != strands.size() + 1)
        throw StructuralError("compose_s_chain: joint/strand mismatch");

    int f1 = 1, f2 = 2;
    for (const Strand &s : strands) {
        f1 = sat_add(f1, std::min(sat_sub(s.profile.f1, 1), s.profile.f0[0]));
        f2 = sat_add(f2, std::min({sat_sub(s.profile.f2, 2), sat_sub(s.profile.f1, 1),
                                   s.profile.f0[0]}));
    }
    out.f1 = clamp_cap(f1, cap);
    out.f2 = clamp_cap(f2, cap);

    for (int mask = 0; mask < 4; ++mask) {
        // carry = the joint on the left still needs an internal cover.
        std::array<int, 2> dp = {kInf, kInf};
        dp[(mask & 1) ? 1 : 0] = 0;
        for (std::size_t i = 0; i < strands.size(); ++i) {
            FcnProfile p = strands[i].profile_from(joints[i]);
            VertexId right = joints[i + 1];
            bool need_right = (i + 1 == strands.size()) ? ((mask & 2) != 0)
                                                        : marked.count(right) != 0;
            std::array<int, 2> nx = {kInf, kInf};
            for (int carry = 0; carry < 2; ++carry) {
                if (dp[carry] >= kInf) continue;
                for (int l = 0; l < 2; ++l) {
                    if (carry && !l) continue;  // left joint would stay uncovered
                    for (int r = 0; r < 2; ++r) {
                        int cost = p.f0[l | (r << 1)];
                        int nc = (need_right && !r) ? 1 : 0;
                        nx[nc] = std::min(nx[nc], sat_add(dp[carry], cost));
                    }
                }
            }
            dp = nx;
        }
        out.f0[mask] = clamp_cap(dp[0], cap);
    }
    return out;
}

namespace {

// Strand cost in half-face units: 2*internals + adjacency j, minimized over
// how many of the j adjacent chosen faces the strand actually uses.
long long p_cost2(const FcnProfile &p, int j, int m) {
    int internals;
    switch (j) {
        case 0: internals = p.f0[m]; break;
        case 1: internals = std::min(sat_sub(p.f1, 1), p.f0[m]); break;
        default:
            internals = std::min({sat_sub(p.f2, 2), sat_sub(p.f1, 1), p.f0[m]});
    }
    if (internals >= kInf) return kInf;
    if (internals >= kAbove) return kAbove;
    return 2LL * internals + j;
}

// P-node DP state: j=1 count (0, 1, even >= 2, odd >= 3), whether any strand
// took j=0, whether any took j>0, and corner bits covered by strand masks.
struct PState {
    int j1 = 0;
    bool any0 = false;
    bool anyp = false;
    int cov = 0;

    int key() const { return j1 | (any0 << 2) | (anyp << 3) | (cov << 4); }
};

int bump_j1(int s) {
    switch (s) {
        case 0: return 1;
        case 1: return 2;
        case 2: return 3;
        default: return 2;
    }
}

int p_compose_value(const std::vector<Strand> &strands, int J, int req_mask, int cap) {
    std::map<int, long long> dp;
    {
        // The corner edge is a strand with forced adjacency J and no content.
        PState st;
        st.any0 = (J == 0);
        st.anyp = (J >= 1);
        if (J == 1) st.j1 = 1;
        dp[st.key()] = J;
    }
    auto decode = [](int key) {
        PState st;
        st.j1 = key & 3;
        st.any0 = (key >> 2) & 1;
        st.anyp = (key >> 3) & 1;
        st.cov = key >> 4;
        return st;
    };
    long long big = 4LL * (cap + 2);
    for (const Strand &s : strands) {
        std::map<int, long long> nx;
        for (auto &[key, cost] : dp) {
            PState st = decode(key);
            for (int j = 0; j <= 2; ++j) {
                for (int m = 0; m < 4; ++m) {
                    if (j > 0 && m > 0) continue;  // masks only matter at j == 0
                    long long c = p_cost2(s.profile, j, m);
                    if (c >= kInf) continue;
                    PState ns = st;
                    if (j == 0) {
                        ns.any0 = true;
                        ns.cov |= m;
                    } else {
                        ns.anyp = true;
                        if (j == 1) ns.j1 = bump_j1(ns.j1);
                    }
                    long long total = cost + c;
                    if (total > big) total = big + 1;  // saturate, keep table small
                    auto [it, ok] = nx.try_emplace(ns.key(), total);
                    if (!ok) it->second = std::min(it->second, total);
                }
            }
        }
        dp = std::move(nx);
    }
    long long best = -1;
    for (auto &[key, cost] : dp) {
        PState st = decode(key);
        if (st.j1 == 1 || st.j1 == 3) continue;         // runs have two j=1 ends
        if (st.anyp && st.any0 && st.j1 < 2) continue;  // j=0 strands need a host run
        int have = st.cov | (st.anyp ? 3 : 0);          // chosen gaps contain corners
        if ((have & req_mask) != req_mask) continue;
        if (best < 0 || cost < best) best = cost;
    }
    if (best < 0) return kInf;
    if (best > big) return kAbove;
    return clamp_cap(static_cast<int>(best / 2), cap);
}

}  // namespace

FcnProfile compose_p_node(const std::vector<Strand> &strands, bool /*c1_marked*/,
                          bool /*c2_marked*/, int cap) {
    FcnProfile out;
    for (int mask = 0; mask < 4; ++mask)
        out.f0[mask] = p_compose_value(strands, 0, mask, cap);
    out.f1 = p_compose_value(strands, 1, 0, cap);
    out.f2 = p_compose_value(strands, 2, 0, cap);
    return out;
}

namespace {

struct RSlotInfo {
    const Strand *strand;
    int fa = -1, fb = -1;
    VertexId va = -1, vb = -1;
};

// 2 * internal faces contributed by a slot with adjacency j and corner mask m.
long long r_slot_cost2(const FcnProfile &p, int j, int m) {
    long long c = p_cost2(p, j, m);
    if (c >= kAbove) return c;
    return c - j;
}

}  // namespace

FcnProfile compose_r_node(const MultiGraph &skel, const FaceSet &fs, EdgeId corner_edge,
                          const std::map<EdgeId, const Strand *> &slots, int cap) {
    auto ext = fs.faces_of_edge(corner_edge);
    if (ext.size() != 2)
        throw StructuralError("compose_r_node: corner edge must have two faces");
    int ext1 = ext[0], ext2 = ext[1];

    const Edge &ce = skel.edge(corner_edge);
    VertexId c1 = std::min(ce.u, ce.v), c2 = std::max(ce.u, ce.v);
    std::vector<VertexId> marked;
    for (VertexId v : skel.terminals())
        if (v != c1 && v != c2) marked.push_back(v);

    std::vector<RSlotInfo> slot_info;
    for (auto &[e, strand] : slots) {
        RSlotInfo info;
        info.strand = strand;
        auto fe = fs.faces_of_edge(e);
        if (fe.size() != 2)
            throw StructuralError("compose_r_node: slot edge must have two faces");
        info.fa = fe[0];
        info.fb = fe[1];
        info.va = strand->a;
        info.vb = strand->b;
        slot_info.push_back(info);
    }

    // Candidate faces, deduplicated by their effect on requirements and slots.
    std::vector<int> cands;
    {
        std::set<std::vector<int>> seen;
        for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
            std::vector<int> sig;
            bool useful = (f == ext1 || f == ext2);
            useful = useful || fs.on_face(f, c1) || fs.on_face(f, c2);
            for (std::size_t i = 0; i < marked.size(); ++i)
                if (fs.on_face(f, marked[i])) {
                    sig.push_back(static_cast<int>(i));
                    useful = true;
                }
            sig.push_back(-1);
            for (std::size_t i = 0; i < slot_info.size(); ++i)
                if (f == slot_info[i].fa || f == slot_info[i].fb) {
                    sig.push_back(static_cast<int>(i));
                    useful = true;
                }
            if (fs.on_face(f, c1)) sig.push_back(-2);
            if (fs.on_face(f, c2)) sig.push_back(-3);
            if (f == ext1 || f == ext2) sig.push_back(-4 - (f == ext2));
            if (!useful) continue;
            if (seen.insert(sig).second) cands.push_back(f);
        }
    }

    // Value of a fixed choice X (or kInf when infeasible).
    auto evaluate = [&](const std::set<int> &X, int req_mask) -> long long {
        std::set<VertexId> uncovered;
        auto covered_by_X = [&](VertexId v) {
            for (int f : X)
                if (fs.on_face(f, v)) return true;
            return false;
        };
        for (VertexId v : marked)
            if (!covered_by_X(v)) uncovered.insert(v);
        if ((req_mask & 1) && !covered_by_X(c1)) uncovered.insert(c1);
        if ((req_mask & 2) && !covered_by_X(c2)) uncovered.insert(c2);

        std::vector<int> slot_j(slot_info.size(), 0);
        for (std::size_t i = 0; i < slot_info.size(); ++i) {
            slot_j[i] = (X.count(slot_info[i].fa) ? 1 : 0) +
                        (X.count(slot_info[i].fb) ? 1 : 0);
            if (slot_j[i] >= 1) {
                uncovered.erase(slot_info[i].va);
                uncovered.erase(slot_info[i].vb);
            }
        }
        std::vector<int> affected;
        for (std::size_t i = 0; i < slot_info.size(); ++i)
            if (slot_j[i] == 0 && (uncovered.count(slot_info[i].va) ||
                                   uncovered.count(slot_info[i].vb)))
                affected.push_back(static_cast<int>(i));

        std::set<VertexId> reachable;
        for (int i : affected) {
            reachable.insert(slot_info[i].va);
            reachable.insert(slot_info[i].vb);
        }
        for (VertexId v : uncovered)
            if (!reachable.count(v)) return kInf;

        long long total2 = 0;
        for (std::size_t i = 0; i < slot_info.size(); ++i) {
            if (std::find(affected.begin(), affected.end(), static_cast<int>(i)) !=
                affected.end())
                continue;
            long long c = r_slot_cost2(slot_info[i].strand->profile, slot_j[i], 0);
            if (c >= kInf) return kInf;
            total2 += c;
        }
        if (affected.size() > 10)
            throw BudgetError("compose_r_node: corner-mask search too wide");
        long long best_masks = affected.empty() ? 0 : kInf;
        int combos = 1;
        for (std::size_t i = 0; i < affected.size(); ++i) combos *= 4;
        for (int cmb = 0; cmb < combos && !affected.empty(); ++cmb) {
            int x = cmb;
            long long sum = 0;
            std::set<VertexId> got;
            bool ok = true;
            for (std::size_t i = 0; i < affected.size() && ok; ++i) {
                int m = x & 3;
                x >>= 2;
                const RSlotInfo &sl = slot_info[affected[i]];
                long long cc = r_slot_cost2(sl.strand->profile, 0, m);
                if (cc >= kInf) {
                    ok = false;
                    break;
                }
                sum += cc;
                if (m & 1) got.insert(sl.va);
                if (m & 2) got.insert(sl.vb);
            }
            if (!ok) continue;
            bool all = true;
            for (VertexId v : uncovered) all = all && got.count(v);
            if (all) best_masks = std::min(best_masks, sum);
        }
        if (best_masks >= kInf) return kInf;
        total2 += best_masks;
        return 2LL * static_cast<long long>(X.size()) + total2;
    };

    auto solve = [&](int J, int req_mask) {
        long long best = kInf;
        std::set<int> X;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int ext_used) {
            if (ext_used == J) {
                long long v = evaluate(X, req_mask);
                best = std::min(best, v);
            }
            if (static_cast<int>(X.size()) >= cap + 2) return;
            for (std::size_t j = i; j < cands.size(); ++j) {
                int f = cands[j];
                bool is_ext = (f == ext1 || f == ext2);
                if (is_ext && ext_used >= J) continue;
                X.insert(f);
                rec(j + 1, ext_used + (is_ext ? 1 : 0));
                X.erase(f);
            }
        };
        rec(0, 0);

        // Feasibility at any size: everything allowed at once.
        std::set<int> all;
        int eu = 0;
        for (int f : cands) {
            bool is_ext = (f == ext1 || f == ext2);
            if (is_ext) {
                if (eu < J) {
                    all.insert(f);
                    ++eu;
                }
            } else {
                all.insert(f);
            }
        }
        bool feasible = (eu == J) && evaluate(all, req_mask) < kInf;
        if (best >= kInf) return feasible ? kAbove : kInf;
        int value = static_cast<int>(best / 2);
        if (value > cap) return feasible ? kAbove : kInf;
        return clamp_cap(value, cap);
    };

    FcnProfile out;
    for (int mask = 0; mask < 4; ++mask) out.f0[mask] = solve(0, mask);
    out.f1 = solve(1, 0);
    out.f2 = solve(2, 0);
    return out;
}

}  // namespace fc
