#include "fc/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace fc {

namespace {

// Iterative Tarjan lowpoint DFS. Returns articulation vertices of g - skip
// (skip = -1 keeps the whole graph). Indices refer to adj.
std::vector<int> articulation_indices(const AdjacencyView &adj, int skip) {
    int n = adj.n();
    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
    std::vector<bool> is_art(n, false);
    std::vector<int> it(n, 0);
    int timer = 0;
    for (int s = 0; s < n; ++s) {
        if (s == skip || disc[s] >= 0) continue;
        int root_children = 0;
        std::vector<int> stack = {s};
        disc[s] = low[s] = timer++;
        it[s] = adj.offsets[s];
        while (!stack.empty()) {
            int v = stack.back();
            if (it[v] < adj.offsets[v + 1]) {
                int j = it[v]++;
                int w = adj.targets[j];
                if (w == skip) continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    parent_edge[w] = adj.via[j];
                    it[w] = adj.offsets[w];
                    stack.push_back(w);
                    if (v == s) ++root_children;
                } else if (adj.via[j] != parent_edge[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back();
                    low[p] = std::min(low[p], low[v]);
                    if (p != s && low[v] >= disc[p]) is_art[p] = true;
                }
            }
        }
        if (root_children >= 2) is_art[s] = true;
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (is_art[i]) out.push_back(i);
    return out;
}

}  // namespace

std::vector<int> BlockCutTree::blocks_of(VertexId v) const {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        if (blocks[b].count(v)) out.push_back(b);
    return out;
}

BlockCutTree block_cut_tree(const MultiGraph &g) {
    if (!g.is_connected())
        throw StructuralError("block_cut_tree: graph must be connected");
    BlockCutTree bct;
    if (g.num_edges() == 0) return bct;

    AdjacencyView adj(g);
    int n = adj.n();
    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), it(n, 0);
    std::vector<EdgeId> estack;
    int timer = 0;

    auto pop_block = [&](EdgeId via) {
        std::vector<EdgeId> es;
        while (!estack.empty()) {
            EdgeId e = estack.back();
            estack.pop_back();
            es.push_back(e);
            if (e == via) break;
        }
        std::set<VertexId> vs;
        for (EdgeId e : es) {
            vs.insert(g.edge(e).u);
            vs.insert(g.edge(e).v);
        }
        std::sort(es.begin(), es.end());
        bct.blocks.push_back(std::move(vs));
        bct.block_edges.push_back(std::move(es));
    };

    int s = 0;
    std::vector<int> stack = {s};
    disc[s] = low[s] = timer++;
    it[s] = adj.offsets[s];
    int root_children = 0;
    while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < adj.offsets[v + 1]) {
            int j = it[v]++;
            int w = adj.targets[j];
            EdgeId e = adj.via[j];
            if (disc[w] < 0) {
                estack.push_back(e);
                disc[w] = low[w] = timer++;
                parent_edge[w] = e;
                it[w] = adj.offsets[w];
                stack.push_back(w);
                if (v == s) ++root_children;
            } else if (e != parent_edge[v]) {
                if (disc[w] < disc[v]) estack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back();
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    pop_block(parent_edge[v]);
                    if (p != s) bct.cutvertices.insert(adj.idx_to_vertex[p]);
                }
            }
        }
    }
    if (root_children >= 2) bct.cutvertices.insert(adj.idx_to_vertex[s]);
    return bct;
}

bool is_biconnected(const MultiGraph &g) {
    if (!g.is_connected() || g.num_vertices() < 2) return false;
    if (g.num_vertices() == 2) return g.num_edges() >= 1;
    AdjacencyView adj(g);
    return articulation_indices(adj, -1).empty();
}

std::vector<VertexId> articulation_vertices(const MultiGraph &g, VertexId skip) {
    if (g.num_vertices() == 0) return {};
    AdjacencyView adj(g);
    int s = -1;
    if (skip >= 0) {
        auto it = adj.vertex_to_idx.find(skip);
        if (it != adj.vertex_to_idx.end()) s = it->second;
    }
    std::vector<VertexId> out;
    for (int i : articulation_indices(adj, s)) out.push_back(adj.idx_to_vertex[i]);
    return out;
}

std::optional<std::pair<VertexId, VertexId>> find_split_pair(const MultiGraph &g) {
    // Parallel pair first (dipoles are the caller's base case).
    std::map<std::pair<VertexId, VertexId>, int> par;
    for (const auto &[id, ed] : g.edges()) {
        auto key = std::minmax(ed.u, ed.v);
        if (++par[{key.first, key.second}] >= 2 && g.num_vertices() > 2)
            return std::make_pair(key.first, key.second);
    }
    AdjacencyView adj(g);
    for (int a = 0; a < adj.n(); ++a) {
        auto arts = articulation_indices(adj, a);
        if (!arts.empty()) {
            VertexId va = adj.idx_to_vertex[a];
            VertexId vb = adj.idx_to_vertex[arts.front()];
            return std::make_pair(std::min(va, vb), std::max(va, vb));
        }
    }
    return std::nullopt;
}

namespace {

struct Proto {
    SprType type = SprType::S;
    MultiGraph skeleton;
    bool alive = true;
};

struct Builder {
    std::vector<Proto> protos;
    std::vector<std::pair<EdgeId, EdgeId>> links;
    std::map<EdgeId, int> owner;  // virtual skeleton edge -> proto index
    EdgeId next_edge = 0;

    int add_proto(SprType t, MultiGraph skel) {
        int idx = static_cast<int>(protos.size());
        for (const auto &[id, ed] : skel.edges())
            if (ed.kind == EdgeKind::Virtual) owner[id] = idx;
        protos.push_back(Proto{t, std::move(skel), true});
        return idx;
    }

    EdgeId fresh_edge() { return next_edge++; }

    void decompose(MultiGraph piece);
    void merge_pass();
};

bool is_cycle_graph(const MultiGraph &g) {
    if (g.num_vertices() < 3 || g.num_vertices() != g.num_edges()) return false;
    for (VertexId v : g.vertices())
        if (g.degree(v) != 2) return false;
    return g.is_connected();
}

void Builder::decompose(MultiGraph piece) {
    if (piece.num_vertices() == 2) {
        if (piece.num_edges() < 3)
            throw StructuralError("spr: degenerate dipole piece");
        add_proto(SprType::P, std::move(piece));
        return;
    }
    if (is_cycle_graph(piece)) {
        add_proto(SprType::S, std::move(piece));
        return;
    }
    auto split = find_split_pair(piece);
    if (!split) {
        add_proto(SprType::R, std::move(piece));
        return;
    }
    auto [a, b] = *split;

    // Separation classes: one per component of piece - {a,b}, plus one
    // singleton class per direct a-b edge.
    std::map<VertexId, int> comp;
    {
        AdjacencyView adj(piece);
        int ia = adj.vertex_to_idx[a], ib = adj.vertex_to_idx[b];
        int nc = 0;
        std::vector<int> mark(adj.n(), -1);
        for (int s0 = 0; s0 < adj.n(); ++s0) {
            if (s0 == ia || s0 == ib || mark[s0] >= 0) continue;
            std::vector<int> stack = {s0};
            mark[s0] = nc;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int j = adj.offsets[x]; j < adj.offsets[x + 1]; ++j) {
                    int y = adj.targets[j];
                    if (y == ia || y == ib || mark[y] >= 0) continue;
                    mark[y] = nc;
                    stack.push_back(y);
                }
            }
            ++nc;
        }
        for (int i = 0; i < adj.n(); ++i)
            if (mark[i] >= 0) comp[adj.idx_to_vertex[i]] = mark[i];
    }

    std::map<int, std::vector<EdgeId>> classes;  // component -> edges
    std::vector<EdgeId> direct;                  // a-b edges
    for (const auto &[id, ed] : piece.edges()) {
        VertexId inner = -1;
        if (ed.u != a && ed.u != b)
            inner = ed.u;
        else if (ed.v != a && ed.v != b)
            inner = ed.v;
        if (inner == -1)
            direct.push_back(id);
        else
            classes[comp.at(inner)].push_back(id);
    }
    std::size_t m = classes.size() + direct.size();
    if (m < 2) throw StructuralError("spr: split pair with one class");

    if (m == 2 && direct.empty()) {
        // Two-way split; both classes have >= 2 edges.
        std::vector<MultiGraph> parts;
        std::vector<EdgeId> virt;
        for (auto &[c, es] : classes) {
            MultiGraph part = piece.edge_subgraph(es);
            EdgeId ve = fresh_edge();
            part.reserve_edge_ids(next_edge);
            part.add_edge(ve, a, b, EdgeKind::Virtual);
            parts.push_back(std::move(part));
            virt.push_back(ve);
        }
        links.push_back({virt[0], virt[1]});
        for (auto &p : parts) decompose(std::move(p));
        return;
    }

    // P node: one dipole edge per class.
    MultiGraph dipole;
    dipole.add_vertex(a);
    dipole.add_vertex(b);
    if (piece.is_terminal(a)) dipole.set_terminal(a, true);
    if (piece.is_terminal(b)) dipole.set_terminal(b, true);
    for (EdgeId id : direct) dipole.add_edge(id, a, b, piece.edge(id).kind);
    std::vector<MultiGraph> pending;
    for (auto &[c, es] : classes) {
        MultiGraph part = piece.edge_subgraph(es);
        EdgeId child_ve = fresh_edge();
        EdgeId parent_ve = fresh_edge();
        part.reserve_edge_ids(next_edge);
        part.add_edge(child_ve, a, b, EdgeKind::Virtual);
        dipole.reserve_edge_ids(next_edge);
        dipole.add_edge(parent_ve, a, b, EdgeKind::Virtual);
        links.push_back({parent_ve, child_ve});
        pending.push_back(std::move(part));
    }
    add_proto(SprType::P, std::move(dipole));
    for (auto &part : pending) decompose(std::move(part));
}

void Builder::merge_pass() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < links.size(); ++i) {
            auto [ea, eb] = links[i];
            int pa = owner.at(ea), pb = owner.at(eb);
            if (pa == pb) throw StructuralError("spr: self link");
            SprType ta = protos[pa].type, tb = protos[pb].type;
            if (ta != tb || ta == SprType::R) continue;

            // Glue pb's skeleton into pa along the linked virtual edges.
            MultiGraph &sa = protos[pa].skeleton;
            MultiGraph &sb = protos[pb].skeleton;
            sa.delete_edge(ea);
            sb.delete_edge(eb);
            for (VertexId v : sb.vertices()) {
                if (!sa.has_vertex(v)) {
                    sa.add_vertex(v);
                    if (sb.is_terminal(v)) sa.set_terminal(v, true);
                }
            }
            for (const auto &[id, ed] : sb.edges()) {
                sa.add_edge(id, ed.u, ed.v, ed.kind);
                if (ed.kind == EdgeKind::Virtual) owner[id] = pa;
            }
            protos[pb].alive = false;
            owner.erase(ea);
            owner.erase(eb);
            links.erase(links.begin() + i);
            changed = true;
            break;
        }
    }
}

}  // namespace

SprTree spr_tree(const MultiGraph &g) {
    if (g.num_vertices() < 3)
        throw StructuralError("spr_tree: need at least 3 vertices");
    if (!g.is_simple()) throw StructuralError("spr_tree: input must be simple");
    if (!is_biconnected(g)) throw StructuralError("spr_tree: input must be biconnected");

    Builder b;
    b.next_edge = g.next_edge_id();
    b.decompose(g);
    b.merge_pass();

    SprTree t;
    std::map<int, int> remap;
    for (std::size_t i = 0; i < b.protos.size(); ++i) {
        if (!b.protos[i].alive) continue;
        remap[static_cast<int>(i)] = t.size();
        SprNode node;
        node.type = b.protos[i].type;
        node.skeleton = std::move(b.protos[i].skeleton);
        t.nodes.push_back(std::move(node));
    }

    for (const SprNode &node : t.nodes) {
        switch (node.type) {
            case SprType::S:
                if (!is_cycle_graph(node.skeleton))
                    throw StructuralError("spr: S skeleton is not a cycle");
                break;
            case SprType::P:
                if (node.skeleton.num_vertices() != 2 || node.skeleton.num_edges() < 3)
                    throw StructuralError("spr: P skeleton is not a dipole");
                break;
            case SprType::R:
                if (node.skeleton.num_vertices() < 4 || !node.skeleton.is_simple() ||
                    find_split_pair(node.skeleton).has_value())
                    throw StructuralError("spr: R skeleton is not 3-connected");
                break;
        }
    }

    // Root at the node holding the smallest real edge id.
    EdgeId min_real = g.edges().begin()->first;
    t.root = -1;
    for (int i = 0; i < t.size(); ++i)
        if (t.nodes[i].skeleton.has_edge(min_real)) t.root = i;
    if (t.root < 0) throw StructuralError("spr: lost the smallest real edge");

    std::map<int, std::vector<std::pair<EdgeId, EdgeId>>> adj_links;
    for (auto [ea, eb] : b.links) {
        int pa = remap.at(b.owner.at(ea));
        int pb = remap.at(b.owner.at(eb));
        adj_links[pa].push_back({ea, eb});
        adj_links[pb].push_back({eb, ea});
        if (t.nodes[pa].type == t.nodes[pb].type && t.nodes[pa].type != SprType::R)
            throw StructuralError("spr: adjacent same-type S/P nodes survived");
    }
    std::map<EdgeId, int> edge_owner;
    for (auto &[e, p] : b.owner) edge_owner[e] = remap.at(p);

    std::vector<int> order = {t.root};
    std::vector<bool> seen(t.size(), false);
    seen[t.root] = true;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (auto [own, far] : adj_links[v]) {
            int w = edge_owner.at(far);
            if (seen[w]) continue;
            seen[w] = true;
            t.nodes[w].parent = v;
            t.nodes[w].parent_edge = far;
            t.nodes[w].parent_side_edge = own;
            t.nodes[v].children.push_back(w);
            order.push_back(w);
        }
    }
    for (int i = 0; i < t.size(); ++i) {
        if (!seen[i]) throw StructuralError("spr: disconnected tree");
        std::sort(t.nodes[i].children.begin(), t.nodes[i].children.end());
    }
    return t;
}

EdgeId SprTree::root_corner_edge() const {
    const MultiGraph &skel = nodes[root].skeleton;
    for (const auto &[id, ed] : skel.edges())
        if (ed.kind == EdgeKind::Real) return id;  // map is id-ordered
    throw StructuralError("spr: root skeleton has no real edge");
}

Corners SprTree::corners(int node_idx) const {
    const SprNode &n = nodes[node_idx];
    EdgeId e = (n.parent < 0) ? root_corner_edge() : n.parent_edge;
    const Edge &ed = n.skeleton.edge(e);
    Corners c;
    c.c1 = std::min(ed.u, ed.v);
    c.c2 = std::max(ed.u, ed.v);
    c.corner_edge = e;
    return c;
}

int SprTree::child_at(int node_idx, EdgeId skeleton_edge) const {
    for (int c : nodes[node_idx].children)
        if (nodes[c].parent_side_edge == skeleton_edge) return c;
    return -1;
}

std::vector<int> SprTree::subtree(int node_idx) const {
    std::vector<int> out = {node_idx};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int c : nodes[out[i]].children) out.push_back(c);
    return out;
}

MultiGraph induced_graph(const SprTree &t, int node_idx) {
    MultiGraph out;
    VertexId maxv = 0;
    EdgeId maxe = 0;
    for (int idx : t.subtree(node_idx)) {
        const MultiGraph &skel = t.nodes[idx].skeleton;
        for (VertexId v : skel.vertices()) {
            if (!out.has_vertex(v)) {
                out.add_vertex(v);
                if (skel.is_terminal(v)) out.set_terminal(v, true);
            }
        }
        for (const auto &[id, ed] : skel.edges())
            if (ed.kind == EdgeKind::Real) out.add_edge(id, ed.u, ed.v, EdgeKind::Real);
        maxv = std::max(maxv, skel.next_vertex_id());
        maxe = std::max(maxe, skel.next_edge_id());
    }
    out.reserve_vertex_ids(maxv);
    out.reserve_edge_ids(maxe);
    return out;
}

std::pair<MultiGraph, Corners> enhancement(const SprTree &t, int node_idx) {
    MultiGraph g = induced_graph(t, node_idx);
    Corners c = t.corners(node_idx);
    if (t.nodes[node_idx].parent >= 0) {
        EdgeId ce = g.add_edge(c.c1, c.c2, EdgeKind::Real);
        c.corner_edge = ce;
    }
    return {std::move(g), c};
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

RotationSystem skeleton_rotation(const SprNode &n, int choice) {
    RotationSystem rs;
    const MultiGraph &skel = n.skeleton;
    if (n.type == SprType::P) {
        std::vector<EdgeId> es;
        for (const auto &[id, ed] : skel.edges()) es.push_back(id);
        std::sort(es.begin(), es.end());
        std::vector<EdgeId> rest(es.begin() + 1, es.end());
        for (int i = 0; i < choice; ++i) std::next_permutation(rest.begin(), rest.end());
        VertexId c1 = *skel.vertices().begin();
        VertexId c2 = *skel.vertices().rbegin();
        rs.rot[c1].push_back(Dart{es[0], c1});
        for (EdgeId e : rest) rs.rot[c1].push_back(Dart{e, c1});
        rs.rot[c2].push_back(Dart{es[0], c2});
        for (auto it = rest.rbegin(); it != rest.rend(); ++it)
            rs.rot[c2].push_back(Dart{*it, c2});
        return rs;
    }
    if (n.type == SprType::S) {
        for (VertexId v : skel.vertices())
            for (EdgeId e : skel.incident_edges(v)) rs.rot[v].push_back(Dart{e, v});
        return rs;
    }
    auto emb = planar_embedding(skel);
    if (!emb) throw StructuralError("spr: R skeleton is not planar");
    rs = *emb;
    if (choice) rs.reverse_all();
    return rs;
}

void splice_child(RotationSystem &parent, const RotationSystem &child, EdgeId parent_edge,
                  EdgeId child_edge, VertexId c1, VertexId c2) {
    for (VertexId x : {c1, c2}) {
        const auto &ccyc = child.rot.at(x);
        int cpos = -1;
        for (int i = 0; i < static_cast<int>(ccyc.size()); ++i)
            if (ccyc[i] == Dart{child_edge, x}) cpos = i;
        if (cpos < 0) throw StructuralError("spr splice: child edge slot missing");
        std::vector<Dart> arc;
        for (std::size_t k = 1; k < ccyc.size(); ++k)
            arc.push_back(ccyc[(cpos + k) % ccyc.size()]);

        auto &pcyc = parent.rot.at(x);
        int ppos = -1;
        for (int i = 0; i < static_cast<int>(pcyc.size()); ++i)
            if (pcyc[i] == Dart{parent_edge, x}) ppos = i;
        if (ppos < 0) throw StructuralError("spr splice: parent edge slot missing");
        pcyc.erase(pcyc.begin() + ppos);
        pcyc.insert(pcyc.begin() + ppos, arc.begin(), arc.end());
    }
}

RotationSystem compose_rotation(const SprTree &t, int idx, const SprEmbeddingChoices &ch) {
    const SprNode &n = t.nodes[idx];
    int choice = 0;
    if (n.type == SprType::R) {
        auto it = ch.r_bits.find(idx);
        choice = it == ch.r_bits.end() ? 0 : it->second;
    } else if (n.type == SprType::P) {
        auto it = ch.p_orders.find(idx);
        choice = it == ch.p_orders.end() ? 0 : it->second;
    }
    RotationSystem rot = skeleton_rotation(n, choice);
    for (int c : n.children) {
        RotationSystem crot = compose_rotation(t, c, ch);
        const Edge &ve = t.nodes[c].skeleton.edge(t.nodes[c].parent_edge);
        splice_child(rot, crot, t.nodes[c].parent_side_edge, t.nodes[c].parent_edge,
                     ve.u, ve.v);
        for (auto &[v, cyc] : crot.rot)
            if (v != ve.u && v != ve.v) rot.rot[v] = std::move(cyc);
    }
    return rot;
}

}  // namespace

RotationSystem spr_rotation(const SprTree &t, const SprEmbeddingChoices &choices) {
    return compose_rotation(t, t.root, choices);
}

long long spr_embedding_count(const SprTree &t) {
    long long count = 1;
    bool first_point = true;
    for (int i = 0; i < t.size(); ++i) {
        const SprNode &n = t.nodes[i];
        if (n.type == SprType::R) {
            count *= first_point ? 1 : 2;
            first_point = false;
        } else if (n.type == SprType::P) {
            long long perms = factorial(static_cast<int>(n.skeleton.num_edges()) - 1);
            if (first_point) perms = std::max<long long>(1, perms / 2);
            count *= perms;
            first_point = false;
        }
        if (count > (1LL << 60)) return count;
    }
    return count;
}

void enumerate_embeddings_spr(const SprTree &t, long long budget,
                              const std::function<bool(const RotationSystem &)> &visit) {
    long long count = spr_embedding_count(t);
    if (count > budget)
        throw BudgetError("enumerate_embeddings_spr: budget exceeded (" +
                          std::to_string(count) + " > " + std::to_string(budget) + ")");

    struct ChoicePoint {
        int node;
        bool is_r;
        std::vector<int> options;
    };
    std::vector<ChoicePoint> points;
    bool first_point = true;
    for (int i = 0; i < t.size(); ++i) {
        const SprNode &n = t.nodes[i];
        if (n.type == SprType::R) {
            ChoicePoint cp{i, true, first_point ? std::vector<int>{0}
                                                : std::vector<int>{0, 1}};
            points.push_back(std::move(cp));
            first_point = false;
        } else if (n.type == SprType::P) {
            std::vector<EdgeId> es;
            for (const auto &[id, ed] : n.skeleton.edges()) es.push_back(id);
            std::sort(es.begin(), es.end());
            std::vector<EdgeId> perm(es.begin() + 1, es.end());
            ChoicePoint cp{i, false, {}};
            int rank = 0;
            do {
                bool keep = true;
                if (first_point) {
                    std::vector<EdgeId> rev(perm.rbegin(), perm.rend());
                    keep = perm <= rev;
                }
                if (keep) cp.options.push_back(rank);
                ++rank;
            } while (std::next_permutation(perm.begin(), perm.end()));
            points.push_back(std::move(cp));
            first_point = false;
        }
    }

    std::vector<std::size_t> pos(points.size(), 0);
    while (true) {
        SprEmbeddingChoices ch;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].is_r)
                ch.r_bits[points[i].node] = points[i].options[pos[i]];
            else
                ch.p_orders[points[i].node] = points[i].options[pos[i]];
        }
        if (!visit(spr_rotation(t, ch))) return;
        std::size_t i = 0;
        for (; i < points.size(); ++i) {
            if (++pos[i] < points[i].options.size()) break;
            pos[i] = 0;
        }
        if (i == points.size()) return;
    }
}

std::string SprTree::to_dot(const MultiGraph &g) const {
    std::ostringstream os;
    os << "digraph spr {\n  node [shape=box];\n";
    for (int i = 0; i < size(); ++i) {
        const SprNode &n = nodes[i];
        const char *ty = n.type == SprType::S ? "S" : n.type == SprType::P ? "P" : "R";
        os << "  n" << i << " [label=\"" << ty << " #" << i << "\\n";
        os << n.skeleton.num_vertices() << "v/" << n.skeleton.num_edges() << "e";
        if (i == root) os << " (root)";
        os << "\"];\n";
    }
    for (int i = 0; i < size(); ++i)
        if (nodes[i].parent >= 0) {
            Corners c = corners(i);
            os << "  n" << nodes[i].parent << " -> n" << i << " [label=\"" << c.c1
               << "," << c.c2 << "\"];\n";
        }
    os << "}\n";
    (void)g;
    return os.str();
}

}  // namespace fc
