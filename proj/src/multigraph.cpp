#include "fc/multigraph.hpp"

#include <algorithm>
#include <cassert>

namespace fc {

VertexId MultiGraph::add_vertex() { return add_vertex(next_vertex_); }

VertexId MultiGraph::add_vertex(VertexId id) {
    if (id < 0 || vertices_.count(id))
        throw StructuralError("add_vertex: id unusable: " + std::to_string(id));
    vertices_.insert(id);
    next_vertex_ = std::max(next_vertex_, id + 1);
    return id;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, EdgeKind kind) {
    return add_edge(next_edge_, u, v, kind);
}

EdgeId MultiGraph::add_edge(EdgeId id, VertexId u, VertexId v, EdgeKind kind) {
    if (u == v) throw StructuralError("add_edge: self-loop forbidden");
    if (!has_vertex(u) || !has_vertex(v))
        throw StructuralError("add_edge: endpoint missing");
    if (id < 0 || edges_.count(id))
        throw StructuralError("add_edge: id unusable: " + std::to_string(id));
    edges_[id] = Edge{u, v, kind};
    next_edge_ = std::max(next_edge_, id + 1);
    return id;
}

void MultiGraph::delete_edge(EdgeId e) {
    if (!edges_.erase(e)) throw StructuralError("delete_edge: unknown edge id");
}

void MultiGraph::delete_vertex(VertexId v) {
    if (!has_vertex(v)) throw StructuralError("delete_vertex: unknown vertex");
    for (const auto &[id, ed] : edges_)
        if (ed.incident(v)) throw StructuralError("delete_vertex: vertex not isolated");
    vertices_.erase(v);
    terminals_.erase(v);
}

const Edge &MultiGraph::edge(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw StructuralError("edge: unknown edge id");
    return it->second;
}

void MultiGraph::set_terminal(VertexId v, bool mark) {
    if (!has_vertex(v)) throw StructuralError("set_terminal: unknown vertex");
    if (mark)
        terminals_.insert(v);
    else
        terminals_.erase(v);
}

std::vector<EdgeId> MultiGraph::incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (const auto &[id, ed] : edges_)
        if (ed.incident(v)) out.push_back(id);
    return out;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto &[id, ed] : edges_)
        if (ed.incident(v)) out.push_back(ed.other(v));
    std::sort(out.begin(), out.end());
    return out;
}

int MultiGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto &[id, ed] : edges_)
        if (ed.incident(v)) ++d;
    return d;
}

void MultiGraph::contract_edge(EdgeId e) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw StructuralError("contract_edge: unknown edge id");
    VertexId keep = std::min(it->second.u, it->second.v);
    VertexId drop = std::max(it->second.u, it->second.v);
    bool term = is_terminal(keep) || is_terminal(drop);
    edges_.erase(it);
    std::vector<EdgeId> loops;
    for (auto &[id, ed] : edges_) {
        if (ed.u == drop) ed.u = keep;
        if (ed.v == drop) ed.v = keep;
        if (ed.u == ed.v) loops.push_back(id);
    }
    for (EdgeId id : loops) edges_.erase(id);
    vertices_.erase(drop);
    terminals_.erase(drop);
    set_terminal(keep, term);
}

VertexId MultiGraph::subdivide_edge(EdgeId e, bool make_terminal) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw StructuralError("subdivide_edge: unknown edge id");
    Edge ed = it->second;
    edges_.erase(it);
    VertexId mid = add_vertex();
    add_edge(ed.u, mid, ed.kind);
    add_edge(mid, ed.v, ed.kind);
    if (make_terminal) set_terminal(mid, true);
    return mid;
}

bool MultiGraph::is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto &[id, ed] : edges_) {
        auto key = std::minmax(ed.u, ed.v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

bool MultiGraph::is_connected() const {
    return components().size() <= 1;
}

std::vector<std::set<VertexId>> MultiGraph::components() const {
    std::vector<std::set<VertexId>> out;
    if (vertices_.empty()) return out;
    AdjacencyView adj(*this);
    std::vector<int> comp(adj.n(), -1);
    int nc = 0;
    std::vector<int> stack;
    for (int s = 0; s < adj.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int j = adj.offsets[x]; j < adj.offsets[x + 1]; ++j) {
                int y = adj.targets[j];
                if (comp[y] < 0) {
                    comp[y] = nc;
                    stack.push_back(y);
                }
            }
        }
        ++nc;
    }
    out.resize(nc);
    for (int i = 0; i < adj.n(); ++i) out[comp[i]].insert(adj.idx_to_vertex[i]);
    return out;
}

MultiGraph MultiGraph::edge_subgraph(const std::vector<EdgeId> &es) const {
    MultiGraph out;
    for (EdgeId id : es) {
        const Edge &ed = edge(id);
        if (!out.has_vertex(ed.u)) {
            out.add_vertex(ed.u);
            if (is_terminal(ed.u)) out.set_terminal(ed.u, true);
        }
        if (!out.has_vertex(ed.v)) {
            out.add_vertex(ed.v);
            if (is_terminal(ed.v)) out.set_terminal(ed.v, true);
        }
        out.add_edge(id, ed.u, ed.v, ed.kind);
    }
    out.next_vertex_ = next_vertex_;
    out.next_edge_ = next_edge_;
    return out;
}

void MultiGraph::reserve_vertex_ids(VertexId at_least) {
    next_vertex_ = std::max(next_vertex_, at_least);
}

void MultiGraph::reserve_edge_ids(EdgeId at_least) {
    next_edge_ = std::max(next_edge_, at_least);
}

bool MultiGraph::operator==(const MultiGraph &o) const {
    if (vertices_ != o.vertices_ || terminals_ != o.terminals_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    // Compare edge multisets by (endpoints, kind); ids may differ.
    std::multiset<std::tuple<VertexId, VertexId, int>> a, b;
    for (const auto &[id, ed] : edges_)
        a.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v), static_cast<int>(ed.kind)});
    for (const auto &[id, ed] : o.edges_)
        b.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v), static_cast<int>(ed.kind)});
    return a == b;
}

AdjacencyView::AdjacencyView(const MultiGraph &g) {
    idx_to_vertex.assign(g.vertices().begin(), g.vertices().end());
    for (int i = 0; i < static_cast<int>(idx_to_vertex.size()); ++i)
        vertex_to_idx[idx_to_vertex[i]] = i;
    std::vector<int> deg(idx_to_vertex.size(), 0);
    for (const auto &[id, ed] : g.edges()) {
        ++deg[vertex_to_idx[ed.u]];
        ++deg[vertex_to_idx[ed.v]];
    }
    offsets.assign(idx_to_vertex.size() + 1, 0);
    for (std::size_t i = 0; i < deg.size(); ++i) offsets[i + 1] = offsets[i] + deg[i];
    targets.resize(offsets.back());
    via.resize(offsets.back());
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (const auto &[id, ed] : g.edges()) {
        int a = vertex_to_idx[ed.u], b = vertex_to_idx[ed.v];
        targets[fill[a]] = b;
        via[fill[a]++] = id;
        targets[fill[b]] = a;
        via[fill[b]++] = id;
    }
}

}  // namespace fc
