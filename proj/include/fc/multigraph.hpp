#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

using VertexId = int;
using EdgeId = int;

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EdgeKind { Real, Virtual };

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    EdgeKind kind = EdgeKind::Real;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool incident(VertexId w) const { return w == u || w == v; }
};

// Labeled multigraph with stable vertex/edge ids. Parallel edges are allowed,
// self-loops are not. Ids are never reused within a pipeline run.
class MultiGraph {
  public:
    MultiGraph() = default;

    VertexId add_vertex();
    VertexId add_vertex(VertexId id);  // id must be unused and >= 0
    EdgeId add_edge(VertexId u, VertexId v, EdgeKind kind = EdgeKind::Real);
    EdgeId add_edge(EdgeId id, VertexId u, VertexId v, EdgeKind kind);

    void delete_edge(EdgeId e);
    void delete_vertex(VertexId v);  // vertex must be isolated

    bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
    const Edge &edge(EdgeId e) const;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::set<VertexId> &vertices() const { return vertices_; }
    const std::map<EdgeId, Edge> &edges() const { return edges_; }

    void set_terminal(VertexId v, bool mark);
    bool is_terminal(VertexId v) const { return terminals_.count(v) != 0; }
    const std::set<VertexId> &terminals() const { return terminals_; }

    // Edge ids incident to v, ascending.
    std::vector<EdgeId> incident_edges(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  // with multiplicity, sorted
    int degree(VertexId v) const;

    // Endpoints merged into the smaller id; self-loops dropped, parallels kept.
    // The merged vertex is terminal iff either endpoint was.
    void contract_edge(EdgeId e);

    // Replaces e by a length-2 path through a fresh vertex; returns the new vertex.
    VertexId subdivide_edge(EdgeId e, bool make_terminal);

    bool is_simple() const;
    bool is_connected() const;

    // Connected components as vertex sets (isolated vertices included).
    std::vector<std::set<VertexId>> components() const;

    // Subgraph induced by the given edge set (vertices = endpoints), ids kept.
    MultiGraph edge_subgraph(const std::vector<EdgeId> &es) const;

    VertexId next_vertex_id() const { return next_vertex_; }
    EdgeId next_edge_id() const { return next_edge_; }
    void reserve_vertex_ids(VertexId at_least);
    void reserve_edge_ids(EdgeId at_least);

    bool operator==(const MultiGraph &o) const;

  private:
    std::set<VertexId> vertices_;
    std::set<VertexId> terminals_;
    std::map<EdgeId, Edge> edges_;
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;
};

// A problem instance: simple planar graph, terminal set, budget k.
struct Instance {
    MultiGraph graph;
    int k = 0;
};

// Flat adjacency snapshot for algorithms that need fast traversal.
struct AdjacencyView {
    std::vector<VertexId> idx_to_vertex;
    std::map<VertexId, int> vertex_to_idx;
    // CSR-style arrays over vertex indices.
    std::vector<int> offsets;
    std::vector<int> targets;   // neighbor vertex index
    std::vector<EdgeId> via;    // edge id used

    explicit AdjacencyView(const MultiGraph &g);
    int n() const { return static_cast<int>(idx_to_vertex.size()); }
};

}  // namespace fc
