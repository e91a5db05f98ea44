#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fc/embedding.hpp"
#include "fc/multigraph.hpp"

namespace fc {

struct BlockCutTree {
    // Blocks as vertex sets plus the edge ids inside each block.
    std::vector<std::set<VertexId>> blocks;
    std::vector<std::vector<EdgeId>> block_edges;
    std::set<VertexId> cutvertices;

    bool block_contains(int b, VertexId v) const { return blocks[b].count(v) != 0; }
    // Blocks incident to a cutvertex, ascending.
    std::vector<int> blocks_of(VertexId v) const;
};

// Blocks are the maximal biconnected subgraphs; every edge in exactly one block.
BlockCutTree block_cut_tree(const MultiGraph &g);

bool is_biconnected(const MultiGraph &g);

// Articulation vertices of g - skip (skip = -1 keeps the whole graph).
std::vector<VertexId> articulation_vertices(const MultiGraph &g, VertexId skip = -1);

// Finds a split pair of a biconnected multigraph (a pair with >=2 parallel
// edges, or a separation pair), or nullopt when 3-connected/cycle/dipole.
std::optional<std::pair<VertexId, VertexId>> find_split_pair(const MultiGraph &g);

enum class SprType { S, P, R };

struct SprNode {
    SprType type = SprType::S;
    MultiGraph skeleton;   // vertex ids shared with the input graph
    int parent = -1;       // node index, -1 at the root
    EdgeId parent_edge = -1;      // virtual edge in THIS skeleton toward the parent
    EdgeId parent_side_edge = -1; // matching virtual edge in the parent's skeleton
    std::vector<int> children;
};

struct Corners {
    VertexId c1 = -1;   // c1 < c2
    VertexId c2 = -1;
    EdgeId corner_edge = -1;
};

class SprTree {
  public:
    std::vector<SprNode> nodes;
    int root = -1;

    const SprNode &node(int i) const { return nodes.at(i); }
    int size() const { return static_cast<int>(nodes.size()); }

    // Ordered corner pair of a node: the endpoints of its parent virtual edge,
    // smaller id first. At the root, the endpoints of the designated corner
    // edge (the smallest real edge id in the root skeleton).
    Corners corners(int node_idx) const;
    EdgeId root_corner_edge() const;

    // Child node index associated to a virtual edge in node's skeleton.
    int child_at(int node_idx, EdgeId skeleton_edge) const;

    std::vector<int> subtree(int node_idx) const;   // preorder
    std::string to_dot(const MultiGraph &g) const;
};

// Canonical SPR-tree of a biconnected simple planar graph with >= 3 vertices.
SprTree spr_tree(const MultiGraph &g);

// Recursive replacement of virtual edges by child graphs; contains no virtual
// edges and carries the original terminal marks.
MultiGraph induced_graph(const SprTree &t, int node_idx);

// Induced graph plus the corner edge (fresh edge id; at the root the corner
// edge is an existing real edge).
std::pair<MultiGraph, Corners> enhancement(const SprTree &t, int node_idx);

struct SprEmbeddingChoices {
    std::map<int, int> r_bits;       // R node -> 0/1 mirror
    std::map<int, int> p_orders;     // P node -> permutation rank
};

// Number of choice vectors the SPR enumerator would emit (after quotienting by
// the mirror of the whole embedding at the first choice point).
long long spr_embedding_count(const SprTree &t);

// Streams one rotation system of the induced graph of the root per choice
// vector. Every face multiset of a planar embedding appears for some vector.
void enumerate_embeddings_spr(const SprTree &t, long long budget,
                              const std::function<bool(const RotationSystem &)> &visit);

// Rotation of induced_graph(t, root) for fixed choices.
RotationSystem spr_rotation(const SprTree &t, const SprEmbeddingChoices &choices);

}  // namespace fc
