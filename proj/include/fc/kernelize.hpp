#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fc/classify.hpp"
#include "fc/decomposition.hpp"
#include "fc/embedding.hpp"
#include "fc/multigraph.hpp"
#include "fc/profile.hpp"

namespace fc {

struct RuleEvent {
    std::string rule;
    int node_id = -1;
    int before = 0;   // vertex count before
    int after = 0;    // vertex count after
};

// Shared id well and trace for one kernelization run.
struct PipelineContext {
    int k = 1;
    int cap = 3;  // profile saturation cap, k + 2
    VertexId next_vertex = 0;
    EdgeId next_edge = 0;
    std::vector<RuleEvent> trace;
    bool no_fired = false;
    std::string no_rule;
    int no_node = -1;

    VertexId fresh_vertex() { return next_vertex++; }
    EdgeId fresh_edge() { return next_edge++; }
    void fire(const std::string &rule, int node, int before, int after) {
        trace.push_back({rule, node, before, after});
    }
    void fire_no(const std::string &rule, int node) {
        no_fired = true;
        no_rule = rule;
        no_node = node;
        trace.push_back({rule, node, 0, 0});
    }
};

// A replacement piece occupying a virtual-edge slot: its graph (without the
// corner edge), the two attachment vertices, and the capped profile of its
// enhancement. Profile corner bits: bit 0 <-> a, bit 1 <-> b.
struct Strand {
    MultiGraph graph;
    VertexId a = -1;
    VertexId b = -1;
    FcnProfile profile;
    bool terminal_bearing = false;

    FcnProfile profile_from(VertexId first) const;  // reorder bits if first == b
};

// Gadget library. Profiles are frozen constants validated against the
// profile oracle in the test suite.
Strand edge_strand(PipelineContext &ctx, VertexId a, VertexId b);
Strand p3_strand(PipelineContext &ctx, VertexId a, VertexId b);
Strand triangle_strand(PipelineContext &ctx, VertexId a, VertexId b);
Strand wheel_strand(PipelineContext &ctx, VertexId a, VertexId b, int j);
Strand diamond_strand(PipelineContext &ctx, VertexId a, VertexId b);
Strand w4_strand(PipelineContext &ctx, VertexId a, VertexId b);

// Profile composition. All values saturate at ctx cap.

// Chain of strands joined at joints[0..n]: joints.front()/back() are the
// corners; marked lists the terminal-marked joint vertices.
FcnProfile compose_s_chain(const std::vector<Strand> &strands,
                           const std::vector<VertexId> &joints,
                           const std::set<VertexId> &marked, int cap);

// Dipole of strands between c1 and c2 plus the corner edge.
FcnProfile compose_p_node(const std::vector<Strand> &strands, bool c1_marked,
                          bool c2_marked, int cap);

// Embedded reduced skeleton with strand slots on some edges.
FcnProfile compose_r_node(const MultiGraph &skel, const FaceSet &fs,
                          EdgeId corner_edge,
                          const std::map<EdgeId, const Strand *> &slots, int cap);

struct NiceKernel {
    MultiGraph graph;    // includes the corner edge
    Corners corners;
    FcnProfile profile;  // capped
};

// Elementary replacement operations (spec surface; used by the node
// kernelizers and exercised rule-by-rule in the acceptance suite).
// Each replaces the subgraph `comp` (attached at comp_corners) inside g.
MultiGraph replace_component(const MultiGraph &g, const std::set<VertexId> &comp_interior,
                             const Strand &replacement);

// Rigidization around U: triples edges at U, subdivides near U, and adds the
// planar cycles on the subdivision vertices. Returns the embedded result.
std::pair<MultiGraph, RotationSystem> rigidize(const MultiGraph &g,
                                               const RotationSystem &rot,
                                               const std::set<VertexId> &U,
                                               PipelineContext &ctx);

// All vertices lying in some separator of size at most 2.
std::set<VertexId> small_separator_vertices(const MultiGraph &g);

// Node kernelizers (leaves-to-root DP steps).
std::optional<NiceKernel> kernelize_node(const SprTree &t, int node, PipelineContext &ctx,
                                         const Classifier &cls,
                                         std::map<int, NiceKernel> &memo);

// Kernel of one biconnected graph (>= 1 edge). nullopt when a counting bound
// certified NO.
std::optional<NiceKernel> kernelize_block(const MultiGraph &block, PipelineContext &ctx);

struct KernelizeResult {
    Instance kernel;
    bool is_no = false;
    std::string decision_hint;  // "YES" or "NO" from the saturated DP values
    std::vector<RuleEvent> rules;
    int saturated_fcn = 0;  // component-composed, kAbove when > k
    std::map<VertexId, VertexId> vertex_origin;  // kernel vertex -> input vertex
};

KernelizeResult kernelize(const Instance &inst);

// Canonical certificates.
Instance canonical_no_instance();
Instance canonical_yes_instance();

}  // namespace fc
