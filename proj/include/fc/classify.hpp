#pragma once

#include <map>
#include <set>
#include <string>

#include "fc/decomposition.hpp"
#include "fc/multigraph.hpp"

namespace fc {

enum class ComponentClass { TerminalFree, Unproblematic, SemiProblematic, Problematic };

const char *to_string(ComponentClass c);

// Memoized recognition DPs over the sub-SPR-tree of a virtual component.
// All predicates treat the root component (corner edge = smallest real edge)
// uniformly with proper virtual components.
class Classifier {
  public:
    explicit Classifier(const SprTree &t);

    // Terminals of the component (vertices of the induced graph), corners included.
    const std::set<VertexId> &component_terminals(int node) const;

    // Component has no terminals besides possibly its corners.
    bool is_terminal_free(int node) const;

    // Some embedding of the enhancement has one external face covering all
    // terminals.
    bool is_unproblematic(int node) const;

    // Some embedding of the enhancement covers all terminals jointly with the
    // two external faces.
    bool is_efc(int node) const;

    // The bare component has face cover number at most one (apex planarity
    // test; the covering face need not see the corner edge).
    bool single_face_coverable(int node) const;

    ComponentClass classify(int node, int k = 0) const;

  private:
    bool node_has_interior_terminal(int node) const;  // terminal beyond own corners
    const SprTree &t_;
    std::map<int, std::set<VertexId>> terminals_;
    mutable std::map<int, bool> unprob_, efc_, sfc_;
};

ComponentClass classify(const SprTree &t, int node, int k = 0);

}  // namespace fc
