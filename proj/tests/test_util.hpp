#pragma once

#include "fc/multigraph.hpp"

#include <utility>
#include <vector>

namespace fc::testutil {

// Builds a simple graph on vertices 0..n-1 from an edge list.
inline MultiGraph make_graph(int n, const std::vector<std::pair<int, int>> &es) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (auto [u, v] : es) g.add_edge(u, v, EdgeKind::Real);
    return g;
}

inline MultiGraph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return make_graph(n, es);
}

inline MultiGraph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return make_graph(n, es);
}

// Hub n-1 joined to rim cycle 0..n-2.
inline MultiGraph wheel(int rim) {
    MultiGraph g = cycle(rim);
    VertexId hub = g.add_vertex(rim);
    for (int i = 0; i < rim; ++i) g.add_edge(hub, i, EdgeKind::Real);
    return g;
}

}  // namespace fc::testutil
