#include "fc/harness.hpp"

#include <algorithm>
#include <set>

#include "fc/decomposition.hpp"
#include "fc/embedding.hpp"

namespace fc {

// xoshiro256** — small, fast, fully specified here so streams never depend
// on library internals.
Rng::Rng(uint64_t seed) {
    uint64_t x = seed + 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 4; ++i) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        s[i] = z ^ (z >> 31);
    }
}

static inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

uint64_t Rng::next() {
    uint64_t result = rotl(s[1] * 5, 7) * 9;
    uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

int Rng::below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }

double Rng::unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

Instance gen_planar(const GenParams &params) {
    if (params.n < 1) throw StructuralError("gen_planar: n must be positive");
    Rng rng(params.seed);
    Instance inst;
    inst.k = params.k;
    MultiGraph &g = inst.graph;

    if (params.n == 1) {
        g.add_vertex(0);
    } else if (params.n == 2) {
        g.add_vertex(0);
        g.add_vertex(1);
        g.add_edge(0, 1, EdgeKind::Real);
    } else {
        // Stacked triangulation: repeatedly split a random triangle face.
        g.add_vertex(0);
        g.add_vertex(1);
        g.add_vertex(2);
        g.add_edge(0, 1, EdgeKind::Real);
        g.add_edge(1, 2, EdgeKind::Real);
        g.add_edge(0, 2, EdgeKind::Real);
        std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
        for (int v = 3; v < params.n; ++v) {
            int fi = rng.below(static_cast<int>(faces.size()));
            auto tri = faces[fi];
            g.add_vertex(v);
            for (VertexId u : tri) g.add_edge(v, u, EdgeKind::Real);
            faces.erase(faces.begin() + fi);
            faces.push_back({tri[0], tri[1], v});
            faces.push_back({tri[1], tri[2], v});
            faces.push_back({tri[0], tri[2], v});
        }
        // Thin to the target density.
        long long target = static_cast<long long>(params.density * (3.0 * params.n - 6.0) + 0.5);
        std::vector<EdgeId> ids;
        for (const auto &[id, ed] : g.edges()) ids.push_back(id);
        while (static_cast<long long>(g.num_edges()) > std::max(0LL, target)) {
            EdgeId pick = ids[rng.below(static_cast<int>(ids.size()))];
            if (g.has_edge(pick)) g.delete_edge(pick);
            ids.erase(std::remove(ids.begin(), ids.end(), pick), ids.end());
            if (ids.empty()) break;
        }
    }
    for (VertexId v : g.vertices())
        if (rng.unit() < params.terminal_fraction) g.set_terminal(v, true);

    if (!g.is_simple() || !is_planar(g))
        throw StructuralError("gen_planar: generator produced an invalid instance");
    return inst;
}

void enumerate_connected_planar(int n,
                                const std::function<void(const MultiGraph &)> &visit) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    int m = static_cast<int>(all.size());
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        MultiGraph g;
        for (int i = 0; i < n; ++i) g.add_vertex(i);
        for (int b = 0; b < m; ++b)
            if (mask & (1LL << b)) g.add_edge(all[b].first, all[b].second, EdgeKind::Real);
        if (!g.is_connected()) continue;
        if (!is_planar(g)) continue;
        visit(g);
    }
}

MultiGraph gen_biconnected_small(uint64_t seed, int max_n, long long rotation_budget) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = 4 + rng.below(std::max(1, max_n - 3));
        GenParams p;
        p.seed = rng.next();
        p.n = n;
        p.density = 0.55 + 0.45 * rng.unit();
        p.terminal_fraction = 0;
        Instance inst = gen_planar(p);
        MultiGraph &g = inst.graph;
        if (!g.is_connected() || g.num_vertices() < 4) continue;
        if (!is_biconnected(g)) {
            // Largest block instead of resampling from scratch.
            BlockCutTree bct = block_cut_tree(g);
            std::size_t best = 0;
            for (std::size_t b = 1; b < bct.blocks.size(); ++b)
                if (bct.blocks[b].size() > bct.blocks[best].size()) best = b;
            if (bct.blocks.empty() || bct.blocks[best].size() < 4) continue;
            g = g.edge_subgraph(bct.block_edges[best]);
        }
        if (planar_rotation_count_bound(g) > rotation_budget) continue;
        if (g.num_vertices() < 4) continue;
        return g;
    }
    throw StructuralError("gen_biconnected_small: no instance found");
}

}  // namespace fc
