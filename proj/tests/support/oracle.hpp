#pragma once

// Test-only reference computations. Everything here works from a plain adjacency
// matrix so it shares no code path with the library beyond Graph::has_edge.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "egt/graph.hpp"

namespace egt::testing {

struct Naive {
    int n = 0;
    std::vector<std::vector<bool>> adj;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> tris;  // vertex triples a<b<c

    explicit Naive(const Graph &g) : n(g.order()), adj(n, std::vector<bool>(n, false)) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) adj[u][v] = g.has_edge(u, v);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v]) edges.emplace_back(u, v);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (adj[a][b] && adj[a][c] && adj[b][c]) tris.push_back({a, b, c});
    }

    int edge_pos(int u, int v) const {
        if (u > v) std::swap(u, v);
        const auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
        return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
    }

    std::vector<std::uint32_t> triangle_masks() const {
        std::vector<std::uint32_t> out;
        for (auto t : tris)
            out.push_back((1U << edge_pos(t[0], t[1])) | (1U << edge_pos(t[0], t[2])) |
                          (1U << edge_pos(t[1], t[2])));
        return out;
    }

    int alpha1() const {
        const auto masks = triangle_masks();
        int best = 0;
        for (std::uint32_t s = 0; s < (1U << edges.size()); ++s) {
            bool ok = true;
            for (auto t : masks) ok = ok && __builtin_popcount(s & t) <= 1;
            if (ok) best = std::max(best, __builtin_popcount(s));
        }
        return best;
    }

    int tau() const {
        const auto masks = triangle_masks();
        int best = static_cast<int>(edges.size());
        for (std::uint32_t s = 0; s < (1U << edges.size()); ++s) {
            bool ok = true;
            for (auto t : masks) ok = ok && (s & t) != 0;
            if (ok) best = std::min(best, __builtin_popcount(s));
        }
        return best;
    }

    int cut(std::uint64_t side) const {
        int c = 0;
        for (auto [u, v] : edges) c += ((side >> u) & 1U) != ((side >> v) & 1U);
        return c;
    }

    int maxcut() const {
        int best = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) best = std::max(best, cut(s));
        return best;
    }

    int taub() const { return static_cast<int>(edges.size()) - maxcut(); }

    int independence() const {
        int best = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool ok = true;
            for (auto [u, v] : edges) ok = ok && !(((s >> u) & 1U) && ((s >> v) & 1U));
            if (ok) best = std::max(best, __builtin_popcountll(s));
        }
        return best;
    }

    /// Four vertices spanning exactly five edges.
    bool induced_k4_minus() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        const int e = adj[a][b] + adj[a][c] + adj[a][d] + adj[b][c] + adj[b][d] + adj[c][d];
                        if (e == 5) return true;
                    }
        return false;
    }
};

inline Graph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Labeled graph on n vertices from an edge-subset mask over lexicographic pairs.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) g.add_edge(u, v);
    return g;
}

}  // namespace egt::testing
