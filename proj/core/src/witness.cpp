#include <algorithm>
#include <bit>
#include <deque>

#include "egt/solvers.hpp"

namespace egt {

namespace {

std::string triangle_text(const Triangle &t) {
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

WitnessCheck check_alpha1(const Graph &g, const EdgeIndex &index, const EdgeSet &a) {
    WitnessCheck by_triangle;
    for (const Triangle &t : triangles(g)) {
        const int inside = a.contains(index.id(t.a, t.b)) + a.contains(index.id(t.a, t.c)) +
                           a.contains(index.id(t.b, t.c));
        if (inside >= 2) {
            by_triangle = {false, "triangle " + triangle_text(t) + " holds " +
                                      std::to_string(inside) + " witness edges",
                           {t.a, t.b, t.c}};
            break;
        }
    }

    // N_A(v) must be independent in g for every v.
    WitnessCheck by_neighbourhood;
    for (int v = 0; v < g.order() && by_neighbourhood.ok; ++v) {
        Word na = 0;
        for (Word w = g.neighbors(v); w != 0; w &= w - 1) {
            const int u = std::countr_zero(w);
            if (a.contains(index.id(u, v))) na |= Word{1} << u;
        }
        for (Word w = na; w != 0; w &= w - 1) {
            const int u = std::countr_zero(w);
            const Word clash = g.neighbors(u) & na;
            if (clash != 0) {
                const int x = std::countr_zero(clash);
                std::array<int, 3> tri = {v, u, x};
                std::sort(tri.begin(), tri.end());
                by_neighbourhood = {false,
                                    "N_A(" + std::to_string(v) + ") contains adjacent " +
                                        std::to_string(u) + " and " + std::to_string(x),
                                    {tri[0], tri[1], tri[2]}};
                break;
            }
        }
    }

    if (by_triangle.ok != by_neighbourhood.ok)
        return {false, "triangle and neighbourhood checks disagree", {}};
    return by_triangle;
}

WitnessCheck check_tau(const Graph &g, const EdgeIndex &index, const EdgeSet &x) {
    const Graph rest = remove_edges(g, index, x);
    const auto left = triangles(rest);
    if (left.empty()) return {};
    const Triangle &t = left.front();
    return {false, "triangle " + triangle_text(t) + " survives deletion", {t.a, t.b, t.c}};
}

/// Two-colours g minus x; on failure returns an odd cycle.
WitnessCheck check_taub(const Graph &g, const EdgeIndex &index, const EdgeSet &x) {
    const Graph rest = remove_edges(g, index, x);
    const int n = rest.order();
    std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (Word w = rest.neighbors(u); w != 0; w &= w - 1) {
                const int v = std::countr_zero(w);
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    // Walk both endpoints up to their common ancestor.
                    std::vector<int> left{u}, right{v};
                    int a = u, b = v;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    std::string text = "odd cycle";
                    for (int c : left) text += " " + std::to_string(c);
                    return {false, text, left};
                }
            }
        }
    }
    return {};
}

}  // namespace

WitnessCheck validate_witness(const Graph &g, Invariant which, const EdgeSet &witness) {
    const EdgeIndex index(g);
    if (witness.owner() != index.fingerprint() || witness.capacity() != index.size())
        return {false, "witness is not over this graph's edge index", {}};
    switch (which) {
    case Invariant::Alpha1: return check_alpha1(g, index, witness);
    case Invariant::Tau: return check_tau(g, index, witness);
    case Invariant::Taub: return check_taub(g, index, witness);
    }
    return {false, "unknown invariant", {}};
}

}  // namespace egt
