#include <bit>

#include "egt/solvers.hpp"

namespace egt {

namespace {

std::vector<std::uint32_t> triangle_masks(const Graph &g, const EdgeIndex &index) {
    std::vector<std::uint32_t> out;
    for (const Triangle &t : triangles(g)) {
        out.push_back((1U << index.id(t.a, t.b)) | (1U << index.id(t.a, t.c)) |
                      (1U << index.id(t.b, t.c)));
    }
    return out;
}

EdgeSet from_mask(const EdgeIndex &index, std::uint32_t mask) {
    EdgeSet s(index);
    for (; mask != 0; mask &= mask - 1) s.insert(std::countr_zero(mask));
    return s;
}

}  // namespace

SolveResult brute_force(const Graph &g, Invariant which, const BruteForceLimits &limits) {
    SolveResult r;
    r.solver_kind = SolverKind::BruteForce;
    const EdgeIndex index(g);
    const int m = index.size();

    if (which == Invariant::Taub) {
        const int n = g.order();
        if (n > limits.max_vertices)
            throw CapacityError("brute-force bipartition enumeration limited to n <= " +
                                std::to_string(limits.max_vertices));
        int best_cut = 0;
        Word best_side = 0;
        const Word sides = n <= 1 ? 1 : Word{1} << (n - 1);
        for (Word side = 0; side < sides; ++side) {
            ++r.nodes_explored;
            const int c = cut_size(g, VertexSet{side});
            if (c > best_cut) {
                best_cut = c;
                best_side = side;
            }
        }
        r.witness = EdgeSet(index);
        const VertexSet s{best_side};
        for (int id = 0; id < m; ++id) {
            auto [u, v] = index.endpoints(id);
            if (s.contains(u) == s.contains(v)) r.witness.insert(id);
        }
        r.value = m - best_cut;
        r.bipartition = s;
        return r;
    }

    if (m > limits.max_edges || m > 31)
        throw CapacityError("brute-force edge-subset enumeration limited to m <= " +
                            std::to_string(limits.max_edges));
    const auto tris = triangle_masks(g, index);
    const std::uint32_t subsets = 1U << m;

    if (which == Invariant::Alpha1) {
        std::uint32_t best = 0;
        int best_size = 0;
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            ++r.nodes_explored;
            const int size = std::popcount(mask);
            if (size <= best_size) continue;
            bool independent = true;
            for (auto t : tris) {
                if (std::popcount(mask & t) >= 2) {
                    independent = false;
                    break;
                }
            }
            if (independent) {
                best = mask;
                best_size = size;
            }
        }
        r.value = best_size;
        r.witness = from_mask(index, best);
        return r;
    }

    std::uint32_t best = subsets - 1;
    int best_size = m;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        ++r.nodes_explored;
        const int size = std::popcount(mask);
        if (size >= best_size) continue;
        bool cover = true;
        for (auto t : tris) {
            if ((mask & t) == 0) {
                cover = false;
                break;
            }
        }
        if (cover) {
            best = mask;
            best_size = size;
        }
    }
    r.value = best_size;
    r.witness = from_mask(index, best);
    return r;
}

}  // namespace egt
