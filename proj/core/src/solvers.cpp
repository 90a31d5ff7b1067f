#include "egt/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace egt {

std::string_view to_string(Invariant which) {
    switch (which) {
    case Invariant::Alpha1: return "alpha1";
    case Invariant::Tau: return "tau";
    case Invariant::Taub: return "taub";
    }
    return "?";
}

std::string_view to_string(SolverKind kind) {
    switch (kind) {
    case SolverKind::BranchAndBound: return "branch-and-bound";
    case SolverKind::CutEnumeration: return "cut-enumeration";
    case SolverKind::BruteForce: return "brute-force";
    }
    return "?";
}

std::vector<std::array<int, 3>> triangle_edge_ids(const Graph &g, const EdgeIndex &index) {
    std::vector<std::array<int, 3>> out;
    for (const Triangle &t : triangles(g))
        out.push_back({index.id(t.a, t.b), index.id(t.a, t.c), index.id(t.b, t.c)});
    return out;
}

ConflictGraph conflict_graph(const Graph &g, const EdgeIndex &index) {
    ConflictGraph cg{BitGraph(index.size(), Bitset(index.size()))};
    for (const auto &t : triangle_edge_ids(g, index)) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j)
                if (i != j) cg.adj[t[i]].set(t[j]);
        }
    }
    return cg;
}

SolveResult alpha1_exact(const Graph &g) {
    const EdgeIndex index(g);
    const ConflictGraph cg = conflict_graph(g, index);
    MisResult mis = maximum_independent_set(cg.adj);
    SolveResult r;
    r.value = static_cast<int>(mis.vertices.size());
    r.witness = EdgeSet::from_ids(index, mis.vertices);
    r.nodes_explored = mis.nodes;
    r.solver_kind = SolverKind::BranchAndBound;
    return r;
}

namespace {

/// Minimum set of edges meeting every triangle.
///
/// Branches on the three edges of one uncovered triangle: the i-th child deletes
/// edge i and marks edges 0..i-1 as kept, so no cover is generated twice. Triangles
/// left with one non-kept edge force its deletion. Nodes are cut by a greedy packing of
/// uncovered triangles with pairwise disjoint non-kept edges.
class TauSearch {
public:
    TauSearch(int m, std::vector<std::array<int, 3>> tris) : m_(m), tris_(std::move(tris)) {}

    std::pair<Bitset, std::uint64_t> run() {
        greedy_upper_bound();
        search(Bitset(m_), Bitset(m_), 0);
        return {best_, nodes_};
    }

private:
    bool covered(const std::array<int, 3> &t, const Bitset &del) const {
        return del.test(t[0]) || del.test(t[1]) || del.test(t[2]);
    }

    void greedy_upper_bound() {
        Bitset del(m_);
        std::vector<int> hits(m_);
        while (true) {
            std::fill(hits.begin(), hits.end(), 0);
            bool any = false;
            for (const auto &t : tris_) {
                if (covered(t, del)) continue;
                any = true;
                for (int e : t) ++hits[e];
            }
            if (!any) break;
            const auto it = std::max_element(hits.begin(), hits.end());
            del.set(static_cast<int>(it - hits.begin()));
        }
        // Drop deletions that are not needed, highest id first.
        for (int e = m_ - 1; e >= 0; --e) {
            if (!del.test(e)) continue;
            del.reset(e);
            const bool still_cover = std::all_of(tris_.begin(), tris_.end(),
                                                 [&](const auto &t) { return covered(t, del); });
            if (!still_cover) del.set(e);
        }
        best_ = del;
        best_size_ = del.count();
    }

    void search(Bitset del, Bitset keep, int del_count) {
        ++nodes_;
        if (del_count >= best_size_) return;

        for (bool changed = true; changed;) {
            changed = false;
            for (const auto &t : tris_) {
                if (covered(t, del)) continue;
                int free_edge = -1;
                int free_count = 0;
                for (int e : t) {
                    if (!keep.test(e)) {
                        free_edge = e;
                        ++free_count;
                    }
                }
                if (free_count == 0) return;
                if (free_count == 1) {
                    del.set(free_edge);
                    if (++del_count >= best_size_) return;
                    changed = true;
                }
            }
        }

        uncovered_.clear();
        for (std::size_t i = 0; i < tris_.size(); ++i)
            if (!covered(tris_[i], del)) uncovered_.push_back(static_cast<int>(i));
        if (uncovered_.empty()) {
            best_ = del;
            best_size_ = del_count;
            return;
        }

        std::vector<int> degree(m_, 0);
        for (int i : uncovered_)
            for (int e : tris_[i])
                if (!keep.test(e)) ++degree[e];

        // Packing bound: triangles with two free edges first, then the rest.
        Bitset used(m_);
        int packed = 0;
        for (int pass = 2; pass <= 3; ++pass) {
            for (int i : uncovered_) {
                const auto &t = tris_[i];
                int free_count = 0;
                bool clash = false;
                for (int e : t) {
                    if (keep.test(e)) continue;
                    ++free_count;
                    clash = clash || used.test(e);
                }
                if (free_count != pass || clash) continue;
                for (int e : t)
                    if (!keep.test(e)) used.set(e);
                ++packed;
            }
        }
        if (del_count + packed >= best_size_) return;

        int chosen = -1;
        int chosen_score = std::numeric_limits<int>::max();
        for (int i : uncovered_) {
            int score = 0;
            for (int e : tris_[i])
                if (!keep.test(e)) score += degree[e];
            if (score < chosen_score) {
                chosen = i;
                chosen_score = score;
            }
        }

        std::vector<int> branch;
        for (int e : tris_[chosen])
            if (!keep.test(e)) branch.push_back(e);
        std::stable_sort(branch.begin(), branch.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });

        Bitset child_keep = keep;
        for (int e : branch) {
            Bitset child_del = del;
            child_del.set(e);
            search(child_del, child_keep, del_count + 1);
            child_keep.set(e);
        }
    }

    int m_;
    std::vector<std::array<int, 3>> tris_;
    std::vector<int> uncovered_;
    Bitset best_;
    int best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult tau_exact(const Graph &g) {
    const EdgeIndex index(g);
    auto [best, nodes] = TauSearch(index.size(), triangle_edge_ids(g, index)).run();
    SolveResult r;
    r.witness = EdgeSet(index);
    for (int e = best.first(); e >= 0; e = best.next(e)) r.witness.insert(e);
    r.value = r.witness.size();
    r.nodes_explored = nodes;
    r.solver_kind = SolverKind::BranchAndBound;
    return r;
}

MaxCut max_cut(const Graph &g, const SolverOptions &options) {
    const int n = g.order();
    if (n > options.maxcut_limit)
        throw CapacityError("exact max-cut limited to n <= " + std::to_string(options.maxcut_limit) +
                            ", got n = " + std::to_string(n));
    MaxCut best;
    if (n <= 1) return best;

    // Vertex n-1 stays outside the side; walk the other n-1 bits in Gray-code order.
    Word side = 0;
    int cut = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        const int v = std::countr_zero(k);
        const Word own = ((side >> v) & 1U) ? side : ~side;
        const int same_side = std::popcount(g.neighbors(v) & own);
        cut += 2 * same_side - g.degree(v);
        side ^= Word{1} << v;
        if (cut > best.value) {
            best.value = cut;
            best.side = VertexSet{side};
        }
    }
    return best;
}

SolveResult taub_exact(const Graph &g, const SolverOptions &options) {
    const MaxCut cut = max_cut(g, options);
    const EdgeIndex index(g);
    SolveResult r;
    r.witness = EdgeSet(index);
    for (int id = 0; id < index.size(); ++id) {
        auto [u, v] = index.endpoints(id);
        if (cut.side.contains(u) == cut.side.contains(v)) r.witness.insert(id);
    }
    r.value = r.witness.size();
    r.nodes_explored = g.order() <= 1 ? 0 : (std::uint64_t{1} << (g.order() - 1));
    r.solver_kind = SolverKind::CutEnumeration;
    r.bipartition = cut.side;
    return r;
}

Invariants compute_invariants(const Graph &g, const SolverOptions &options) {
    return {alpha1_exact(g).value, tau_exact(g).value, taub_exact(g, options).value};
}

}  // namespace egt
