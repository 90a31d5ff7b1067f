#include "egt/structure.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace egt {

bool is_triangular(const Graph &g) {
    for (auto [u, v] : g.edges())
        if ((g.neighbors(u) & g.neighbors(v)) == 0) return false;
    return true;
}

bool mindeg_filter(const Graph &g) { return 2 * g.min_degree() > g.order(); }

CutReport cut_report(const Graph &g, VertexSet s) {
    CutReport r{s, cut_size(g, s), 0, 0};
    r.twice_cut = 2L * r.cut_size;
    r.threshold = static_cast<long>(s.size()) * (g.order() - s.size());
    return r;
}

std::string_view to_string(DenseCutStatus status) {
    switch (status) {
    case DenseCutStatus::VerifiedAll: return "verified_all";
    case DenseCutStatus::Refuted: return "refuted_by_cut";
    case DenseCutStatus::SkippedTooLarge: return "skipped_too_large";
    }
    return "?";
}

DenseCutAudit dense_cut_audit(const Graph &g, DenseCutMode mode) {
    DenseCutAudit audit;
    const int n = g.order();
    const Word all = g.vertices().bits;
    auto test = [&](Word bits) {
        if (bits == 0 || bits == all) return false;
        ++audit.cuts_checked;
        CutReport r = cut_report(g, VertexSet{bits});
        if (r.dense()) return false;
        audit.status = DenseCutStatus::Refuted;
        audit.refutation = r;
        return true;
    };

    if (mode.kind == DenseCutMode::Kind::Exhaustive) {
        if (n > kExhaustiveCutLimit) {
            audit.status = DenseCutStatus::SkippedTooLarge;
            return audit;
        }
        if (n <= 1) return audit;
        // Complement symmetry: every cut has a side containing vertex 0.
        const Word rest = Word{1} << (n - 1);
        for (Word k = 0; k < rest; ++k)
            if (test(1 | (k << 1))) return audit;
        return audit;
    }

    for (int v = 0; v < n; ++v)
        if (test(Word{1} << v)) return audit;
    for (int v = 0; v < n; ++v)
        if (test(g.neighbors(v))) return audit;
    for (int v = 0; v < n; ++v)
        if (test(g.neighbors(v) | (Word{1} << v))) return audit;
    for (VertexSet c : maximal_cliques(g))
        if (test(c.bits)) return audit;
    std::mt19937_64 rng(mode.seed);
    for (int i = 0; i < mode.extra_samples && n >= 2; ++i)
        if (test(rng() & all)) return audit;
    return audit;
}

CutValues cut_values(const Graph &g, VertexSet s, const SolverOptions &options) {
    return {compute_invariants(g, options),
            compute_invariants(induced_subgraph(g, s).graph, options),
            compute_invariants(induced_subgraph(g, s.complement(g.order())).graph, options)};
}

namespace {

void require_proper(const Graph &g, VertexSet s) {
    if (s.empty() || s.size() >= g.order() || (s.bits & ~g.vertices().bits) != 0)
        throw PreconditionError("S must be a nonempty proper subset of V(G)");
}

}  // namespace

InequalityCheck check_peel(const Graph &g, VertexSet s, const CutValues &values) {
    require_proper(g, s);
    const auto &[whole, inside, outside] = values;
    return {static_cast<long>(whole.alpha1) + whole.tau,
            static_cast<long>(inside.alpha1) + inside.tau + outside.alpha1 + outside.tau +
                cut_size(g, s)};
}

EdgeSet merge_cover(const Graph &g, const EdgeSet &x1, const EdgeSet &x2, const EdgeSet &cut,
                    const EdgeSet &a) {
    if (!validate_witness(g, Invariant::Alpha1, a).ok)
        throw PreconditionError("A is not triangle-independent");
    EdgeSet cover = x1 | x2 | (cut - (cut & a));
    const WitnessCheck check = validate_witness(g, Invariant::Tau, cover);
    if (!check.ok) throw PreconditionError("merged set is not a triangle edge cover: " + check.detail);
    return cover;
}

EdgeSet merge_cover(const Graph &g, VertexSet s, const EdgeSet &a) {
    require_proper(g, s);
    const EdgeIndex index(g);
    auto lifted_cover = [&](VertexSet side) {
        const InducedSubgraph sub = induced_subgraph(g, side);
        const EdgeIndex sub_index(sub.graph);
        return lift_edges(sub, sub_index, tau_exact(sub.graph).witness, index);
    };
    return merge_cover(g, lifted_cover(s), lifted_cover(s.complement(g.order())),
                       cut_edges(g, index, s), a);
}

InequalityCheck check_denseboth(const Graph &g, VertexSet s, const EdgeSet &a,
                                const CutValues &values) {
    require_proper(g, s);
    if (!validate_witness(g, Invariant::Alpha1, a).ok)
        throw PreconditionError("A is not triangle-independent");
    const EdgeIndex index(g);
    const EdgeSet cut = cut_edges(g, index, s);
    const auto &[whole, inside, outside] = values;
    return {2L * (whole.alpha1 + whole.taub),
            2L * (inside.alpha1 + inside.taub) + 2L * (outside.alpha1 + outside.taub) + cut.size() +
                2L * (cut & a).size()};
}

DenseMinCheck check_densemin(const Graph &g, VertexSet s) {
    require_proper(g, s);
    DenseMinCheck r;
    r.independence = independence_number(induced_subgraph(g, s).graph);
    r.cut_size = cut_size(g, s);
    r.threshold = static_cast<long>(s.size() - 2 * r.independence) * (g.order() - s.size());
    return r;
}

int independence_number(const Graph &g, int limit) {
    if (g.order() > limit)
        throw CapacityError("independence number limited to n <= " + std::to_string(limit));
    return static_cast<int>(maximum_independent_set(to_bit_graph(g)).vertices.size());
}

std::optional<std::array<int, 4>> find_induced_k4_minus(const Graph &g) {
    // The missing pair {x, y} shares an adjacent pair {u, v} as common neighbours.
    std::optional<std::array<int, 4>> best;
    for (auto [u, v] : g.edges()) {
        const Word common = g.neighbors(u) & g.neighbors(v);
        for (Word w = common; w != 0; w &= w - 1) {
            const int x = std::countr_zero(w);
            const Word partners = common & ~g.neighbors(x) & ~(Word{1} << x);
            if (partners == 0) continue;
            std::array<int, 4> quad = {u, v, x, std::countr_zero(partners)};
            std::sort(quad.begin(), quad.end());
            if (!best || quad < *best) best = quad;
        }
    }
    return best;
}

namespace {

void bron_kerbosch(const Graph &g, Word r, Word p, Word x, std::vector<VertexSet> &out) {
    if (p == 0) {
        if (x == 0) out.push_back(VertexSet{r});
        return;
    }
    int pivot = -1;
    int pivot_hits = -1;
    for (Word w = p | x; w != 0; w &= w - 1) {
        const int u = std::countr_zero(w);
        const int hits = std::popcount(p & g.neighbors(u));
        if (hits > pivot_hits) {
            pivot = u;
            pivot_hits = hits;
        }
    }
    for (Word w = p & ~g.neighbors(pivot); w != 0; w &= w - 1) {
        const int v = std::countr_zero(w);
        const Word bit = Word{1} << v;
        bron_kerbosch(g, r | bit, p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph &g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    bron_kerbosch(g, 0, g.vertices().bits, 0, out);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.members() < b.members();
    });
    return out;
}

bool is_clique(const Graph &g, VertexSet s) {
    for (int v : s.members())
        if ((g.neighbors(v) | (Word{1} << v)) != (g.neighbors(v) | s.bits)) return false;
    return true;
}

bool is_maximal_clique(const Graph &g, VertexSet s) {
    if (s.empty() || !is_clique(g, s)) return false;
    for (int v : s.complement(g.order()).members())
        if ((g.neighbors(v) & s.bits) == s.bits) return false;
    return true;
}

CliqueExtension clique_extension_check(const Graph &g, VertexSet s) {
    if (!is_maximal_clique(g, s)) throw PreconditionError("S is not a maximal clique");
    if (s == g.vertices()) throw PreconditionError("S is the whole vertex set");
    CliqueExtension r;
    r.clique = s;
    std::vector<std::pair<int, int>> overlap;
    for (int v : s.complement(g.order()).members()) {
        const int seen = std::popcount(g.neighbors(v) & s.bits);
        if (seen >= s.size() - 1) {
            r.extends = true;
            r.vertex = v;
            return r;
        }
        overlap.emplace_back(-seen, v);
    }
    std::sort(overlap.begin(), overlap.end());
    for (auto [neg, v] : overlap) r.closest.push_back(v);
    return r;
}

InequalityCheck efps_check(const Graph &g, int taub) {
    if (!is_triangle_free(g)) throw PreconditionError("efps_check needs a triangle-free graph");
    const long n2 = static_cast<long>(g.order()) * g.order();
    const long m = g.size();
    return {static_cast<long>(taub) * n2, m * n2 - 4 * m * m};
}

StructureProfile structure_profile(const Graph &g, DenseCutMode mode) {
    StructureProfile p;
    p.is_triangular = is_triangular(g);
    p.min_degree = g.min_degree();
    p.k4_minus_witness = find_induced_k4_minus(g);
    p.has_induced_k4_minus = p.k4_minus_witness.has_value();
    p.passes_mindeg_filter = mindeg_filter(g);
    p.dense_cut = dense_cut_audit(g, mode);
    for (VertexSet c : maximal_cliques(g))
        if (c != g.vertices()) p.clique_extensions.push_back(clique_extension_check(g, c));
    return p;
}

}  // namespace egt
