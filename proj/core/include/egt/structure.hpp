#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egt/edge_set.hpp"
#include "egt/graph.hpp"
#include "egt/solvers.hpp"

namespace egt {

/// Every edge lies on a triangle.
bool is_triangular(const Graph &g);

/// 2·δ(G) > n. Graphs failing this cannot be vertex-minimal counterexamples to
/// α₁ + τ ≤ n²/4.
bool mindeg_filter(const Graph &g);

/// One cut tested against the dense-cut property 2·|[S,S̄]| > |S|(n−|S|).
struct CutReport {
    VertexSet s;
    int cut_size = 0;
    long twice_cut = 0;  // 2·|[S,S̄]|
    long threshold = 0;  // |S|(n−|S|)

    bool dense() const { return twice_cut > threshold; }
};

CutReport cut_report(const Graph &g, VertexSet s);

enum class DenseCutStatus { VerifiedAll, Refuted, SkippedTooLarge };

std::string_view to_string(DenseCutStatus status);

struct DenseCutMode {
    enum class Kind { Exhaustive, Sampled } kind = Kind::Sampled;
    /// Sampled mode: number of extra pseudo-random subsets on top of the structured
    /// candidates (singletons, open and closed neighbourhoods, maximal cliques).
    int extra_samples = 0;
    std::uint64_t seed = 0x5eed;

    static DenseCutMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static DenseCutMode sampled(int extra = 0) { return {Kind::Sampled, extra, 0x5eed}; }
};

inline constexpr int kExhaustiveCutLimit = 20;

struct DenseCutAudit {
    DenseCutStatus status = DenseCutStatus::VerifiedAll;
    std::optional<CutReport> refutation;
    std::uint64_t cuts_checked = 0;
};

/// Looks for a sparse cut, 2·|[S,S̄]| ≤ |S|(n−|S|), which certifies that g is not a
/// minimal counterexample. Exhaustive mode walks every S containing vertex 0 in
/// increasing bit-pattern order and is skipped above kExhaustiveCutLimit vertices.
DenseCutAudit dense_cut_audit(const Graph &g, DenseCutMode mode);

/// Exact invariants of G, G[S] and G[S̄].
struct CutValues {
    Invariants whole;
    Invariants inside;
    Invariants outside;
};

CutValues cut_values(const Graph &g, VertexSet s, const SolverOptions &options = {});

/// lhs ≤ rhs with slack = rhs − lhs, all in the scale stated by the producing check.
struct InequalityCheck {
    long lhs = 0;
    long rhs = 0;

    bool holds() const { return lhs <= rhs; }
    long slack() const { return rhs - lhs; }
};

/// (α₁+τ)(G) ≤ (α₁+τ)(G[S]) + (α₁+τ)(G[S̄]) + |[S,S̄]|.
InequalityCheck check_peel(const Graph &g, VertexSet s, const CutValues &values);

/// X₁ ∪ X₂ ∪ ([S,S̄] − A): a triangle edge cover of g built from covers of the two
/// sides and a triangle-independent set. Throws PreconditionError if a is not
/// triangle-independent or the result fails to cover.
EdgeSet merge_cover(const Graph &g, const EdgeSet &x1, const EdgeSet &x2, const EdgeSet &cut,
                    const EdgeSet &a);

/// Covers of G[S] and G[S̄] from tau_exact, lifted into g, merged with a.
EdgeSet merge_cover(const Graph &g, VertexSet s, const EdgeSet &a);

/// 2(α₁+τ_B)(G) ≤ 2(α₁+τ_B)(G[S]) + 2(α₁+τ_B)(G[S̄]) + |[S,S̄]| + 2|[S,S̄] ∩ A|.
/// Guaranteed only when A is a maximum triangle-independent set; smaller A can fail
/// (K_{3,3}, S = {0,3}, A = ∅ gives 18 > 14).
InequalityCheck check_denseboth(const Graph &g, VertexSet s, const EdgeSet &a,
                                const CutValues &values);

struct DenseMinCheck {
    int independence = 0;  // t = α(G[S])
    int cut_size = 0;
    long threshold = 0;  // (|S| − 2t)(n − |S|)

    /// |[S,S̄]| ≤ threshold: g is not a minimal counterexample to α₁ + τ_B ≤ n²/4.
    bool refutes() const { return cut_size <= threshold; }
};

DenseMinCheck check_densemin(const Graph &g, VertexSet s);

inline constexpr int kIndependenceLimit = 40;

int independence_number(const Graph &g, int limit = kIndependenceLimit);

/// Four vertices inducing exactly five edges, if any (lexicographically first).
std::optional<std::array<int, 4>> find_induced_k4_minus(const Graph &g);
inline bool has_induced_k4_minus(const Graph &g) { return find_induced_k4_minus(g).has_value(); }

/// All maximal cliques, each once (Bron–Kerbosch with Tomita pivoting).
std::vector<VertexSet> maximal_cliques(const Graph &g);

bool is_clique(const Graph &g, VertexSet s);
bool is_maximal_clique(const Graph &g, VertexSet s);

struct CliqueExtension {
    VertexSet clique;
    bool extends = false;
    /// Lowest outside vertex adjacent to all but at most one clique vertex, or -1.
    int vertex = -1;
    /// On failure: outside vertices ordered by decreasing |N(v) ∩ S|, then by index.
    std::vector<int> closest;
};

/// Does some v ∉ S see at least |S|−1 vertices of the maximal clique S?
CliqueExtension clique_extension_check(const Graph &g, VertexSet s);

/// τ_B·n² ≤ m·n² − 4m² for triangle-free g.
InequalityCheck efps_check(const Graph &g, int taub);

struct StructureProfile {
    bool is_triangular = false;
    int min_degree = 0;
    bool has_induced_k4_minus = false;
    std::optional<std::array<int, 4>> k4_minus_witness;
    bool passes_mindeg_filter = false;
    DenseCutAudit dense_cut;
    std::vector<CliqueExtension> clique_extensions;
};

StructureProfile structure_profile(const Graph &g, DenseCutMode mode);

}  // namespace egt
