#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egt/edge_set.hpp"
#include "egt/graph.hpp"
#include "egt/mis.hpp"

namespace egt {

/// The three edge invariants: α₁ (largest triangle-independent edge set),
/// τ (smallest triangle edge cover) and τ_B (smallest edge bipartization).
enum class Invariant { Alpha1, Tau, Taub };

std::string_view to_string(Invariant which);

enum class SolverKind { BranchAndBound, CutEnumeration, BruteForce };

std::string_view to_string(SolverKind kind);

/// Optimal value plus a witness edge set over the graph's EdgeIndex.
///
/// For α₁ the witness is the triangle-independent set; for τ and τ_B it is the
/// deleted set. |witness| == value in every case.
struct SolveResult {
    int value = 0;
    EdgeSet witness;
    std::uint64_t nodes_explored = 0;
    SolverKind solver_kind = SolverKind::BranchAndBound;
    /// τ_B only: one side of the optimal bipartition; vertex n-1 is always on the other side.
    std::optional<VertexSet> bipartition;
};

struct SolverOptions {
    /// Largest n for which exact max-cut enumeration is attempted.
    int maxcut_limit = 28;
};

/// Two edges are adjacent when they lie in a common triangle.
struct ConflictGraph {
    BitGraph adj;

    int size() const { return static_cast<int>(adj.size()); }
    bool adjacent(int e, int f) const { return adj[e].test(f); }
};

ConflictGraph conflict_graph(const Graph &g, const EdgeIndex &index);

/// Triangles as triples of edge ids (ascending), in the lexicographic order of triangles(g).
std::vector<std::array<int, 3>> triangle_edge_ids(const Graph &g, const EdgeIndex &index);

SolveResult alpha1_exact(const Graph &g);
SolveResult tau_exact(const Graph &g);
SolveResult taub_exact(const Graph &g, const SolverOptions &options = {});

/// Maximum cut value and the side achieving it (first optimum in Gray-code order).
struct MaxCut {
    int value = 0;
    VertexSet side;
};
MaxCut max_cut(const Graph &g, const SolverOptions &options = {});

struct BruteForceLimits {
    int max_edges = 20;
    int max_vertices = 16;
};

/// Exhaustive oracle: edge-subset enumeration for α₁ and τ, plain bipartition
/// enumeration for τ_B. Throws CapacityError beyond the limits.
SolveResult brute_force(const Graph &g, Invariant which, const BruteForceLimits &limits = {});

struct WitnessCheck {
    bool ok = true;
    std::string detail;
    /// Offending vertices: a triangle for α₁/τ, an odd closed walk for τ_B.
    std::vector<int> certificate;
};

/// Checks a witness against the definition of the invariant. For α₁ both the
/// per-triangle test and the per-vertex neighbourhood-independence test are run
/// and must agree.
WitnessCheck validate_witness(const Graph &g, Invariant which, const EdgeSet &witness);

struct Invariants {
    int alpha1 = 0;
    int tau = 0;
    int taub = 0;
};

Invariants compute_invariants(const Graph &g, const SolverOptions &options = {});

}  // namespace egt
