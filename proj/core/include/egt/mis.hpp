#pragma once

#include <cstdint>
#include <vector>

#include "egt/edge_set.hpp"

namespace egt {

/// Graph given as adjacency rows over an arbitrary number of vertices.
using BitGraph = std::vector<Bitset>;

struct MisResult {
    std::vector<int> vertices;  // increasing order
    std::uint64_t nodes = 0;
};

/// Exact maximum independent set.
///
/// Greedy minimum-degree start, then depth-first branch and bound: vertices of degree
/// 0 or 1 in the candidate set are taken without branching, otherwise the candidate of
/// maximum degree (lowest index on ties) is first included and then excluded. Nodes are
/// cut with a greedy clique-cover bound. Only strict improvements replace the incumbent,
/// so the result is deterministic.
MisResult maximum_independent_set(const BitGraph &adj);

BitGraph to_bit_graph(const Graph &g);

}  // namespace egt
