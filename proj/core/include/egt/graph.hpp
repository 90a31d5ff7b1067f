#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egt {

inline constexpr int kMaxVertices = 64;

using Word = std::uint64_t;

/// Thrown when a construction or solver limit is exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Set of vertices of a graph with at most 64 vertices, one bit per vertex.
struct VertexSet {
    Word bits = 0;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= Word{1} << v;
        return s;
    }
    static VertexSet first(int n) { return VertexSet{n >= 64 ? ~Word{0} : (Word{1} << n) - 1}; }

    bool contains(int v) const { return (bits >> v) & 1U; }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    void insert(int v) { bits |= Word{1} << v; }
    void erase(int v) { bits &= ~(Word{1} << v); }

    /// Members in increasing order.
    std::vector<int> members() const;

    /// Complement relative to the vertex set {0, ..., n-1}.
    VertexSet complement(int n) const { return VertexSet{first(n).bits & ~bits}; }

    friend bool operator==(VertexSet, VertexSet) = default;
};

/// Vertex triple a < b < c whose three pairs are all edges.
struct Triangle {
    int a = 0, b = 0, c = 0;
    friend auto operator<=>(const Triangle &, const Triangle &) = default;
};

/// Simple undirected graph on at most 64 vertices with one adjacency word per vertex.
///
/// Adjacency is kept symmetric and loop-free by the mutators; a default-constructed
/// Graph is the empty graph on zero vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

    int order() const { return n_; }
    int size() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    Word neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int min_degree() const;
    VertexSet vertices() const { return VertexSet::first(n_); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Checks symmetry, loop-freeness and that no neighbor bit reaches past n.
    bool valid() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<Word, kMaxVertices> adj_{};
};

/// Result of restricting a graph to a vertex subset: the subgraph plus the map from
/// new vertex labels back to the original ones.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};

std::vector<Triangle> triangles(const Graph &g);
bool is_triangle_free(const Graph &g);

/// Number of edges with exactly one endpoint in s.
int cut_size(const Graph &g, VertexSet s);

/// Number of edges with both endpoints in s.
int inner_size(const Graph &g, VertexSet s);

InducedSubgraph induced_subgraph(const Graph &g, VertexSet s);

/// Disjoint union of g1 and g2 plus every edge between them; g2's vertices follow g1's.
Graph join(const Graph &g1, const Graph &g2);

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

/// K_{r1,r1} ∨ K_{r2,r2} ∨ ... built by iterated join.
Graph sharpness_family(const std::vector<int> &rs);

std::string to_string(const Graph &g);

}  // namespace egt
