#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "egt/graph.hpp"

namespace egt {

/// Growable bit vector used for edge sets and conflict-graph rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(int i) { words_[i >> 6] |= Word{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
    int count() const;
    bool none() const;
    /// Index of the lowest set bit, or -1.
    int first() const;
    /// Index of the lowest set bit above i, or -1.
    int next(int i) const;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    Bitset &operator&=(const Bitset &o);
    Bitset &operator|=(const Bitset &o);
    /// Removes every bit of o.
    Bitset &subtract(const Bitset &o);
    int count_and(const Bitset &o) const;
    bool intersects(const Bitset &o) const;

    friend bool operator==(const Bitset &, const Bitset &) = default;

private:
    int size_ = 0;
    std::vector<Word> words_;
};

/// Canonical numbering of a graph's edges: ids 0..m-1 in lexicographic (u, v) order, u < v.
class EdgeIndex {
public:
    explicit EdgeIndex(const Graph &g);

    int size() const { return static_cast<int>(edges_.size()); }
    int order() const { return n_; }
    std::pair<int, int> endpoints(int id) const { return edges_[id]; }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }

    /// Edge id of {u, v}, or -1 when the pair is not an edge.
    int id(int u, int v) const;

    /// Identity of the owning graph; edge sets from different graphs do not mix.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::int16_t> ids_;
    std::uint64_t fingerprint_ = 0;
};

/// Subset of the edges of one graph, addressed by that graph's EdgeIndex.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(const EdgeIndex &index) : bits_(index.size()), owner_(index.fingerprint()) {}
    static EdgeSet from_ids(const EdgeIndex &index, std::span<const int> ids);
    static EdgeSet from_pairs(const EdgeIndex &index, const std::vector<std::pair<int, int>> &pairs);
    static EdgeSet all(const EdgeIndex &index);

    int capacity() const { return bits_.size(); }
    int size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(int id) const { return bits_.test(id); }
    void insert(int id);
    void erase(int id);
    std::vector<int> ids() const;
    std::uint64_t owner() const { return owner_; }
    const Bitset &bits() const { return bits_; }

    EdgeSet operator|(const EdgeSet &o) const;
    EdgeSet operator&(const EdgeSet &o) const;
    EdgeSet operator-(const EdgeSet &o) const;

    friend bool operator==(const EdgeSet &, const EdgeSet &) = default;

private:
    void check_owner(const EdgeSet &o) const;

    Bitset bits_;
    std::uint64_t owner_ = 0;
};

/// The edge cut [S, S̄].
EdgeSet cut_edges(const Graph &g, const EdgeIndex &index, VertexSet s);

/// g with the given edges deleted.
Graph remove_edges(const Graph &g, const EdgeIndex &index, const EdgeSet &x);

/// Maps an edge set of an induced subgraph onto the parent graph's edge index.
EdgeSet lift_edges(const InducedSubgraph &sub, const EdgeIndex &sub_index, const EdgeSet &x,
                   const EdgeIndex &parent_index);

std::vector<std::pair<int, int>> edge_pairs(const EdgeIndex &index, const EdgeSet &x);

}  // namespace egt
