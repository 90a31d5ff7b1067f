#include "egt/edge_set.hpp"

#include <bit>

namespace egt {

int Bitset::count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
}

bool Bitset::none() const {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

int Bitset::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
}

int Bitset::next(int i) const {
    ++i;
    if (i >= size_) return -1;
    std::size_t w = static_cast<std::size_t>(i) >> 6;
    Word cur = words_[w] & (~Word{0} << (i & 63));
    while (true) {
        if (cur != 0) return static_cast<int>(w * 64) + std::countr_zero(cur);
        if (++w == words_.size()) return -1;
        cur = words_[w];
    }
}

Bitset &Bitset::operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Bitset &Bitset::operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

Bitset &Bitset::subtract(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

int Bitset::count_and(const Bitset &o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
}

bool Bitset::intersects(const Bitset &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
}

EdgeIndex::EdgeIndex(const Graph &g)
    : n_(g.order()), edges_(g.edges()), ids_(static_cast<std::size_t>(n_) * n_, -1) {
    // FNV-1a over the order and adjacency words.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xFFU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (int v = 0; v < n_; ++v) mix(g.neighbors(v));
    fingerprint_ = h;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        ids_[u * n_ + v] = ids_[v * n_ + u] = static_cast<std::int16_t>(i);
    }
}

int EdgeIndex::id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    return ids_[u * n_ + v];
}

EdgeSet EdgeSet::from_ids(const EdgeIndex &index, std::span<const int> ids) {
    EdgeSet s(index);
    for (int id : ids) s.insert(id);
    return s;
}

EdgeSet EdgeSet::from_pairs(const EdgeIndex &index, const std::vector<std::pair<int, int>> &pairs) {
    EdgeSet s(index);
    for (auto [u, v] : pairs) {
        const int id = index.id(u, v);
        if (id < 0)
            throw PreconditionError("pair " + std::to_string(u) + "-" + std::to_string(v) +
                                    " is not an edge");
        s.insert(id);
    }
    return s;
}

EdgeSet EdgeSet::all(const EdgeIndex &index) {
    EdgeSet s(index);
    for (int id = 0; id < index.size(); ++id) s.insert(id);
    return s;
}

void EdgeSet::insert(int id) {
    if (id < 0 || id >= capacity())
        throw std::out_of_range("edge id " + std::to_string(id) + " outside 0.." +
                                std::to_string(capacity() - 1));
    bits_.set(id);
}

void EdgeSet::erase(int id) {
    if (id < 0 || id >= capacity()) throw std::out_of_range("edge id " + std::to_string(id));
    bits_.reset(id);
}

std::vector<int> EdgeSet::ids() const {
    std::vector<int> out;
    for (int i = bits_.first(); i >= 0; i = bits_.next(i)) out.push_back(i);
    return out;
}

void EdgeSet::check_owner(const EdgeSet &o) const {
    if (owner_ != o.owner_ || capacity() != o.capacity())
        throw PreconditionError("edge sets belong to different graphs");
}

EdgeSet EdgeSet::operator|(const EdgeSet &o) const {
    check_owner(o);
    EdgeSet r = *this;
    r.bits_ |= o.bits_;
    return r;
}

EdgeSet EdgeSet::operator&(const EdgeSet &o) const {
    check_owner(o);
    EdgeSet r = *this;
    r.bits_ &= o.bits_;
    return r;
}

EdgeSet EdgeSet::operator-(const EdgeSet &o) const {
    check_owner(o);
    EdgeSet r = *this;
    r.bits_.subtract(o.bits_);
    return r;
}

EdgeSet cut_edges(const Graph &g, const EdgeIndex &index, VertexSet s) {
    if (index.order() != g.order()) throw PreconditionError("edge index not over this graph");
    EdgeSet out(index);
    const Word outside = s.complement(g.order()).bits;
    for (int u : s.members())
        for (Word w = g.neighbors(u) & outside; w != 0; w &= w - 1)
            out.insert(index.id(u, std::countr_zero(w)));
    return out;
}

Graph remove_edges(const Graph &g, const EdgeIndex &index, const EdgeSet &x) {
    if (x.owner() != index.fingerprint()) throw PreconditionError("edge set not over this graph");
    Graph h = g;
    for (int id : x.ids()) {
        auto [u, v] = index.endpoints(id);
        h.remove_edge(u, v);
    }
    return h;
}

EdgeSet lift_edges(const InducedSubgraph &sub, const EdgeIndex &sub_index, const EdgeSet &x,
                   const EdgeIndex &parent_index) {
    EdgeSet out(parent_index);
    for (int id : x.ids()) {
        auto [u, v] = sub_index.endpoints(id);
        const int pid = parent_index.id(sub.original[u], sub.original[v]);
        if (pid < 0) throw PreconditionError("lifted edge missing from parent graph");
        out.insert(pid);
    }
    return out;
}

std::vector<std::pair<int, int>> edge_pairs(const EdgeIndex &index, const EdgeSet &x) {
    std::vector<std::pair<int, int>> out;
    for (int id : x.ids()) out.push_back(index.endpoints(id));
    return out;
}

}  // namespace egt
