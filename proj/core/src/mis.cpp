#include "egt/mis.hpp"

#include <algorithm>
#include <bit>

namespace egt {

namespace {

class MisSearch {
public:
    explicit MisSearch(const BitGraph &adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

    MisResult run() {
        Bitset all(n_);
        for (int v = 0; v < n_; ++v) all.set(v);
        best_ = greedy(all);
        std::vector<int> current;
        search(all, current);
        return {best_, nodes_};
    }

private:
    int degree_in(int v, const Bitset &p) const { return adj_[v].count_and(p); }

    std::vector<int> greedy(Bitset p) const {
        std::vector<int> out;
        while (!p.none()) {
            int pick = -1;
            int pick_deg = n_ + 1;
            for (int v = p.first(); v >= 0; v = p.next(v)) {
                const int d = degree_in(v, p);
                if (d < pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            out.push_back(pick);
            p.reset(pick);
            p.subtract(adj_[pick]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Number of cliques in a greedy partition of p; bounds the independent sets of p.
    int clique_cover(Bitset rest) const {
        int cliques = 0;
        while (!rest.none()) {
            const int u = rest.first();
            rest.reset(u);
            Bitset cand = rest;
            cand &= adj_[u];
            while (!cand.none()) {
                const int w = cand.first();
                rest.reset(w);
                cand.reset(w);
                cand &= adj_[w];
            }
            ++cliques;
        }
        return cliques;
    }

    void search(Bitset p, std::vector<int> &current) {
        ++nodes_;
        const std::size_t mark = current.size();

        // Degree 0/1 vertices belong to some maximum independent set of p.
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = p.first(); v >= 0; v = p.next(v)) {
                if (degree_in(v, p) <= 1) {
                    current.push_back(v);
                    p.reset(v);
                    p.subtract(adj_[v]);
                    changed = true;
                }
            }
        }

        if (p.none()) {
            if (current.size() > best_.size()) {
                best_ = current;
                std::sort(best_.begin(), best_.end());
            }
            current.resize(mark);
            return;
        }
        if (current.size() + static_cast<std::size_t>(clique_cover(p)) <= best_.size()) {
            current.resize(mark);
            return;
        }

        int pivot = -1;
        int pivot_deg = -1;
        for (int v = p.first(); v >= 0; v = p.next(v)) {
            const int d = degree_in(v, p);
            if (d > pivot_deg) {
                pivot = v;
                pivot_deg = d;
            }
        }

        Bitset with = p;
        with.reset(pivot);
        with.subtract(adj_[pivot]);
        current.push_back(pivot);
        search(with, current);
        current.pop_back();

        p.reset(pivot);
        search(p, current);
        current.resize(mark);
    }

    const BitGraph &adj_;
    int n_;
    std::vector<int> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

MisResult maximum_independent_set(const BitGraph &adj) { return MisSearch(adj).run(); }

BitGraph to_bit_graph(const Graph &g) {
    BitGraph out(g.order(), Bitset(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (Word w = g.neighbors(v); w != 0; w &= w - 1) out[v].set(std::countr_zero(w));
    return out;
}

}  // namespace egt
