#include "egt/graph.hpp"

#include <sstream>

namespace egt {

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (Word w = bits; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= Word{1} << v;
    adj_[v] |= Word{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(Word{1} << v);
    adj_[v] &= ~(Word{1} << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        Word later = u + 1 >= 64 ? 0 : adj_[u] >> (u + 1);
        for (; later != 0; later &= later - 1) out.emplace_back(u, u + 1 + std::countr_zero(later));
    }
    return out;
}

bool Graph::valid() const {
    const Word inside = VertexSet::first(n_).bits;
    for (int v = 0; v < kMaxVertices; ++v) {
        if (v >= n_) {
            if (adj_[v] != 0) return false;
            continue;
        }
        if ((adj_[v] & ~inside) != 0 || has_edge(v, v)) return false;
        for (Word w = adj_[v]; w != 0; w &= w - 1)
            if (!has_edge(std::countr_zero(w), v)) return false;
    }
    return true;
}

std::vector<Triangle> triangles(const Graph &g) {
    std::vector<Triangle> out;
    for (int a = 0; a < g.order(); ++a) {
        const Word above_a = a + 1 >= 64 ? 0 : ~Word{0} << (a + 1);
        for (Word bs = g.neighbors(a) & above_a; bs != 0; bs &= bs - 1) {
            const int b = std::countr_zero(bs);
            const Word above_b = b + 1 >= 64 ? 0 : ~Word{0} << (b + 1);
            for (Word cs = g.neighbors(a) & g.neighbors(b) & above_b; cs != 0; cs &= cs - 1)
                out.push_back({a, b, std::countr_zero(cs)});
        }
    }
    return out;
}

bool is_triangle_free(const Graph &g) {
    for (int u = 0; u < g.order(); ++u)
        for (Word w = g.neighbors(u); w != 0; w &= w - 1)
            if ((g.neighbors(u) & g.neighbors(std::countr_zero(w))) != 0) return false;
    return true;
}

int cut_size(const Graph &g, VertexSet s) {
    const Word outside = s.complement(g.order()).bits;
    int total = 0;
    for (int v : s.members()) total += std::popcount(g.neighbors(v) & outside);
    return total;
}

int inner_size(const Graph &g, VertexSet s) {
    int twice = 0;
    for (int v : s.members()) twice += std::popcount(g.neighbors(v) & s.bits);
    return twice / 2;
}

InducedSubgraph induced_subgraph(const Graph &g, VertexSet s) {
    if ((s.bits & ~g.vertices().bits) != 0) throw PreconditionError("vertex set exceeds graph");
    InducedSubgraph out{Graph(s.size()), s.members()};
    const auto &orig = out.original;
    for (std::size_t i = 0; i < orig.size(); ++i)
        for (std::size_t j = i + 1; j < orig.size(); ++j)
            if (g.has_edge(orig[i], orig[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph join(const Graph &g1, const Graph &g2) {
    const int n1 = g1.order();
    const int n = n1 + g2.order();
    if (n > kMaxVertices)
        throw CapacityError("join of orders " + std::to_string(n1) + " and " +
                            std::to_string(g2.order()) + " exceeds " +
                            std::to_string(kMaxVertices) + " vertices");
    Graph g(n);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b > kMaxVertices)
        throw CapacityError("complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) +
                            ") exceeds capacity");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph sharpness_family(const std::vector<int> &rs) {
    int total = 0;
    for (int r : rs) {
        if (r <= 0) throw PreconditionError("sharpness family block sizes must be positive");
        total += 2 * r;
    }
    if (total > kMaxVertices)
        throw CapacityError("sharpness family needs " + std::to_string(total) + " vertices");
    Graph g;
    for (int r : rs) g = join(g, complete_bipartite(r, r));
    return g;
}

std::string to_string(const Graph &g) {
    std::ostringstream os;
    os << "Graph(n=" << g.order() << ", m=" << g.size() << ", edges={";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : " ") << u << '-' << v;
        first = false;
    }
    os << "})";
    return os.str();
}

}  // namespace egt
