#include <gtest/gtest.h>

#include <random>

#include "egt/edge_set.hpp"
#include "egt/graph.hpp"
#include "egt/structure.hpp"
#include "support/oracle.hpp"

using namespace egt;
using egt::testing::Naive;

TEST(Graph, ConstructionKeepsAdjacencySymmetric) {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(4, 1);
    EXPECT_TRUE(g.has_edge(3, 0));
    EXPECT_TRUE(g.has_edge(1, 4));
    EXPECT_EQ(g.size(), 2);
    EXPECT_TRUE(g.valid());
    g.remove_edge(3, 0);
    EXPECT_FALSE(g.has_edge(0, 3));
    EXPECT_EQ(g.size(), 1);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
    Graph g(4);
    EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
    EXPECT_THROW(g.add_edge(0, 4), std::out_of_range);
    EXPECT_THROW(Graph(65), CapacityError);
    EXPECT_NO_THROW(Graph(64));
}

TEST(Graph, SixtyFourVertexEdges) {
    Graph g = complete(64);
    EXPECT_EQ(g.size(), 64 * 63 / 2);
    EXPECT_TRUE(g.valid());
    EXPECT_EQ(g.edges().back(), std::make_pair(62, 63));
}

TEST(Triangles, Examples) {
    const auto k3 = triangles(complete(3));
    ASSERT_EQ(k3.size(), 1U);
    EXPECT_EQ(k3[0], (Triangle{0, 1, 2}));
    EXPECT_TRUE(triangles(cycle(5)).empty());
    const auto k4 = triangles(complete(4));
    const std::vector<Triangle> expected = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    EXPECT_EQ(k4, expected);
}

TEST(Triangles, MatchesTripleLoopOnAllGraphsUpToFiveAndRandomUpToSeven) {
    auto check = [](const Graph &g) {
        const Naive naive(g);
        const auto got = triangles(g);
        ASSERT_EQ(got.size(), naive.tris.size()) << to_string(g);
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].a, naive.tris[i][0]);
            EXPECT_EQ(got[i].b, naive.tris[i][1]);
            EXPECT_EQ(got[i].c, naive.tris[i][2]);
        }
        EXPECT_EQ(is_triangle_free(g), naive.tris.empty());
    };
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
            check(egt::testing::graph_from_mask(n, mask));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) check(egt::testing::random_graph(6 + i % 2, 0.5, rng));
}

TEST(CutEdges, Examples) {
    const Graph k4 = complete(4);
    const EdgeIndex k4_index(k4);
    const EdgeSet star = cut_edges(k4, k4_index, VertexSet::of({0}));
    EXPECT_EQ(star.size(), 3);
    for (auto [u, v] : edge_pairs(k4_index, star)) EXPECT_EQ(u, 0);

    const Graph k6 = complete(6);
    EXPECT_EQ(cut_edges(k6, EdgeIndex(k6), VertexSet::of({0, 1, 2})).size(), 9);

    const Graph c5 = cycle(5);
    EXPECT_EQ(cut_edges(c5, EdgeIndex(c5), VertexSet::of({0, 1})).size(), 2);

    EXPECT_TRUE(cut_edges(k6, EdgeIndex(k6), VertexSet{}).empty());
    EXPECT_TRUE(cut_edges(k6, EdgeIndex(k6), k6.vertices()).empty());
}

TEST(CutEdges, ThreeWayPartitionIdentity) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = egt::testing::random_graph(n, 0.45, rng);
        const VertexSet s{rng() & g.vertices().bits};
        const EdgeIndex index(g);
        const int cut = cut_edges(g, index, s).size();
        EXPECT_EQ(cut, cut_size(g, s));
        const int inside = induced_subgraph(g, s).graph.size();
        const int outside = induced_subgraph(g, s.complement(n)).graph.size();
        EXPECT_EQ(cut + inside + outside, g.size());
        EXPECT_EQ(inside, inner_size(g, s));
    }
}

TEST(InducedSubgraph, Examples) {
    const auto k3 = induced_subgraph(complete(6), VertexSet::of({1, 3, 5}));
    EXPECT_EQ(k3.graph, complete(3));
    EXPECT_EQ(k3.original, (std::vector<int>{1, 3, 5}));

    EXPECT_EQ(induced_subgraph(cycle(5), VertexSet::of({2, 3, 4})).graph, path(3));

    std::mt19937_64 rng(3);
    const Graph g = egt::testing::random_graph(9, 0.5, rng);
    EXPECT_EQ(induced_subgraph(g, g.vertices()).graph, g);
}

TEST(Join, Examples) {
    EXPECT_EQ(join(complete_bipartite(1, 1), complete_bipartite(1, 1)), complete(4));
    EXPECT_EQ(join(empty_graph(1), empty_graph(1)), complete(2));
    const Graph j = join(complete_bipartite(2, 2), complete_bipartite(1, 1));
    EXPECT_EQ(j.order(), 6);
    EXPECT_EQ(j.size(), 13);
    EXPECT_THROW(join(empty_graph(40), empty_graph(25)), CapacityError);
}

TEST(Join, EdgeCountFormulaOnRandomPairs) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const int n1 = static_cast<int>(rng() % 20);
        const int n2 = static_cast<int>(rng() % 20);
        const Graph a = egt::testing::random_graph(n1, 0.3, rng);
        const Graph b = egt::testing::random_graph(n2, 0.6, rng);
        const Graph j = join(a, b);
        EXPECT_EQ(j.size(), a.size() + b.size() + n1 * n2);
        EXPECT_TRUE(j.valid());
    }
}

TEST(Families, StandardConstructions) {
    EXPECT_EQ(complete(4).size(), 6);
    const Graph k33 = complete_bipartite(3, 3);
    EXPECT_EQ(k33.size(), 9);
    EXPECT_TRUE(is_triangle_free(k33));
    EXPECT_EQ(cycle(5).size(), 5);
    EXPECT_TRUE(is_triangle_free(cycle(5)));
    EXPECT_EQ(petersen().size(), 15);
    EXPECT_THROW(complete(65), CapacityError);
    EXPECT_THROW(complete_bipartite(33, 32), CapacityError);
}

TEST(Families, SharpnessFamily) {
    EXPECT_EQ(sharpness_family({3}), complete_bipartite(3, 3));
    EXPECT_EQ(sharpness_family({1, 1, 1, 1}), complete(8));
    const Graph g = sharpness_family({2, 1});
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.size(), 13);
    EXPECT_THROW(sharpness_family({20, 13}), CapacityError);
    EXPECT_THROW(sharpness_family({0}), PreconditionError);
}

TEST(Families, SharpnessFamilyIsTriangularForTwoOrMoreBlocks) {
    const std::vector<std::vector<int>> cases = {{1, 1}, {2, 1}, {3, 2}, {2, 2, 1}, {4, 1, 1, 1}, {5, 5}};
    for (const auto &rs : cases) EXPECT_TRUE(is_triangular(sharpness_family(rs)));
    EXPECT_FALSE(is_triangular(sharpness_family({3})));
}

TEST(EdgeSet, AlgebraAndOwnership) {
    const Graph k4 = complete(4);
    const EdgeIndex index(k4);
    EXPECT_EQ(index.size(), 6);
    EXPECT_EQ(index.id(0, 1), 0);
    EXPECT_EQ(index.id(3, 2), 5);
    EXPECT_EQ(index.id(0, 0), -1);

    const EdgeSet a = EdgeSet::from_ids(index, std::vector<int>{0, 1, 2});
    const EdgeSet b = EdgeSet::from_ids(index, std::vector<int>{2, 3});
    EXPECT_EQ((a | b).size(), 4);
    EXPECT_EQ((a & b).ids(), std::vector<int>{2});
    EXPECT_EQ((a - b).ids(), (std::vector<int>{0, 1}));

    const Graph c4 = cycle(4);
    const EdgeIndex other(c4);
    EXPECT_THROW(a | EdgeSet(other), PreconditionError);
    EXPECT_THROW(EdgeSet(index).insert(6), std::out_of_range);
    EXPECT_THROW(EdgeSet::from_pairs(other, {{0, 2}}), PreconditionError);
}

TEST(EdgeSet, LiftFromInducedSubgraph) {
    const Graph g = complete(5);
    const EdgeIndex index(g);
    const auto sub = induced_subgraph(g, VertexSet::of({1, 3, 4}));
    const EdgeIndex sub_index(sub.graph);
    const EdgeSet lifted = lift_edges(sub, sub_index, EdgeSet::all(sub_index), index);
    EXPECT_EQ(edge_pairs(index, lifted), (std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {3, 4}}));
}

TEST(EdgeSet, LargeGraphIds) {
    const Graph g = complete(64);
    const EdgeIndex index(g);
    EXPECT_EQ(index.size(), 2016);
    EdgeSet all = EdgeSet::all(index);
    EXPECT_EQ(all.size(), 2016);
    all.erase(2015);
    EXPECT_EQ(all.ids().back(), 2014);
    EXPECT_EQ(index.endpoints(2015), std::make_pair(62, 63));
}
