#include <benchmark/benchmark.h>

#include <random>

#include "egt/graph6.hpp"
#include "egt/solvers.hpp"
#include "egt/structure.hpp"

namespace {

egt::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    egt::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void BM_Alpha1Complete(benchmark::State &state) {
    const egt::Graph g = egt::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(egt::alpha1_exact(g).value);
}
BENCHMARK(BM_Alpha1Complete)->DenseRange(6, 10, 2);

void BM_TauComplete(benchmark::State &state) {
    const egt::Graph g = egt::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(egt::tau_exact(g).value);
}
BENCHMARK(BM_TauComplete)->DenseRange(6, 10, 2);

void BM_TaubRandom(benchmark::State &state) {
    const egt::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(egt::taub_exact(g).value);
}
BENCHMARK(BM_TaubRandom)->Arg(10)->Arg(16)->Arg(20);

void BM_TaubPetersen(benchmark::State &state) {
    const egt::Graph g = egt::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(egt::taub_exact(g).value);
}
BENCHMARK(BM_TaubPetersen);

void BM_InvariantsRandomEight(benchmark::State &state) {
    const egt::Graph g = random_graph(8, 0.6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(egt::compute_invariants(g).alpha1);
}
BENCHMARK(BM_InvariantsRandomEight);

void BM_Triangles(benchmark::State &state) {
    const egt::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(egt::triangles(g).size());
}
BENCHMARK(BM_Triangles)->Arg(16)->Arg(64);

void BM_Graph6RoundTrip(benchmark::State &state) {
    const egt::Graph g = random_graph(40, 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(egt::parse_graph6(egt::encode_graph6(g)).size());
}
BENCHMARK(BM_Graph6RoundTrip);

void BM_DenseCutExhaustive(benchmark::State &state) {
    const egt::Graph g = random_graph(static_cast<int>(state.range(0)), 0.8, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(egt::dense_cut_audit(g, egt::DenseCutMode::exhaustive()).cuts_checked);
}
BENCHMARK(BM_DenseCutExhaustive)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
