// Serial vs OpenMP kernels. Run: ./build/bench/modq_bench

#include <benchmark/benchmark.h>

#include <random>

#include "modq/families.hpp"
#include "modq/quality.hpp"
#include "modq/report.hpp"
#include "modq/search.hpp"

namespace {

using namespace modq;

Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

Graph random_graph(NodeId n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 1; u <= n; ++u)
        for (NodeId v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

void BM_BruteForce(benchmark::State& state) {
    Graph g = random_graph(static_cast<NodeId>(state.range(1)), 0.4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_max(g, QualityFunction{}, exec_of(state)).best_score);
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_BruteForce)->ArgsProduct({{0, 1}, {9, 11}})->Unit(benchmark::kMillisecond);

void BM_ClusterStats(benchmark::State& state) {
    FamilyParams p{Family::H, 3, 6, 3 * state.range(1) * state.range(1)};
    Graph h = generate(p);
    Clustering u = balanced_clustering(p.node_count(), 3 * state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(cluster_stats(h, u, exec_of(state)).intra_edges);
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_ClusterStats)->ArgsProduct({{0, 1}, {40, 200}})->Unit(benchmark::kMicrosecond);

void BM_Table(benchmark::State& state) {
    TableSpec spec = TableSpec::published(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_table(spec, exec_of(state)).size());
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Table)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
