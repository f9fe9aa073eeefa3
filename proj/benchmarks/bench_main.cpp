#include <benchmark/benchmark.h>

#include "editdist/blp.hpp"
#include "editdist/distance.hpp"
#include "editdist/ingest.hpp"
#include "editdist/poset.hpp"

using namespace editdist;

namespace {

void BM_ComputeDistance(benchmark::State& state) {
    const int leaves = static_cast<int>(state.range(0));
    Dendrogram a = random_dendrogram(leaves, 11);
    Dendrogram b = random_dendrogram(leaves, 13);
    ComputeOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        auto [d, table] = compute_distance(a, b, opts);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_ComputeDistance)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_RootProblemSolve(benchmark::State& state) {
    const int leaves = static_cast<int>(state.range(0));
    Dendrogram a = random_dendrogram(leaves, 17).normalized();
    Dendrogram b = random_dendrogram(leaves, 19).normalized();
    auto [d, table] = compute_distance(a, b, ComputeOptions{1});
    BlpProblem root = build_problem(a, b, table);
    for (auto _ : state) {
        BlpSolution sol = solve(root);
        benchmark::DoNotOptimize(sol.value);
    }
}
BENCHMARK(BM_RootProblemSolve)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_SingleLinkage(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Dendrogram t = random_dendrogram(n, 23);
        benchmark::DoNotOptimize(t.vertex_count());
    }
}
BENCHMARK(BM_SingleLinkage)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_TransitiveReduction(benchmark::State& state) {
    Digraph g;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((i + j) % 3 != 0) g.add_arc("v" + std::to_string(i), "v" + std::to_string(j));
    for (auto _ : state) {
        Digraph r = transitive_reduction(g);
        benchmark::DoNotOptimize(r.arc_count());
    }
}
BENCHMARK(BM_TransitiveReduction)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
