#include <benchmark/benchmark.h>

#include "lsr/generators.hpp"
#include "lsr/separators.hpp"

using namespace lsr;

static void BM_ShatterTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = random_tree(n, 1);
  const std::size_t K = optimal_K(n, 1, max_degree(g), 2).front();
  for (auto _ : state) benchmark::DoNotOptimize(shatter(g, K, SeparatorMode::kHeuristic));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShatterTree)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_ShatterGrid(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> dims{k, k};
  auto g = grid_graph(dims);
  for (auto _ : state) benchmark::DoNotOptimize(shatter(g, k * 2, SeparatorMode::kHeuristic));
}
BENCHMARK(BM_ShatterGrid)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_ExactSeparatorTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = random_tree(n, 2);
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  for (auto _ : state) benchmark::DoNotOptimize(find_balanced_separator(g, all, Balance{}, SeparatorMode::kExact));
}
BENCHMARK(BM_ExactSeparatorTree)->Arg(16)->Arg(32)->Arg(63);

static void BM_BuildHierarchy(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  auto g = random_tree(4095, 3);
  auto K = optimal_K(4095, 1, max_degree(g), t);
  for (auto _ : state) benchmark::DoNotOptimize(build_hierarchy(g, K, SeparatorMode::kHeuristic));
}
BENCHMARK(BM_BuildHierarchy)->DenseRange(2, 5);
