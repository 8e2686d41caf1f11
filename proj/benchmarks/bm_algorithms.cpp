#include <benchmark/benchmark.h>

#include "lsr/adversary.hpp"
#include "lsr/algorithms.hpp"
#include "lsr/generators.hpp"

using namespace lsr;

static void BM_SeparatorTRound(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  auto g = random_tree(4095, 4);
  auto h = build_hierarchy(g, optimal_K(4095, 1, max_degree(g), t), SeparatorMode::kHeuristic);
  auto f = make_random_function(g, 5);
  std::size_t queries = 0;
  for (auto _ : state) {
    RoundOracle o(f, t);
    auto r = separator_t_round(g, o, h);
    queries = r.transcript.total_queries;
  }
  state.counters["queries"] = static_cast<double>(queries);
}
BENCHMARK(BM_SeparatorTRound)->DenseRange(2, 6);

static void BM_WarmStart(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = random_regular_graph(n, 3, 6);
  auto p = choose_descent_params(n, 3, 3);
  auto f = make_random_function(g, 7);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RoundOracle o(f, 3);
    benchmark::DoNotOptimize(parallel_warm_start(g, o, 3, p, seed++));
  }
}
BENCHMARK(BM_WarmStart)->Arg(1024)->Arg(4096)->Arg(16384);

static void BM_CoverTwoRound(benchmark::State& state) {
  std::vector<std::size_t> dims{64, 64};
  auto g = grid_graph(dims);
  std::vector<Vertex> cover;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if ((v / 64 + v % 64) % 2 == 0) cover.push_back(static_cast<Vertex>(v));
  }
  auto f = make_random_function(g, 8);
  for (auto _ : state) {
    RoundOracle o(f, 2);
    benchmark::DoNotOptimize(vertex_cover_two_round(g, o, cover));
  }
}
BENCHMARK(BM_CoverTwoRound);

static void BM_EvaluateAdversary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = random_tree(n, 9);
  auto tree = bfs_spanning_tree(g, 0);
  DeterministicAlgorithm algo = [](const Graph& gr, RoundOracle& o) {
    return separator_t_round(gr, o, 2, 1, SeparatorMode::kHeuristic);
  };
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_deterministic(algo, tree, g, 2));
}
BENCHMARK(BM_EvaluateAdversary)->Arg(63)->Arg(255);
