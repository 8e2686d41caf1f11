#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "brute.hpp"
#include "fixtures.hpp"
#include "lsr/errors.hpp"
#include "lsr/generators.hpp"
#include "lsr/oracle.hpp"

using namespace lsr;

TEST(Order, ValueThenIndex) {
  auto f = make_custom_function({1.0, 2.0, 5.0, 5.0, 0.0, 0.0, 0.0, 5.0});
  EXPECT_TRUE(order_less(f, 0, 1));
  EXPECT_FALSE(order_less(f, 1, 0));
  EXPECT_TRUE(order_less(f, 3, 7));
  EXPECT_FALSE(order_less(f, 7, 3));
  EXPECT_FALSE(order_less(f, 3, 3));
}

TEST(Order, TotalOnRandomFunction) {
  auto g = path_graph(50);
  auto f = make_random_function(g, 3);
  for (std::size_t i = 0; i < 50; ++i) f.values[i] = std::floor(f.values[i] * 5);  // force ties
  for (Vertex u = 0; u < 50; ++u) {
    for (Vertex v = 0; v < 50; ++v) {
      if (u == v) continue;
      EXPECT_NE(order_less(f, u, v), order_less(f, v, u));
    }
  }
}

TEST(Rank, Examples) {
  auto flat = make_custom_function(std::vector<double>(10, 3.0));
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(rank(flat, v), static_cast<std::size_t>(v) + 1);
  auto g = path_graph(20);
  auto f = make_random_function(g, 9);
  std::vector<Vertex> sorted(20);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
    return f.values[a] != f.values[b] ? f.values[a] < f.values[b] : a < b;
  });
  auto all = ranks(f);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(rank(f, sorted[i]), i + 1);
    EXPECT_EQ(all[sorted[i]], i + 1);
  }
  EXPECT_EQ(rank(f, sorted[0]), 1u);
}

TEST(Staircase, ExampleTreeValues) {
  auto g = fixtures::example_tree();
  auto t = bfs_spanning_tree(g, fixtures::id(1));
  auto f = make_staircase(t, fixtures::id(4));
  using fixtures::id;
  EXPECT_EQ(f(id(1)), 0.0);
  EXPECT_EQ(f(id(2)), -1.0);
  EXPECT_EQ(f(id(4)), -2.0);
  EXPECT_EQ(f(id(3)), 1.0);
  EXPECT_EQ(f(id(5)), 3.0);
  EXPECT_EQ(f(id(10)), 2.0);
  EXPECT_EQ(f.kind, FunctionKind::kStaircase);
  EXPECT_EQ(f.target, id(4));
}

TEST(Staircase, UniqueMinimumAndSigns) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_tree(40, seed);
    const Vertex root = static_cast<Vertex>(seed % 40);
    auto t = bfs_spanning_tree(g, root);
    auto bt = brute::bfs_tree(g, root);
    for (Vertex z = 0; z < 40; ++z) {
      auto f = make_staircase(t, z);
      EXPECT_EQ(f.values, brute::staircase(bt, z));
      EXPECT_EQ(all_local_minima(g, f.values), std::vector<Vertex>{z});
      std::size_t nonpositive = 0;
      for (Vertex x = 0; x < 40; ++x) {
        if (f(x) <= 0) {
          ++nonpositive;
          EXPECT_TRUE(t.is_ancestor(x, z));
        }
      }
      EXPECT_EQ(nonpositive, t.depth(z) + 1);
    }
    auto at_root = make_staircase(t, root);
    EXPECT_EQ(all_local_minima(g, at_root.values), std::vector<Vertex>{root});
  }
}

TEST(Staircase, NonTreeGraphsStillUnique) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_regular_graph(60, 3, seed);
    auto t = bfs_spanning_tree(g, 0);
    for (Vertex z = 0; z < 60; z += 7) EXPECT_EQ(all_local_minima(g, make_staircase(t, z).values), std::vector<Vertex>{z});
  }
}

TEST(RoundOracleTest, BudgetDuplicatesAndErrors) {
  auto f = make_custom_function({4, 3, 2, 1});
  RoundOracle o(f, 2);
  std::vector<Vertex> b1{2};
  EXPECT_EQ(o.submit_batch(b1), std::vector<double>{2});
  std::vector<Vertex> dup{1, 1, 3};
  EXPECT_EQ(o.submit_batch(dup), (std::vector<double>{3, 3, 1}));
  EXPECT_EQ(o.transcript().total_queries, 4u);
  EXPECT_TRUE(o.transcript().consistent());
  EXPECT_THROW(o.submit_batch(b1), RoundBudgetExceeded);
  EXPECT_EQ(o.rounds_used(), 2u);

  RoundOracle o2(f, 3);
  std::vector<Vertex> bad{0, 9};
  EXPECT_THROW(o2.submit_batch(bad), InvalidVertex);
  EXPECT_EQ(o2.rounds_used(), 0u);
  EXPECT_EQ(o2.submit_batch({}), std::vector<double>{});
  EXPECT_EQ(o2.rounds_used(), 1u);
}

TEST(RoundOracleTest, TranscriptJson) {
  auto f = make_custom_function({4, 3});
  RoundOracle o(f, 2);
  std::vector<Vertex> b{1, 0};
  o.submit_batch(b);
  auto j = to_json(o.transcript());
  EXPECT_EQ(j.dump(), R"({"rounds":[{"batch":[1,0],"answers":[3.0,4.0]}],"total":2})");
}

TEST(RandomFunction, Deterministic) {
  auto g = path_graph(1000);
  auto a = make_random_function(g, 5);
  auto b = make_random_function(g, 5);
  auto c = make_random_function(g, 6);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
  auto sorted = a.values;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(ExpectedRank, BelowBound) {
  for (std::size_t n : {10u, 37u, 100u, 1000u, 10000u, 100000u}) {
    std::vector<std::size_t> qs{1, 2, 3, 5, 10, n / 3 + 1, n / 2, n};
    for (std::size_t q = 1; q <= n; q = q * 3 + 1) qs.push_back(q);
    for (std::size_t q : qs) {
      if (q == 0) continue;
      EXPECT_LT(brute::expected_rank(n, q), static_cast<double>(n) / (q + 1) + 1.0) << n << " " << q;
    }
  }
}
