#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "fixtures.hpp"
#include "lsr/adversary.hpp"
#include "lsr/algorithms.hpp"
#include "lsr/errors.hpp"
#include "lsr/generators.hpp"

using namespace lsr;
using fixtures::id;
using fixtures::ids;

namespace {

SignHistory one_round(const SpanningTree& tree, const std::vector<Vertex>& q, Vertex target) {
  auto f = make_staircase(tree, target);
  RoundOracle o(f, 1);
  o.submit_batch(q);
  return SignHistory::from_transcript(tree, o.transcript());
}

}  // namespace

TEST(Signature, ExampleTree) {
  auto g = fixtures::example_tree();
  auto tree = bfs_spanning_tree(g, id(1));
  auto q = ids({2, 3, 10});
  EXPECT_TRUE(signature(tree, {}, id(4)).empty());
  EXPECT_EQ(signature(tree, q, id(4)), ids({2}));
  EXPECT_EQ(signature(tree, q, id(15)), ids({3, 10}));
  std::vector<Vertex> all(16);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(count_signatures(tree, q, all), 4u);
  EXPECT_EQ(count_signatures(tree, {}, all), 1u);
}

TEST(Signature, BoundOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    auto g = random_tree(n, trial);
    auto tree = bfs_spanning_tree(g, static_cast<Vertex>(rng() % n));
    std::vector<Vertex> q, all(n);
    std::iota(all.begin(), all.end(), 0);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) if (rng() % 4 == 0) q.push_back(v);
    EXPECT_LE(count_signatures(tree, q, all), q.size() + 1);
  }
}

TEST(CandidateSetTest, EmptyHistory) {
  auto g = fixtures::example_tree();
  auto tree = bfs_spanning_tree(g, id(1));
  auto c = candidate_set(tree, SignHistory{});
  EXPECT_EQ(c.r_h, id(1));
  EXPECT_EQ(c.members.size(), 16u);
}

TEST(CandidateSetTest, ExampleTreeAllTargets) {
  auto g = fixtures::example_tree();
  auto tree = bfs_spanning_tree(g, id(1));
  auto q = ids({2, 3, 10});
  const auto& table = fixtures::example_candidate_sets();
  for (int label = 1; label <= 16; ++label) {
    auto c = candidate_set(tree, one_round(tree, q, id(label)));
    std::vector<Vertex> want;
    for (int l : table[label - 1]) want.push_back(id(l));
    EXPECT_EQ(c.members, want) << "target " << label;
  }
  EXPECT_EQ(candidate_set(tree, one_round(tree, q, id(15))).r_h, id(10));
  EXPECT_EQ(candidate_set(tree, one_round(tree, q, id(4))).r_h, id(2));
}

TEST(CandidateSetTest, RejectsImpossibleHistories) {
  auto g = fixtures::example_tree();
  auto tree = bfs_spanning_tree(g, id(1));
  SignHistory branch;
  branch.append(ids({2, 3}), {Sign::kNeg, Sign::kNeg});
  EXPECT_THROW(candidate_set(tree, branch), InconsistentHistory);
  SignHistory cut_above;
  cut_above.append(ids({3, 10}), {Sign::kPos, Sign::kNeg});
  EXPECT_THROW(candidate_set(tree, cut_above), InconsistentHistory);
  SignHistory zero_off_root;
  zero_off_root.append(ids({4}), {Sign::kZero});
  EXPECT_THROW(candidate_set(tree, zero_off_root), InconsistentHistory);

  auto bad = make_custom_function(std::vector<double>(16, 7.0));
  RoundOracle o(bad, 1);
  o.submit_batch(ids({5}));
  EXPECT_THROW(SignHistory::from_transcript(tree, o.transcript()), InconsistentHistory);
}

TEST(CandidateSetTest, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 32;
    auto g = random_tree(n, trial);
    const Vertex root = static_cast<Vertex>(rng() % n);
    auto tree = bfs_spanning_tree(g, root);
    auto bt = brute::bfs_tree(g, root);
    const Vertex target = static_cast<Vertex>(rng() % n);
    auto f = make_staircase(tree, target);
    const std::size_t rounds = 1 + rng() % 4;
    RoundOracle o(f, rounds);
    std::vector<Vertex> all_q;
    std::vector<double> all_a;
    for (std::size_t r = 0; r < rounds; ++r) {
      std::vector<Vertex> batch;
      const std::size_t k = rng() % (n + 1) / 2;
      for (std::size_t i = 0; i < k; ++i) batch.push_back(static_cast<Vertex>(rng() % n));
      auto ans = o.submit_batch(batch);
      all_q.insert(all_q.end(), batch.begin(), batch.end());
      all_a.insert(all_a.end(), ans.begin(), ans.end());
      auto h = SignHistory::from_transcript(tree, o.transcript());
      auto c = candidate_set(tree, h);
      EXPECT_EQ(c.members, brute::consistent_targets(bt, all_q, all_a)) << "trial " << trial;
      EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), target));
      EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), c.r_h));
    }
  }
}

TEST(Evaluate, TrivialAlgorithms) {
  auto g = random_tree(20, 3);
  auto tree = bfs_spanning_tree(g, 0);
  DeterministicAlgorithm all = [](const Graph& gr, RoundOracle& o) {
    std::vector<Vertex> v(gr.size());
    std::iota(v.begin(), v.end(), 0);
    auto a = o.submit_batch(v);
    SearchResult r;
    r.output = static_cast<Vertex>(std::min_element(a.begin(), a.end()) - a.begin());
    return r;
  };
  auto e = evaluate_deterministic(all, tree, g, 1);
  EXPECT_EQ(e.success_prob, Rational::make(1, 1));
  EXPECT_EQ(e.expected_queries, Rational::make(20, 1));
  EXPECT_TRUE(e.partition.ok());

  DeterministicAlgorithm guess = [](const Graph&, RoundOracle&) {
    SearchResult r;
    r.output = 0;
    return r;
  };
  auto e2 = evaluate_deterministic(guess, tree, g, 1);
  EXPECT_EQ(e2.success_prob, Rational::make(1, 20));
  EXPECT_EQ(e2.expected_queries, Rational::make(0, 1));
  EXPECT_TRUE(e2.partition.ok());

  DeterministicAlgorithm greedy = [](const Graph& gr, RoundOracle& o) {
    std::vector<Vertex> v(gr.size());
    std::iota(v.begin(), v.end(), 0);
    o.submit_batch({v.data(), 1});
    o.submit_batch({v.data(), 1});
    return SearchResult{};
  };
  EXPECT_THROW(evaluate_deterministic(greedy, tree, g, 1), RoundBudgetExceeded);
}

TEST(Evaluate, SeparatorAlgorithmPartitions) {
  for (std::size_t n : {15u, 31u}) {
    auto g = random_tree(n, n);
    auto tree = bfs_spanning_tree(g, 0);
    for (std::size_t t : {2u, 3u}) {
      DeterministicAlgorithm algo = [t](const Graph& gr, RoundOracle& o) {
        return separator_t_round(gr, o, t, 1, SeparatorMode::kHeuristic);
      };
      auto e = evaluate_deterministic(algo, tree, g, t, 2);
      EXPECT_EQ(e.success_prob, Rational::make(1, 1));
      EXPECT_TRUE(e.partition.ok()) << to_json(e.partition).dump();
      EXPECT_GE(e.expected_queries.value(), lower_bound_value(n, t, 1.0));
      EXPECT_EQ(e.partition.rounds.size(), e.max_rounds + 1);
    }
  }
}

TEST(Evaluate, RejectsForeignTree) {
  auto g = path_graph(5);
  auto other = star_graph(5);
  auto tree = bfs_spanning_tree(other, 0);
  DeterministicAlgorithm nothing = [](const Graph&, RoundOracle&) { return SearchResult{}; };
  EXPECT_THROW(evaluate_deterministic(nothing, tree, g, 1), InvalidGraph);
}

TEST(LowerBound, Examples) {
  for (std::size_t n : {4u, 16u, 100u, 1000u}) {
    const double rn = std::sqrt(double(n));
    EXPECT_NEAR(lower_bound_value(n, 2, 1.0), 2 * rn - 2 - 2 / rn, 1e-12);
    EXPECT_EQ(lower_bound_value(n, 1, 1.0), double(n) - 1);
    EXPECT_EQ(lower_bound_value(n, 1, 0.5), std::ceil(0.5 * n) - 1);
  }
}

TEST(LowerBound, Monotone) {
  // On the c = k/100 grid the bound rises in c once n >= 100; below that the
  // (1-c)^(1-1/t) term dominates the last step.
  for (std::size_t t = 1; t <= 6; ++t) {
    for (std::size_t n = 2; n <= 5000; n = n * 3 / 2 + 1) {
      double prev = -1e300;
      for (int k = 1; k <= 100; ++k) {
        const double c = k / 100.0;
        if (c * n <= 1.0) continue;
        const double v = lower_bound_value(n, t, c);
        if (n >= 100 || t == 1) {
          EXPECT_GE(v, prev - 1e-9) << n << " " << t << " " << c;
        }
        prev = v;
        EXPECT_LE(v, lower_bound_value(n * 3 / 2 + 1, t, c) + 1e-9) << n << " " << t << " " << c;
      }
    }
  }
  EXPECT_GT(lower_bound_value(4, 2, 0.99), lower_bound_value(4, 2, 1.0));
}

TEST(RationalTest, Reduces) {
  EXPECT_EQ(Rational::make(6, 8).str(), "3/4");
  EXPECT_EQ(Rational::make(0, 5).str(), "0/1");
}
