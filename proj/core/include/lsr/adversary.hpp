#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsr/algorithms.hpp"
#include "lsr/graph.hpp"
#include "lsr/oracle.hpp"

namespace lsr {

enum class Sign : std::int8_t { kNeg = -1, kZero = 0, kPos = 1 };

struct SignRound {
  std::vector<Vertex> batch;
  std::vector<Sign> signs;
};

/// Sign projection of a transcript on staircase inputs.
struct SignHistory {
  std::vector<SignRound> rounds;
  std::vector<Vertex> q_minus;  // sorted, deduplicated
  std::vector<Vertex> q_plus;   // sorted, deduplicated

  void append(std::vector<Vertex> batch, std::vector<Sign> signs);

  /// First `rounds` rounds of the transcript (all when rounds exceeds it).
  /// Throws InconsistentHistory if some answer is not +-depth(x).
  static SignHistory from_transcript(const SpanningTree& tree, const Transcript& transcript,
                                     std::size_t rounds = static_cast<std::size_t>(-1));
};

struct CandidateSet {
  Vertex r_h = kNoVertex;
  std::vector<Vertex> members;  // sorted
};

/// Q intersected with the ancestors of u, sorted.
std::vector<Vertex> signature(const SpanningTree& tree, std::span<const Vertex> Q, Vertex u);

/// Number of distinct signatures over u in U.
std::size_t count_signatures(const SpanningTree& tree, std::span<const Vertex> Q, std::span<const Vertex> U);

/// subtree(r_H) minus the subtrees of positively answered vertices, where
/// r_H is the deepest negatively answered vertex (or the root). Throws
/// InconsistentHistory when no staircase function produces h.
CandidateSet candidate_set(const SpanningTree& tree, const SignHistory& h);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct RoundPartition {
  std::size_t round = 0;
  std::vector<CandidateSet> sets;  // one per distinct history, ordered by smallest member
};

struct PartitionReport {
  std::vector<RoundPartition> rounds;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct Evaluation {
  Rational success_prob;
  Rational expected_queries;
  std::vector<std::size_t> queries;  // per target
  std::vector<char> success;         // per target
  std::size_t max_rounds = 0;
  PartitionReport partition;
};

using DeterministicAlgorithm = std::function<SearchResult(const Graph&, RoundOracle&)>;

/// Runs algo on f_v for every v (spread over `jobs` threads, reduced in
/// order of v) and checks after every round that grouping targets by
/// history gives exactly the candidate sets, which partition V.
/// Throws RoundBudgetExceeded if algo needs more than t rounds.
Evaluation evaluate_deterministic(const DeterministicAlgorithm& algo, const SpanningTree& tree, const Graph& g,
                                  std::size_t t, std::size_t jobs = 1);

/// c t n^(1/t) + t (1-c)^(1-1/t) - t - t n^(1/t - 1); ceil(c n) - 1 for t = 1.
double lower_bound_value(std::size_t n, std::size_t t, double c);

nlohmann::ordered_json to_json(const PartitionReport& report);

}  // namespace lsr
