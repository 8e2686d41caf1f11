#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsr/graph.hpp"

namespace lsr {

enum class FunctionKind { kRandom, kStaircase, kCustom };

/// Total map vertex -> value. Staircase values are small integers and are
/// stored exactly.
struct ValueFunction {
  std::vector<double> values;
  FunctionKind kind = FunctionKind::kCustom;
  std::optional<Vertex> target;  // staircase only

  std::size_t size() const { return values.size(); }
  double operator()(Vertex v) const { return values[v]; }
};

ValueFunction make_custom_function(std::vector<double> values);

/// f_z: -depth(x) on ancestors of z, +depth(x) elsewhere.
ValueFunction make_staircase(const SpanningTree& tree, Vertex z);

/// i.i.d. uniform [0, 1) values drawn from make_rng(seed, 0).
ValueFunction make_random_function(const Graph& g, std::uint64_t seed);

/// u before v iff f(u) < f(v), or equal values and u < v.
inline bool order_less(double fu, Vertex u, double fv, Vertex v) { return fu < fv || (fu == fv && u < v); }
inline bool order_less(const ValueFunction& f, Vertex u, Vertex v) { return order_less(f(u), u, f(v), v); }

/// 1-based position of v in the total order.
std::size_t rank(const ValueFunction& f, Vertex v);
/// rank of every vertex at once.
std::vector<std::size_t> ranks(const ValueFunction& f);

struct RoundRecord {
  std::vector<Vertex> batch;
  std::vector<double> answers;
};

struct Transcript {
  std::vector<RoundRecord> rounds;
  std::size_t total_queries = 0;

  std::size_t rounds_used() const { return rounds.size(); }
  /// total_queries equals the sum of batch sizes and answers align.
  bool consistent() const;
};

/// {"rounds":[{"batch":[...],"answers":[...]}],"total":N}
nlohmann::ordered_json to_json(const Transcript& t);

/// The only access path to f during a run.
class RoundOracle {
 public:
  RoundOracle(const ValueFunction& f, std::size_t t_budget) : f_(&f), t_budget_(t_budget) {}

  /// Answers every entry of the batch (duplicates included) and records
  /// the round. Throws RoundBudgetExceeded or InvalidVertex; a rejected
  /// batch consumes nothing.
  std::vector<double> submit_batch(std::span<const Vertex> batch);

  std::size_t t_budget() const { return t_budget_; }
  std::size_t rounds_used() const { return transcript_.rounds.size(); }
  std::size_t vertex_count() const { return f_->size(); }
  const Transcript& transcript() const { return transcript_; }
  Transcript take_transcript() { return std::move(transcript_); }

 private:
  const ValueFunction* f_;
  std::size_t t_budget_;
  Transcript transcript_;
};

}  // namespace lsr
