#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lsr/graph.hpp"
#include "lsr/oracle.hpp"
#include "lsr/separators.hpp"

namespace lsr {

struct SearchResult {
  std::optional<Vertex> output;  // nullopt is Failure
  Transcript transcript;
  std::size_t rounds_used = 0;
  bool verified = false;

  // Non-exploration audit, filled by separator_t_round: one check per
  // (round i, level-(i-1) component not adjacent to v_{i-1}).
  std::size_t exploration_checks = 0;
  std::size_t exploration_violations = 0;
};

/// Sets r.verified by a brute-force neighbor check against the full f.
bool audit(const Graph& g, const ValueFunction& f, SearchResult& r);

/// Round 1 queries the cover, round 2 the neighbors of its minimum Z that
/// lie outside it. Throws InvalidCover.
SearchResult vertex_cover_two_round(const Graph& g, RoundOracle& o, std::span<const Vertex> cover);

/// Round 1 queries the shattering separator, round 2 every component
/// adjacent to its minimum. K >= n degenerates to one round over V.
SearchResult separator_two_round(const Graph& g, RoundOracle& o, std::size_t K, SeparatorMode mode);
/// Same, with the shattering of V precomputed.
SearchResult separator_two_round(const Graph& g, RoundOracle& o, const ShatterResult& sh);

/// t rounds over the hierarchy built from optimal_K(n, s, Delta, t). Falls
/// back to a single round over V when 3 s Delta >= n.
SearchResult separator_t_round(const Graph& g, RoundOracle& o, std::size_t t, std::size_t s, SeparatorMode mode);

/// Runs the round schedule on a prebuilt hierarchy (t = h.rounds()).
SearchResult separator_t_round(const Graph& g, RoundOracle& o, const SeparatorHierarchy& h);

/// Values learned from oracle answers.
class KnownValues {
 public:
  explicit KnownValues(std::size_t n) : values_(n, 0.0), known_(n, 0) {}

  void set(Vertex v, double x) {
    values_[v] = x;
    known_[v] = 1;
  }
  void record(std::span<const Vertex> batch, std::span<const double> answers) {
    for (std::size_t i = 0; i < batch.size(); ++i) set(batch[i], answers[i]);
  }
  bool has(Vertex v) const { return known_[v] != 0; }
  /// Throws MissingValue.
  double get(Vertex v) const;

 private:
  std::vector<double> values_;
  std::vector<char> known_;
};

struct DescentPath {
  std::vector<Vertex> path;  // path[0] is the start
  bool terminated = false;   // path.back() has no smaller neighbor
};

/// Follows the smallest smaller neighbor (under the total order) for at
/// most max_steps steps. Needs values within max_steps + 1 hops of start.
DescentPath steepest_descent(const Graph& g, const KnownValues& f, Vertex start, std::size_t max_steps);

struct DescentParams {
  std::size_t q1 = 1;
  std::size_t r = 1;
  std::size_t T = 1;
};

/// Delta <= 2: q1 = ceil(sqrt(20n)), r = ceil(sqrt(5n)/T).
/// Delta >= 3: r = ceil(log_{Delta-1}(n)/2), q1 = ceil(10n/(T r)).
/// Ceilings are computed in integers; r is at least 1.
DescentParams choose_descent_params(std::size_t n, std::size_t delta, std::size_t t);

struct WarmStartOptions {
  /// Skip ball vertices already known from earlier rounds.
  bool cache_across_rounds = false;
};

/// Samples q1 vertices with replacement from make_rng(seed, 0), then spends
/// rounds 2..t on ball(v, r+1) and r simulated descent steps each.
SearchResult parallel_warm_start(const Graph& g, RoundOracle& o, std::size_t t, const DescentParams& params,
                                 std::uint64_t seed, WarmStartOptions options = {});

}  // namespace lsr
