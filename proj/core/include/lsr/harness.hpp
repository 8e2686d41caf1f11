#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsr/adversary.hpp"
#include "lsr/algorithms.hpp"
#include "lsr/generators.hpp"

namespace lsr {

struct QueryStats {
  std::size_t min = 0;
  double mean = 0.0;
  std::size_t max = 0;
  std::size_t count = 0;
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  std::size_t delta = 0;
  double c = 1.0;
  double det_upper = 0.0;   // min(n, 4 t n^(1/t) (s Delta)^(1-1/t))
  double rand_lower = 0.0;  // lower_bound_value(n, t, c)
  bool fallback = false;    // 3 s Delta >= n
  std::vector<std::size_t> K_hat;
  double f_K_hat = 0.0;
  double f_K_star = 0.0;
  std::optional<QueryStats> measured_queries;
  std::optional<Rational> measured_success;
};

BoundsReport compute_bounds(std::size_t n, std::size_t t, std::size_t s, std::size_t delta, double c = 1.0);
double det_upper_bound(std::size_t n, std::size_t t, std::size_t s, std::size_t delta);
nlohmann::ordered_json to_json(const BoundsReport& b);

enum class Algo { kCover2, kSep2, kSepT, kDescent };
Algo parse_algo(const std::string& name);
std::string algo_name(Algo a);

enum class FunctionChoice { kRandom, kStaircase };

struct ExperimentConfig {
  std::vector<std::string> families;  // base specs: tree, cycle, path, grid:D, regular:D, hypercube, bintree, ...
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> rounds;
  std::vector<Algo> algos{Algo::kSepT};
  std::vector<std::uint64_t> seeds;
  std::uint64_t master_seed = 1;
  FunctionChoice function = FunctionChoice::kRandom;
  SeparatorMode mode = SeparatorMode::kHeuristic;
  std::string out;
  std::size_t jobs = 1;
};

/// Sets one key ("family", "n", "t", "algo", "seeds", "seed", "function",
/// "mode", "out", "jobs"). List values are comma separated; seeds also
/// accept a range "A..B". Throws ParseError.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// "key = value" lines; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in);

/// Concrete family for base spec and size n; throws ParseError when n does
/// not fit the family (e.g. a non-square n for grid:2).
Family instantiate_family(const std::string& base, std::size_t n, std::uint64_t seed);

/// Separation number used for bounds: the family's known value, else n.
std::size_t separation_for(const Family& family, std::size_t n);

/// Exact minimum cover when n <= kExactCoverLimit, else the endpoints of a
/// greedy maximal matching.
std::vector<Vertex> cover_for(const Graph& g);

struct SweepRow {
  std::string family;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  std::size_t delta = 0;
  Algo algo = Algo::kSepT;
  std::uint64_t seed = 0;
  std::size_t queries = 0;
  std::size_t rounds = 0;
  bool success = false;   // a local minimum was returned
  double det_upper = 0.0;
  double rand_lower = 0.0;
  bool verified = false;  // no wrong answer and every audited invariant held
  std::vector<std::string> problems;
};

struct Trial {
  std::string family_spec;
  std::size_t n = 0;
  std::size_t t = 0;
  Algo algo = Algo::kSepT;
  std::uint64_t seed = 0;
};

/// Trials in (family, n, t, algo, seed) order.
std::vector<Trial> expand(const ExperimentConfig& cfg);

SweepRow run_trial(const ExperimentConfig& cfg, const Trial& trial);
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, std::size_t jobs);

inline constexpr const char* kCsvHeader =
    "family,n,t,s,delta,algo,seed,queries,rounds,success,det_upper,rand_lower,verified";
std::string csv_field(const std::string& s);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Whitespace-separated values in vertex order; throws ParseError unless
/// exactly n values parse.
std::vector<double> read_values(std::istream& in, std::size_t n);

bool verify_local_minimum(const Graph& g, std::span<const double> f, Vertex v);

}  // namespace lsr
