#include "lsr/harness.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "lsr/errors.hpp"
#include "lsr/parallel.hpp"
#include "lsr/random.hpp"

namespace lsr {

double det_upper_bound(std::size_t n, std::size_t t, std::size_t s, std::size_t delta) {
  const double nn = static_cast<double>(n);
  const double tt = static_cast<double>(t);
  const double sd = static_cast<double>(s) * static_cast<double>(delta);
  return std::min(nn, 4.0 * tt * std::pow(nn, 1.0 / tt) * std::pow(sd, 1.0 - 1.0 / tt));
}

BoundsReport compute_bounds(std::size_t n, std::size_t t, std::size_t s, std::size_t delta, double c) {
  BoundsReport b;
  b.n = n;
  b.t = t;
  b.s = s;
  b.delta = delta;
  b.c = c;
  b.det_upper = det_upper_bound(n, t, s, delta);
  b.rand_lower = lower_bound_value(n, t, c);
  b.fallback = 3 * s * delta >= n;
  if (t >= 2) {
    b.K_hat = optimal_K(n, s, delta, t);
    b.f_K_hat = f_of_K(n, s, delta, std::span<const std::size_t>(b.K_hat));
    auto K_star = continuous_optimal_K(n, s, delta, t);
    b.f_K_star = f_of_K(n, s, delta, std::span<const double>(K_star));
  }
  return b;
}

nlohmann::ordered_json to_json(const BoundsReport& b) {
  nlohmann::ordered_json j;
  j["n"] = b.n;
  j["t"] = b.t;
  j["s"] = b.s;
  j["delta"] = b.delta;
  j["c"] = b.c;
  j["det_upper"] = b.det_upper;
  j["rand_lower"] = b.rand_lower;
  j["fallback"] = b.fallback;
  j["K_hat"] = b.K_hat;
  j["f_K_hat"] = b.f_K_hat;
  j["f_K_star"] = b.f_K_star;
  if (b.measured_queries) {
    j["measured_queries"] = {{"min", b.measured_queries->min},
                             {"mean", b.measured_queries->mean},
                             {"max", b.measured_queries->max},
                             {"count", b.measured_queries->count}};
  }
  if (b.measured_success) j["measured_success"] = b.measured_success->str();
  return j;
}

Algo parse_algo(const std::string& name) {
  if (name == "cover2") return Algo::kCover2;
  if (name == "sep2") return Algo::kSep2;
  if (name == "sept") return Algo::kSepT;
  if (name == "descent") return Algo::kDescent;
  throw ParseError("unknown algorithm '" + name + "' (cover2, sep2, sept, descent)");
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::kCover2: return "cover2";
    case Algo::kSep2: return "sep2";
    case Algo::kSepT: return "sept";
    case Algo::kDescent: return "descent";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw ParseError("bad number '" + s + "' for '" + key + "'");
  }
  return v;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "family") {
    cfg.families = split_list(value);
  } else if (key == "n") {
    cfg.sizes.clear();
    for (const auto& x : split_list(value)) cfg.sizes.push_back(parse_u64(x, key));
  } else if (key == "t") {
    cfg.rounds.clear();
    for (const auto& x : split_list(value)) cfg.rounds.push_back(parse_u64(x, key));
  } else if (key == "algo") {
    cfg.algos.clear();
    for (const auto& x : split_list(value)) cfg.algos.push_back(parse_algo(x));
  } else if (key == "seeds") {
    cfg.seeds.clear();
    for (const auto& x : split_list(value)) {
      auto dots = x.find("..");
      if (dots == std::string::npos) {
        cfg.seeds.push_back(parse_u64(x, key));
      } else {
        const auto lo = parse_u64(x.substr(0, dots), key);
        const auto hi = parse_u64(x.substr(dots + 2), key);
        for (auto s = lo; s <= hi; ++s) cfg.seeds.push_back(s);
      }
    }
  } else if (key == "seed") {
    cfg.master_seed = parse_u64(value, key);
  } else if (key == "function") {
    if (value == "random") cfg.function = FunctionChoice::kRandom;
    else if (value == "staircase") cfg.function = FunctionChoice::kStaircase;
    else throw ParseError("function must be random or staircase, got '" + value + "'");
  } else if (key == "mode") {
    if (value == "heuristic") cfg.mode = SeparatorMode::kHeuristic;
    else if (value == "exact") cfg.mode = SeparatorMode::kExact;
    else throw ParseError("mode must be exact or heuristic, got '" + value + "'");
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "jobs") {
    cfg.jobs = std::max<std::size_t>(1, parse_u64(value, key));
  } else {
    throw ParseError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

Family instantiate_family(const std::string& base, std::size_t n, std::uint64_t seed) {
  const auto colon = base.find(':');
  const std::string kind = base.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : base.substr(colon + 1);
  auto no_param = [&] {
    if (!param.empty()) throw ParseError("family '" + kind + "' takes no parameter in a sweep");
  };
  const std::string N = std::to_string(n);
  if (kind == "path" || kind == "cycle" || kind == "tree" || kind == "complete" || kind == "star") {
    no_param();
    return parse_family(kind + ":" + N, seed);
  }
  if (kind == "regular") return parse_family("regular:" + N + ":" + (param.empty() ? "3" : param), seed);
  if (kind == "grid") {
    const std::size_t d = param.empty() ? 2 : parse_u64(param, "grid dimension");
    if (d == 0) throw ParseError("grid dimension must be positive");
    auto side = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d))));
    std::size_t prod = 1;
    for (std::size_t i = 0; i < d; ++i) prod *= side;
    if (prod != n) throw ParseError("n = " + N + " is not a perfect " + std::to_string(d) + "-th power");
    return family::Grid{std::vector<std::size_t>(d, side)};
  }
  if (kind == "hypercube") {
    no_param();
    if (n == 0 || (n & (n - 1)) != 0) throw ParseError("hypercube needs n a power of two");
    return family::Hypercube{static_cast<std::size_t>(std::countr_zero(n))};
  }
  if (kind == "bintree") {
    no_param();
    if (((n + 1) & n) != 0) throw ParseError("bintree needs n = 2^(d+1) - 1");
    return family::CompleteBinaryTree{static_cast<std::size_t>(std::countr_zero(n + 1)) - 1};
  }
  throw ParseError("unknown graph family '" + kind + "'");
}

std::size_t separation_for(const Family& family, std::size_t n) { return known_separation(family).value_or(n); }

std::vector<Vertex> cover_for(const Graph& g) {
  if (g.size() <= kExactCoverLimit) return min_vertex_cover(g);
  std::vector<char> taken(g.size(), 0);
  std::vector<Vertex> cover;
  for (auto [u, v] : g.edges()) {
    if (!taken[u] && !taken[v]) {
      taken[u] = taken[v] = 1;
      cover.push_back(u);
      cover.push_back(v);
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<Trial> expand(const ExperimentConfig& cfg) {
  std::vector<Trial> trials;
  for (const auto& fam : cfg.families) {
    for (std::size_t n : cfg.sizes) {
      for (std::size_t t : cfg.rounds) {
        for (Algo a : cfg.algos) {
          for (std::uint64_t seed : cfg.seeds) trials.push_back({fam, n, t, a, seed});
        }
      }
    }
  }
  return trials;
}

SweepRow run_trial(const ExperimentConfig& cfg, const Trial& trial) {
  SweepRow row;
  row.n = trial.n;
  row.t = trial.t;
  row.algo = trial.algo;
  row.seed = trial.seed;
  row.family = trial.family_spec;
  try {
    const std::uint64_t trial_seed = derive_seed(cfg.master_seed, trial.seed);
    const Family fam = instantiate_family(trial.family_spec, trial.n, trial_seed);
    row.family = describe(fam);
    const Graph g = generate(fam);
    row.n = g.size();
    row.delta = max_degree(g);
    const bool s_known = known_separation(fam).has_value();
    row.s = separation_for(fam, g.size());
    row.det_upper = det_upper_bound(row.n, row.t, row.s, row.delta);
    row.rand_lower = lower_bound_value(row.n, row.t, trial.algo == Algo::kDescent ? 0.9 : 1.0);

    ValueFunction f;
    if (cfg.function == FunctionChoice::kRandom) {
      f = make_random_function(g, derive_seed(trial_seed, 1));
    } else {
      Rng pick = make_rng(trial_seed, 2);
      f = make_staircase(bfs_spanning_tree(g, 0), static_cast<Vertex>(uniform_index(pick, g.size())));
    }
    RoundOracle o(f, trial.t);
    SearchResult r;
    switch (trial.algo) {
      case Algo::kCover2: r = vertex_cover_two_round(g, o, cover_for(g)); break;
      case Algo::kSep2: {
        const std::size_t K = row.n > 1 && row.delta > 0 ? optimal_K(row.n, row.s, row.delta, 2).front() : row.n;
        r = separator_two_round(g, o, K, cfg.mode);
        break;
      }
      case Algo::kSepT: r = separator_t_round(g, o, trial.t, row.s, cfg.mode); break;
      case Algo::kDescent:
        r = parallel_warm_start(g, o, trial.t, choose_descent_params(row.n, row.delta, trial.t),
                                derive_seed(trial_seed, 3));
        break;
    }
    audit(g, f, r);
    row.queries = r.transcript.total_queries;
    row.rounds = r.rounds_used;
    row.success = r.verified;
    if (r.output && !r.verified) row.problems.push_back("output is not a local minimum");
    if (!r.transcript.consistent()) row.problems.push_back("transcript accounting mismatch");
    if (r.rounds_used > trial.t) row.problems.push_back("round budget exceeded");
    if (r.exploration_violations > 0) row.problems.push_back("non-exploration violated");
    if (trial.algo == Algo::kSepT && s_known && static_cast<double>(row.queries) > row.det_upper) {
      row.problems.push_back("queries exceed the deterministic upper bound");
    }
  } catch (const Error& e) {
    row.problems.push_back(e.what());
  }
  row.verified = row.problems.empty();
  return row;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, std::size_t jobs) {
  const auto trials = expand(cfg);
  std::vector<SweepRow> rows(trials.size());
  parallel_for(trials.size(), jobs, [&](std::size_t i) { rows[i] = run_trial(cfg, trials[i]); });
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.family) << ',' << r.n << ',' << r.t << ',' << r.s << ',' << r.delta << ','
        << algo_name(r.algo) << ',' << r.seed << ',' << r.queries << ',' << r.rounds << ','
        << (r.success ? "true" : "false") << ',' << fixed6(r.det_upper) << ',' << fixed6(r.rand_lower) << ','
        << (r.verified ? "true" : "false") << '\n';
  }
}

std::vector<double> read_values(std::istream& in, std::size_t n) {
  std::vector<double> values;
  std::string tok;
  while (in >> tok) {
    double x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || p != tok.data() + tok.size()) throw ParseError("bad value '" + tok + "'");
    values.push_back(x);
  }
  if (values.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " values, read " + std::to_string(values.size()));
  }
  return values;
}

bool verify_local_minimum(const Graph& g, std::span<const double> f, Vertex v) {
  if (!g.contains(v)) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  if (f.size() != g.size()) throw ParseError("value count does not match the graph");
  return is_local_minimum(g, f, v);
}

}  // namespace lsr
