// lsr: instance generation, single runs, sweeps, adversary evaluation,
// bound calculator and local-minimum verification.
//
// Exit codes: 0 ok, 1 invariant violation, 2 usage / input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lsr/adversary.hpp"
#include "lsr/algorithms.hpp"
#include "lsr/errors.hpp"
#include "lsr/generators.hpp"
#include "lsr/harness.hpp"
#include "lsr/random.hpp"
#include "lsr/separators.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

using lsr::Graph;
using lsr::Vertex;

struct GraphSource {
  std::string file;
  std::string family;
};

struct Instance {
  Graph g;
  std::optional<lsr::Family> family;
};

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* s = std::getenv("LSR_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw lsr::ParseError(std::string("LSR_SEED is not a number: ") + s);
  }
}

Instance load_instance(const GraphSource& src, std::uint64_t seed) {
  if (src.file.empty() == src.family.empty()) throw lsr::ParseError("give exactly one of --graph or --family");
  Instance inst;
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw lsr::ParseError("cannot open " + src.file);
    inst.g = lsr::read_graph(in);
  } else {
    inst.family = lsr::parse_family(src.family, seed);
    inst.g = lsr::generate(*inst.family);
  }
  return inst;
}

std::size_t separation(const Instance& inst, std::size_t flag) {
  if (flag > 0) return flag;
  return inst.family ? lsr::separation_for(*inst.family, inst.g.size()) : inst.g.size();
}

lsr::SeparatorMode parse_mode(const std::string& m) {
  if (m == "exact") return lsr::SeparatorMode::kExact;
  if (m == "heuristic") return lsr::SeparatorMode::kHeuristic;
  throw lsr::ParseError("mode must be exact or heuristic");
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw lsr::ParseError("cannot write " + path);
  out << j.dump(2) << '\n';
}

lsr::SearchResult run_algo(lsr::Algo algo, const Graph& g, lsr::RoundOracle& o, std::size_t t, std::size_t s,
                           lsr::SeparatorMode mode, std::uint64_t seed, bool cache) {
  const std::size_t n = g.size();
  const std::size_t delta = lsr::max_degree(g);
  switch (algo) {
    case lsr::Algo::kCover2: return lsr::vertex_cover_two_round(g, o, lsr::cover_for(g));
    case lsr::Algo::kSep2: {
      const std::size_t K = n > 1 && delta > 0 ? lsr::optimal_K(n, s, delta, 2).front() : n;
      return lsr::separator_two_round(g, o, K, mode);
    }
    case lsr::Algo::kSepT: return lsr::separator_t_round(g, o, t, s, mode);
    case lsr::Algo::kDescent:
      return lsr::parallel_warm_start(g, o, t, lsr::choose_descent_params(n, delta, t), seed,
                                      lsr::WarmStartOptions{cache});
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-limited local search: algorithms, adversary and bounds"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  bool seed_given = false;
  auto master_seed = [&] { return seed_given ? seed : env_seed(seed); };

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph as \"n m\" + edge lines");
  std::string gen_family;
  std::string gen_out;
  gen->add_option("--family", gen_family, "Family spec, e.g. tree:63, grid:8x8, regular:1024:3")->required();
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Run one algorithm on one instance");
  GraphSource run_src;
  std::string run_algo_name = "sept";
  std::size_t run_t = 2;
  std::size_t run_s = 0;
  std::string run_mode = "heuristic";
  std::string run_function = "random";
  std::string run_values;
  long long run_target = -1;
  Vertex run_root = 0;
  std::string run_transcript;
  std::string run_hierarchy;
  bool run_cache = false;
  run->add_option("--algo", run_algo_name, "cover2 | sep2 | sept | descent");
  run->add_option("--graph", run_src.file, "Graph file");
  run->add_option("--family", run_src.family, "Family spec");
  run->add_option("--t", run_t, "Round budget");
  run->add_option("--s", run_s, "Separation number (default: family value, else n)");
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--mode", run_mode, "exact | heuristic");
  run->add_option("--function", run_function, "random | staircase");
  run->add_option("--values", run_values, "File with one value per vertex (overrides --function)");
  run->add_option("--target", run_target, "Staircase target (default: drawn from the seed)");
  run->add_option("--root", run_root, "Spanning-tree root for staircase functions");
  run->add_option("--transcript", run_transcript, "Write the query transcript as JSON");
  run->add_option("--dump-hierarchy", run_hierarchy, "Write the separator hierarchy as JSON (sept)");
  run->add_flag("--cache", run_cache, "descent: skip re-querying known vertices");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a configured grid of trials and write CSV");
  std::string sweep_config;
  std::map<std::string, std::string> sweep_flags;
  sweep->add_option("--config", sweep_config, "key = value config file");
  for (const char* key : {"family", "n", "t", "algo", "seeds", "function", "mode", "out", "jobs"}) {
    sweep->add_option(std::string("--") + key, sweep_flags[key], std::string("Override config key '") + key + "'");
  }
  sweep->add_option("--seed", seed, "Master seed");

  // adversary
  auto* adv = app.add_subcommand("adversary", "Evaluate a deterministic algorithm against all staircase inputs");
  GraphSource adv_src;
  std::string adv_algo_name = "sept";
  std::size_t adv_t = 2;
  std::size_t adv_s = 0;
  Vertex adv_root = 0;
  std::string adv_mode = "heuristic";
  std::size_t adv_jobs = 1;
  std::string adv_partitions;
  adv->add_option("--graph", adv_src.file, "Graph file");
  adv->add_option("--family", adv_src.family, "Family spec");
  adv->add_option("--root", adv_root, "Spanning-tree root");
  adv->add_option("--algo", adv_algo_name, "cover2 | sep2 | sept | descent (seed pinned)");
  adv->add_option("--t", adv_t, "Round budget");
  adv->add_option("--s", adv_s, "Separation number");
  adv->add_option("--mode", adv_mode, "exact | heuristic");
  adv->add_option("--seed", seed, "Seed (random families; pinned descent seed)");
  adv->add_option("--jobs", adv_jobs, "Worker threads");
  adv->add_option("--partitions", adv_partitions, "Write per-round candidate-set partitions as JSON");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the upper and lower bound formulas");
  std::size_t b_n = 0;
  std::size_t b_t = 2;
  std::size_t b_s = 1;
  std::size_t b_delta = 2;
  double b_c = 1.0;
  bounds->add_option("--n", b_n, "Vertex count")->required();
  bounds->add_option("--t", b_t, "Rounds");
  bounds->add_option("--s", b_s, "Separation number");
  bounds->add_option("--delta", b_delta, "Maximum degree");
  bounds->add_option("--c", b_c, "Success probability for the lower bound");

  // verify
  auto* verify = app.add_subcommand("verify", "Check that a vertex is a local minimum");
  std::string v_graph;
  std::string v_values;
  Vertex v_vertex = 0;
  verify->add_option("--graph", v_graph, "Graph file")->required();
  verify->add_option("--values", v_values, "Value file (one value per vertex)")->required();
  verify->add_option("--vertex", v_vertex, "Vertex id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : {gen, run, sweep, adv}) {
    if (sub->count("--seed") > 0) seed_given = true;
  }

  try {
    if (*gen) {
      auto g = lsr::generate(lsr::parse_family(gen_family, master_seed()));
      if (gen_out.empty()) {
        lsr::write_graph(std::cout, g);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw lsr::ParseError("cannot write " + gen_out);
        lsr::write_graph(out, g);
      }
      return kOk;
    }

    if (*run) {
      const auto algo = lsr::parse_algo(run_algo_name);
      const auto mode = parse_mode(run_mode);
      const std::uint64_t ms = master_seed();
      auto inst = load_instance(run_src, ms);
      const Graph& g = inst.g;
      const std::size_t s = separation(inst, run_s);

      lsr::ValueFunction f;
      if (!run_values.empty()) {
        std::ifstream in(run_values);
        if (!in) throw lsr::ParseError("cannot open " + run_values);
        f = lsr::make_custom_function(lsr::read_values(in, g.size()));
      } else if (run_function == "staircase") {
        Vertex z = run_target >= 0 ? static_cast<Vertex>(run_target) : [&] {
          lsr::Rng pick = lsr::make_rng(ms, 2);
          return static_cast<Vertex>(lsr::uniform_index(pick, g.size()));
        }();
        f = lsr::make_staircase(lsr::bfs_spanning_tree(g, run_root), z);
      } else if (run_function == "random") {
        f = lsr::make_random_function(g, lsr::derive_seed(ms, 1));
      } else {
        throw lsr::ParseError("function must be random or staircase");
      }

      if (!run_hierarchy.empty()) {
        const std::size_t delta = lsr::max_degree(g);
        if (run_t < 2 || g.size() < 2 || 3 * s * delta >= g.size()) {
          throw lsr::InfeasibleParameters("no hierarchy: the t-round algorithm queries V in one round here");
        }
        auto K = lsr::optimal_K(g.size(), s, delta, run_t);
        write_json(run_hierarchy, lsr::to_json(lsr::build_hierarchy(g, K, mode)));
      }

      lsr::RoundOracle o(f, run_t);
      auto r = run_algo(algo, g, o, run_t, s, mode, lsr::derive_seed(ms, 3), run_cache);
      lsr::audit(g, f, r);
      if (!run_transcript.empty()) write_json(run_transcript, lsr::to_json(r.transcript));

      nlohmann::ordered_json j;
      j["algo"] = lsr::algo_name(algo);
      j["n"] = g.size();
      j["t"] = run_t;
      j["s"] = s;
      j["delta"] = lsr::max_degree(g);
      j["output"] = r.output ? nlohmann::ordered_json(*r.output) : nlohmann::ordered_json("Failure");
      j["verified"] = r.verified;
      j["queries"] = r.transcript.total_queries;
      j["rounds"] = r.rounds_used;
      if (algo == lsr::Algo::kSepT) {
        j["det_upper"] = lsr::det_upper_bound(g.size(), run_t, s, lsr::max_degree(g));
        j["exploration_violations"] = r.exploration_violations;
      }
      std::cout << j.dump(2) << '\n';
      const bool bad = (r.output && !r.verified) || r.exploration_violations > 0 || !r.transcript.consistent();
      return bad ? kViolation : kOk;
    }

    if (*sweep) {
      lsr::ExperimentConfig cfg;
      if (!sweep_config.empty()) {
        std::ifstream in(sweep_config);
        if (!in) throw lsr::ParseError("cannot open " + sweep_config);
        cfg = lsr::parse_config(in);
      }
      cfg.master_seed = env_seed(cfg.master_seed);
      if (seed_given) cfg.master_seed = seed;
      for (const auto& [key, value] : sweep_flags) {
        if (sweep->count("--" + key) > 0) lsr::apply_setting(cfg, key, value);
      }
      auto rows = lsr::run_sweep(cfg, cfg.jobs);
      if (cfg.out.empty()) {
        lsr::write_csv(std::cout, rows);
      } else {
        std::ofstream out(cfg.out);
        if (!out) throw lsr::ParseError("cannot write " + cfg.out);
        lsr::write_csv(out, rows);
      }
      int code = kOk;
      for (const auto& r : rows) {
        for (const auto& p : r.problems) {
          std::cerr << r.family << " t=" << r.t << " " << lsr::algo_name(r.algo) << " seed=" << r.seed << ": " << p
                    << '\n';
          code = kViolation;
        }
      }
      return code;
    }

    if (*adv) {
      const auto algo = lsr::parse_algo(adv_algo_name);
      const auto mode = parse_mode(adv_mode);
      const std::uint64_t ms = master_seed();
      auto inst = load_instance(adv_src, ms);
      const Graph& g = inst.g;
      const std::size_t s = separation(inst, adv_s);
      auto tree = lsr::bfs_spanning_tree(g, adv_root);
      const std::size_t t = adv_t;
      const std::uint64_t pinned = lsr::derive_seed(ms, 3);
      lsr::DeterministicAlgorithm fn = [&](const Graph& gg, lsr::RoundOracle& o) {
        return run_algo(algo, gg, o, t, s, mode, pinned, false);
      };
      auto ev = lsr::evaluate_deterministic(fn, tree, g, t, adv_jobs);
      const double lb = lsr::lower_bound_value(g.size(), t, ev.success_prob.value());
      nlohmann::ordered_json j;
      j["success_prob"] = ev.success_prob.value();
      j["expected_queries"] = ev.expected_queries.value();
      j["lower_bound"] = lb;
      j["margin"] = ev.expected_queries.value() - lb;
      j["success_prob_exact"] = ev.success_prob.str();
      j["expected_queries_exact"] = ev.expected_queries.str();
      j["partition_ok"] = ev.partition.ok();
      std::cout << j.dump(2) << '\n';
      if (!adv_partitions.empty()) write_json(adv_partitions, lsr::to_json(ev.partition));
      for (const auto& v : ev.partition.violations) std::cerr << v << '\n';
      return ev.partition.ok() && ev.expected_queries.value() >= lb ? kOk : kViolation;
    }

    if (*bounds) {
      auto b = lsr::compute_bounds(b_n, b_t, b_s, b_delta, b_c);
      std::cout << lsr::to_json(b).dump(2) << '\n';
      return kOk;
    }

    if (*verify) {
      std::ifstream gin(v_graph);
      if (!gin) throw lsr::ParseError("cannot open " + v_graph);
      auto g = lsr::read_graph(gin);
      std::ifstream fin(v_values);
      if (!fin) throw lsr::ParseError("cannot open " + v_values);
      auto f = lsr::read_values(fin, g.size());
      const bool ok = lsr::verify_local_minimum(g, f, v_vertex);
      std::cout << (ok ? "true" : "false") << '\n';
      return ok ? kOk : kViolation;
    }
  } catch (const lsr::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lsr::InvalidGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lsr::InvalidVertex& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lsr::InfeasibleParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lsr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kOk;
}
