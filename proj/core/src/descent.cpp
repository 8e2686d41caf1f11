#include <algorithm>
#include <string>

#include "lsr/algorithms.hpp"
#include "lsr/errors.hpp"
#include "lsr/random.hpp"

namespace lsr {

double KnownValues::get(Vertex v) const {
  if (!has(v)) throw MissingValue("value of vertex " + std::to_string(v) + " was never queried");
  return values_[v];
}

DescentPath steepest_descent(const Graph& g, const KnownValues& f, Vertex start, std::size_t max_steps) {
  DescentPath out;
  out.path.push_back(start);
  for (std::size_t step = 0;; ++step) {
    const Vertex v = out.path.back();
    Vertex best = v;
    double best_value = f.get(v);
    for (Vertex u : g.neighbors(v)) {
      const double fu = f.get(u);
      if (order_less(fu, u, best_value, best)) {
        best = u;
        best_value = fu;
      }
    }
    if (best == v) {
      out.terminated = true;
      break;
    }
    if (step == max_steps) break;
    out.path.push_back(best);
  }
  return out;
}

namespace {

// Smallest x >= 1 with pred(x); pred must be monotone.
template <typename Pred>
std::size_t least(Pred pred) {
  std::size_t hi = 1;
  while (!pred(hi)) hi *= 2;
  std::size_t lo = hi / 2 + 1;
  if (hi == 1) return 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace

DescentParams choose_descent_params(std::size_t n, std::size_t delta, std::size_t t) {
  if (t < 2) throw InfeasibleParameters("warm start needs t >= 2");
  DescentParams p;
  p.T = t - 1;
  if (delta <= 2) {
    p.q1 = least([&](std::size_t q) { return q * q >= 20 * n; });
    p.r = least([&](std::size_t r) { return (r * p.T) * (r * p.T) >= 5 * n; });
  } else {
    // (Delta-1)^(2r) >= n, i.e. r >= log_{Delta-1}(n) / 2.
    const std::size_t base = delta - 1;
    p.r = least([&](std::size_t r) {
      u128 acc = 1;
      for (std::size_t i = 0; i < 2 * r && acc < n; ++i) acc *= base;
      return acc >= n;
    });
    p.q1 = (10 * n + p.T * p.r - 1) / (p.T * p.r);
  }
  p.q1 = std::max<std::size_t>(p.q1, 1);
  return p;
}

SearchResult parallel_warm_start(const Graph& g, RoundOracle& o, std::size_t t, const DescentParams& params,
                                 std::uint64_t seed, WarmStartOptions options) {
  if (o.t_budget() < t) {
    throw RoundBudgetExceeded("warm start needs " + std::to_string(t) + " rounds, oracle allows " +
                              std::to_string(o.t_budget()));
  }
  const std::size_t n = g.size();
  auto done = [&](std::optional<Vertex> output) {
    SearchResult r;
    r.output = output;
    r.transcript = o.transcript();
    r.rounds_used = o.rounds_used();
    return r;
  };
  if (n == 1) {
    std::vector<Vertex> only{0};
    o.submit_batch(only);
    return done(0);
  }
  if (t < 2 || params.q1 < 1 || params.r < 1) throw InfeasibleParameters("warm start needs t >= 2, q1 >= 1, r >= 1");

  KnownValues known(n);
  Rng rng = make_rng(seed, 0);
  std::vector<Vertex> sample(params.q1);
  for (auto& v : sample) v = static_cast<Vertex>(uniform_index(rng, n));
  auto answers = o.submit_batch(sample);
  known.record(sample, answers);
  Vertex v = sample[0];
  double fv = answers[0];
  for (std::size_t i = 1; i < sample.size(); ++i) {
    if (order_less(answers[i], sample[i], fv, v)) {
      v = sample[i];
      fv = answers[i];
    }
  }

  for (std::size_t round = 2; round <= t; ++round) {
    auto region = ball(g, v, params.r + 1);
    if (options.cache_across_rounds) {
      std::erase_if(region, [&](Vertex u) { return known.has(u); });
    }
    known.record(region, o.submit_batch(region));
    auto walk = steepest_descent(g, known, v, params.r);
    if (walk.terminated) return done(walk.path.back());
    v = walk.path.back();
  }
  return done(std::nullopt);
}

}  // namespace lsr
