#include "lsr/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lsr/errors.hpp"

namespace lsr {

namespace {

void require_rounds(const RoundOracle& o, std::size_t t) {
  if (o.t_budget() < t) {
    throw RoundBudgetExceeded("algorithm needs " + std::to_string(t) + " rounds, oracle allows " +
                              std::to_string(o.t_budget()));
  }
}

/// Running minimum over everything answered so far.
struct RunningMin {
  Vertex v = kNoVertex;
  double value = 0.0;

  void update(std::span<const Vertex> batch, std::span<const double> answers) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (v == kNoVertex || order_less(answers[i], batch[i], value, v)) {
        v = batch[i];
        value = answers[i];
      }
    }
  }
};

SearchResult finish(RoundOracle& o, std::optional<Vertex> output) {
  SearchResult r;
  r.output = output;
  r.transcript = o.transcript();
  r.rounds_used = o.rounds_used();
  return r;
}

SearchResult query_everything(const Graph& g, RoundOracle& o) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  RunningMin best;
  best.update(all, o.submit_batch(all));
  return finish(o, best.v);
}

}  // namespace

bool audit(const Graph& g, const ValueFunction& f, SearchResult& r) {
  r.verified = r.output.has_value() && is_local_minimum(g, f.values, *r.output);
  return r.verified;
}

SearchResult vertex_cover_two_round(const Graph& g, RoundOracle& o, std::span<const Vertex> cover) {
  if (!is_vertex_cover(g, cover)) throw InvalidCover("given set is not a vertex cover");
  require_rounds(o, 2);
  std::vector<Vertex> batch(cover.begin(), cover.end());
  std::sort(batch.begin(), batch.end());
  batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
  if (batch.empty()) return query_everything(g, o);  // edgeless, so n = 1

  KnownValues known(g.size());
  RunningMin z;
  auto answers = o.submit_batch(batch);
  known.record(batch, answers);
  z.update(batch, answers);

  std::vector<char> in_cover(g.size(), 0);
  for (Vertex v : batch) in_cover[v] = 1;
  std::vector<Vertex> outside;
  for (Vertex w : g.neighbors(z.v)) {
    if (!in_cover[w]) outside.push_back(w);
  }
  known.record(outside, o.submit_batch(outside));

  Vertex best = z.v;
  for (Vertex w : g.neighbors(z.v)) {
    if (order_less(known.get(w), w, known.get(best), best)) best = w;
  }
  return finish(o, best);
}

SearchResult separator_two_round(const Graph& g, RoundOracle& o, std::size_t K, SeparatorMode mode) {
  require_rounds(o, 2);
  return separator_two_round(g, o, shatter(g, K, mode));
}

SearchResult separator_two_round(const Graph& g, RoundOracle& o, const ShatterResult& sh) {
  require_rounds(o, 2);
  if (sh.separator.empty()) return query_everything(g, o);

  KnownValues known(g.size());
  RunningMin vmin;
  auto answers = o.submit_batch(sh.separator);
  known.record(sh.separator, answers);
  vmin.update(sh.separator, answers);

  std::vector<std::int32_t> comp_of(g.size(), -1);
  for (std::size_t c = 0; c < sh.components.size(); ++c) {
    for (Vertex v : sh.components[c]) comp_of[v] = static_cast<std::int32_t>(c);
  }
  std::vector<std::int32_t> adjacent;
  for (Vertex w : g.neighbors(vmin.v)) {
    if (comp_of[w] >= 0) adjacent.push_back(comp_of[w]);
  }
  std::sort(adjacent.begin(), adjacent.end());
  adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
  std::vector<Vertex> batch;
  for (auto c : adjacent) batch.insert(batch.end(), sh.components[c].begin(), sh.components[c].end());
  known.record(batch, o.submit_batch(batch));

  // v_min itself if no neighbor is smaller; otherwise the minimum of the
  // component holding its smallest neighbor.
  Vertex smallest_nb = kNoVertex;
  for (Vertex w : g.neighbors(vmin.v)) {
    if (smallest_nb == kNoVertex || order_less(known.get(w), w, known.get(smallest_nb), smallest_nb)) {
      smallest_nb = w;
    }
  }
  if (smallest_nb == kNoVertex || order_less(vmin.value, vmin.v, known.get(smallest_nb), smallest_nb)) {
    return finish(o, vmin.v);
  }
  Vertex best = kNoVertex;
  for (Vertex v : sh.components[comp_of[smallest_nb]]) {
    if (best == kNoVertex || order_less(known.get(v), v, known.get(best), best)) best = v;
  }
  return finish(o, best);
}

SearchResult separator_t_round(const Graph& g, RoundOracle& o, std::size_t t, std::size_t s, SeparatorMode mode) {
  if (t < 2) throw InfeasibleParameters("separator_t_round needs t >= 2");
  if (s < 1) throw InfeasibleParameters("separation number must be positive");
  require_rounds(o, t);
  const std::size_t n = g.size();
  const std::size_t delta = max_degree(g);
  if (n == 1 || 3 * s * delta >= n) return query_everything(g, o);
  auto K = optimal_K(n, s, delta, t);
  auto h = build_hierarchy(g, K, mode);
  return separator_t_round(g, o, h);
}

SearchResult separator_t_round(const Graph& g, RoundOracle& o, const SeparatorHierarchy& h) {
  const std::size_t t = h.rounds();
  require_rounds(o, t);
  KnownValues known(g.size());
  RunningMin vmin;
  std::vector<std::vector<Vertex>> queried_in(t + 1);
  // skipped[i] holds level-(i-1) components not adjacent to v_{i-1}.
  std::vector<std::vector<std::size_t>> skipped(t + 1);

  auto submit = [&](std::size_t round, std::vector<Vertex> batch) {
    auto answers = o.submit_batch(batch);
    known.record(batch, answers);
    vmin.update(batch, answers);
    queried_in[round] = std::move(batch);
  };

  submit(1, h.node(h.root()).separator);

  for (std::size_t i = 2; i <= t; ++i) {
    const std::size_t level = i - 1;
    std::vector<std::size_t> adjacent;
    if (vmin.v == kNoVertex) {
      auto all = h.components_at(level);
      adjacent.assign(all.begin(), all.end());
    } else {
      for (Vertex w : g.neighbors(vmin.v)) {
        if (auto c = h.component_of(w, level)) adjacent.push_back(*c);
      }
      std::sort(adjacent.begin(), adjacent.end());
      adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
    }
    for (std::size_t c : h.components_at(level)) {
      if (!std::binary_search(adjacent.begin(), adjacent.end(), c)) skipped[i].push_back(c);
    }
    std::vector<Vertex> batch;
    for (std::size_t c : adjacent) {
      const auto& node = h.node(c);
      const auto& part = i < t ? node.separator : node.vertices;
      batch.insert(batch.end(), part.begin(), part.end());
    }
    submit(i, std::move(batch));
  }

  SearchResult r = finish(o, vmin.v == kNoVertex ? std::nullopt : std::optional<Vertex>(vmin.v));

  for (std::size_t i = 2; i <= t; ++i) {
    std::vector<char> flagged(h.nodes().size(), 0);
    for (std::size_t c : skipped[i]) flagged[c] = 1;
    r.exploration_checks += skipped[i].size();
    std::vector<char> hit(h.nodes().size(), 0);
    for (std::size_t round = i; round <= t; ++round) {
      for (Vertex v : queried_in[round]) {
        auto c = h.component_of(v, i - 1);
        if (c && flagged[*c] && !hit[*c]) {
          hit[*c] = 1;
          ++r.exploration_violations;
        }
      }
    }
  }
  return r;
}

}  // namespace lsr
