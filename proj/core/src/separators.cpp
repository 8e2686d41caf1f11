#include "lsr/separators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lsr/errors.hpp"

namespace lsr {

namespace {

/// G[vertices] with dense local ids; local order follows the sorted input.
struct LocalGraph {
  std::vector<Vertex> global;
  std::vector<std::vector<int>> adj;

  LocalGraph(const Graph& g, std::span<const Vertex> vertices) : global(vertices.begin(), vertices.end()) {
    std::sort(global.begin(), global.end());
    global.erase(std::unique(global.begin(), global.end()), global.end());
    std::vector<int> local(g.size(), -1);
    for (std::size_t i = 0; i < global.size(); ++i) local[global[i]] = static_cast<int>(i);
    adj.resize(global.size());
    for (std::size_t i = 0; i < global.size(); ++i) {
      for (Vertex w : g.neighbors(global[i])) {
        if (local[w] >= 0) adj[i].push_back(local[w]);
      }
    }
  }

  std::size_t size() const { return global.size(); }
};

/// Components of the local graph with `removed` vertices deleted; each is a
/// list of local ids, components ordered by smallest member.
std::vector<std::vector<int>> components_without(const LocalGraph& lg, const std::vector<char>& removed) {
  const std::size_t m = lg.size();
  std::vector<char> seen(removed.begin(), removed.end());
  std::vector<std::vector<int>> comps;
  std::vector<int> queue;
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    queue.assign(1, static_cast<int>(s));
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : lg.adj[queue[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    comps.push_back(queue);
  }
  return comps;
}

/// Assigns items to side A (true) or B (false) with both sides <= limit.
std::optional<std::vector<bool>> pack_two_sides(const std::vector<std::size_t>& sizes, std::size_t limit) {
  const std::size_t k = sizes.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  // Longest-processing-time first; succeeds whenever no item exceeds half the total.
  std::vector<bool> side(k, false);
  std::size_t load_a = 0;
  std::size_t load_b = 0;
  for (std::size_t i : order) {
    if (load_a <= load_b) {
      side[i] = true;
      load_a += sizes[i];
    } else {
      load_b += sizes[i];
    }
  }
  if (load_a <= limit && load_b <= limit) return side;

  // Exact subset-sum fallback.
  const std::size_t total = load_a + load_b;
  if (total > 2 * limit) return std::nullopt;
  std::vector<int> from(total + 1, -1);
  std::vector<char> reach(total + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t s = total; s >= sizes[i] && s > 0; --s) {
      if (!reach[s] && reach[s - sizes[i]]) {
        reach[s] = 1;
        from[s] = static_cast<int>(i);
      }
    }
  }
  std::optional<std::size_t> best;
  for (std::size_t s = total - limit; s <= limit; ++s) {
    if (!reach[s]) continue;
    auto gap = [&](std::size_t x) { return x * 2 > total ? x * 2 - total : total - x * 2; };
    if (!best || gap(s) < gap(*best)) best = s;
  }
  if (!best) return std::nullopt;
  std::fill(side.begin(), side.end(), false);
  for (std::size_t s = *best; s > 0;) {
    auto i = static_cast<std::size_t>(from[s]);
    side[i] = true;
    s -= sizes[i];
  }
  return side;
}

struct Split {
  std::vector<int> separator;
  std::vector<int> side_a;
  std::vector<int> side_b;
};

/// Tries `sep` (local ids) as a separator of the local graph.
std::optional<Split> try_separator(const LocalGraph& lg, const std::vector<int>& sep, Balance alpha) {
  const std::size_t m = lg.size();
  std::vector<char> removed(m, 0);
  for (int v : sep) removed[v] = 1;
  auto comps = components_without(lg, removed);
  std::vector<std::size_t> sizes;
  sizes.reserve(comps.size());
  for (const auto& c : comps) sizes.push_back(c.size());
  const std::size_t limit = alpha.num * m / alpha.den;
  auto side = pack_two_sides(sizes, limit);
  if (!side) return std::nullopt;
  Split split;
  split.separator = sep;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& dst = (*side)[i] ? split.side_a : split.side_b;
    dst.insert(dst.end(), comps[i].begin(), comps[i].end());
  }
  return split;
}

SeparatorResult to_global(const LocalGraph& lg, const Split& split, Balance alpha) {
  SeparatorResult r;
  r.alpha = alpha;
  auto convert = [&](const std::vector<int>& local) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(lg.global[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  r.separator = convert(split.separator);
  r.side_a = convert(split.side_a);
  r.side_b = convert(split.side_b);
  return r;
}

std::optional<Split> exact_search(const LocalGraph& lg, Balance alpha, std::optional<std::size_t> budget,
                                 std::size_t work_limit) {
  const std::size_t m = lg.size();
  std::size_t work = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    if (budget && k > *budget) return std::nullopt;
    // Combinations in lexicographic order of local (= global) ids.
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (++work > work_limit) {
        throw ExactLimitExceeded("exact separator search exceeded " + std::to_string(work_limit) +
                                 " candidate sets on a " + std::to_string(m) + "-vertex subgraph");
      }
      if (auto split = try_separator(lg, comb, alpha)) return split;
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && comb[i] == static_cast<int>(m - k) + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// BFS order over the whole local graph: first the component holding
/// `start`, then the others by smallest member.
std::vector<int> bfs_order(const LocalGraph& lg, int start) {
  const std::size_t m = lg.size();
  std::vector<char> seen(m, 0);
  std::vector<int> order;
  order.reserve(m);
  auto run = [&](int s) {
    std::size_t head = order.size();
    order.push_back(s);
    seen[s] = 1;
    for (; head < order.size(); ++head) {
      for (int w : lg.adj[order[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  };
  run(start);
  for (std::size_t s = 0; s < m; ++s) {
    if (!seen[s]) run(static_cast<int>(s));
  }
  return order;
}

/// Smallest outer boundary N(P) \ P over BFS prefixes P that leave both
/// P and the remainder within the balance limit.
std::optional<std::vector<int>> best_prefix_cut(const LocalGraph& lg, int start, Balance alpha) {
  const std::size_t m = lg.size();
  const std::size_t limit = alpha.num * m / alpha.den;
  auto order = bfs_order(lg, start);
  std::vector<char> in_prefix(m, 0);
  std::vector<char> in_boundary(m, 0);
  std::size_t boundary = 0;
  std::optional<std::size_t> best_p;
  std::size_t best_size = m + 1;
  for (std::size_t p = 1; p < m; ++p) {
    int u = order[p - 1];
    in_prefix[u] = 1;
    if (in_boundary[u]) {
      in_boundary[u] = 0;
      --boundary;
    }
    for (int w : lg.adj[u]) {
      if (!in_prefix[w] && !in_boundary[w]) {
        in_boundary[w] = 1;
        ++boundary;
      }
    }
    if (p <= limit && m - p - boundary <= limit && boundary < best_size) {
      best_size = boundary;
      best_p = p;
    }
  }
  if (!best_p) return std::nullopt;
  std::fill(in_prefix.begin(), in_prefix.end(), 0);
  for (std::size_t i = 0; i < *best_p; ++i) in_prefix[order[i]] = 1;
  std::vector<int> sep;
  std::vector<char> marked(m, 0);
  for (std::size_t i = 0; i < *best_p; ++i) {
    for (int w : lg.adj[order[i]]) {
      if (!in_prefix[w] && !marked[w]) {
        marked[w] = 1;
        sep.push_back(w);
      }
    }
  }
  std::sort(sep.begin(), sep.end());
  return sep;
}

/// Centroid of the BFS tree of the component `comp` (local ids).
int tree_centroid(const LocalGraph& lg, const std::vector<int>& comp) {
  const std::size_t m = lg.size();
  std::vector<int> parent(m, -1);
  std::vector<char> seen(m, 0);
  std::vector<int> order{comp.front()};
  seen[comp.front()] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : lg.adj[order[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<std::size_t> sub(m, 1);
  std::vector<std::size_t> heaviest(m, 0);
  for (std::size_t i = order.size(); i-- > 1;) {
    int v = order[i];
    sub[parent[v]] += sub[v];
    heaviest[parent[v]] = std::max(heaviest[parent[v]], sub[v]);
  }
  const std::size_t total = order.size();
  int best = order.front();
  std::size_t best_load = total;
  for (int v : order) {
    std::size_t load = std::max(heaviest[v], total - sub[v]);
    if (load < best_load || (load == best_load && v < best)) {
      best_load = load;
      best = v;
    }
  }
  return best;
}

bool better(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::optional<Split> heuristic_search(const LocalGraph& lg, Balance alpha) {
  const std::size_t m = lg.size();
  if (auto split = try_separator(lg, {}, alpha)) return split;

  std::vector<char> none(m, 0);
  auto comps = components_without(lg, none);
  const auto& largest =
      *std::max_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::optional<Split> best;
  auto consider = [&](std::vector<int> sep) {
    std::sort(sep.begin(), sep.end());
    if (best && !better(sep, best->separator)) return;
    if (auto split = try_separator(lg, sep, alpha)) best = std::move(split);
  };

  const int centroid = tree_centroid(lg, largest);
  consider({centroid});

  // Start vertices: smallest member, a pseudo-peripheral pair, the centroid.
  std::vector<int> starts{largest.front()};
  auto far_end = [&](int s) { return bfs_order(lg, s)[largest.size() - 1]; };
  starts.push_back(far_end(starts.back()));
  starts.push_back(far_end(starts.back()));
  starts.push_back(centroid);
  for (int s : starts) {
    if (auto sep = best_prefix_cut(lg, s, alpha)) consider(std::move(*sep));
  }
  if (!best) return std::nullopt;

  // Greedy shrink: drop separator vertices while the split stays balanced.
  constexpr std::size_t kShrinkWork = 50'000'000;
  if (best->separator.size() * m <= kShrinkWork) {
    std::vector<int> sep = best->separator;
    for (std::size_t i = 0; i < sep.size();) {
      std::vector<int> trial = sep;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (auto split = try_separator(lg, trial, alpha)) {
        sep = std::move(trial);
        best = std::move(split);
      } else {
        ++i;
      }
    }
  }
  return best;
}

}  // namespace

SeparatorResult find_balanced_separator(const Graph& g, std::span<const Vertex> vertices, Balance alpha,
                                        SeparatorMode mode, std::optional<std::size_t> budget,
                                        std::size_t work_limit) {
  if (alpha.den == 0 || 2 * alpha.num < alpha.den || alpha.num >= alpha.den) {
    throw InfeasibleParameters("balance must lie in [1/2, 1)");
  }
  for (Vertex v : vertices) {
    if (!g.contains(v)) throw InvalidVertex("separator subset contains " + std::to_string(v));
  }
  LocalGraph lg(g, vertices);
  if (lg.size() <= 1) {
    SeparatorResult r;
    r.alpha = alpha;
    r.side_b = lg.global;
    return r;
  }
  std::optional<Split> split =
      mode == SeparatorMode::kExact ? exact_search(lg, alpha, budget, work_limit) : heuristic_search(lg, alpha);
  if (!split || (budget && split->separator.size() > *budget)) {
    throw NoSeparatorWithinBudget("no balanced separator within the requested budget");
  }
  return to_global(lg, *split, alpha);
}

bool is_valid_separator(const Graph& g, std::span<const Vertex> vertices, const SeparatorResult& r) {
  std::vector<Vertex> all(vertices.begin(), vertices.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Vertex> joined;
  joined.insert(joined.end(), r.separator.begin(), r.separator.end());
  joined.insert(joined.end(), r.side_a.begin(), r.side_a.end());
  joined.insert(joined.end(), r.side_b.begin(), r.side_b.end());
  std::sort(joined.begin(), joined.end());
  if (joined != all) return false;  // also rejects overlaps, which create duplicates

  if (all.size() > 1) {
    if (!r.alpha.admits(r.side_a.size(), all.size()) || !r.alpha.admits(r.side_b.size(), all.size())) return false;
  }
  std::vector<char> in_b(g.size(), 0);
  for (Vertex v : r.side_b) in_b[v] = 1;
  for (Vertex u : r.side_a) {
    for (Vertex w : g.neighbors(u)) {
      if (in_b[w]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> induced_components(const Graph& g, std::span<const Vertex> vertices) {
  LocalGraph lg(g, vertices);
  std::vector<char> none(lg.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (auto& comp : components_without(lg, none)) {
    std::vector<Vertex> c;
    c.reserve(comp.size());
    for (int v : comp) c.push_back(lg.global[v]);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void find_separator_rec(const Graph& g, std::vector<Vertex> part, std::size_t K, SeparatorMode mode,
                        std::vector<Vertex>& acc) {
  if (part.size() <= K) return;
  auto r = find_balanced_separator(g, part, Balance{}, mode);
  acc.insert(acc.end(), r.separator.begin(), r.separator.end());
  find_separator_rec(g, std::move(r.side_a), K, mode, acc);
  find_separator_rec(g, std::move(r.side_b), K, mode, acc);
}

}  // namespace

ShatterResult shatter(const Graph& g, std::span<const Vertex> vertices, std::size_t K, SeparatorMode mode) {
  if (K < 1) throw InfeasibleParameters("shatter needs K >= 1");
  std::vector<Vertex> part(vertices.begin(), vertices.end());
  std::sort(part.begin(), part.end());
  part.erase(std::unique(part.begin(), part.end()), part.end());

  ShatterResult out;
  out.K = K;
  find_separator_rec(g, part, K, mode, out.separator);
  std::sort(out.separator.begin(), out.separator.end());

  std::vector<char> removed(g.size(), 0);
  for (Vertex v : out.separator) removed[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v : part) {
    if (!removed[v]) rest.push_back(v);
  }
  out.components = induced_components(g, rest);
  return out;
}

ShatterResult shatter(const Graph& g, std::size_t K, SeparatorMode mode) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return shatter(g, all, K, mode);
}

std::vector<double> continuous_optimal_K(std::size_t n, std::size_t s, std::size_t delta, std::size_t t) {
  std::vector<double> K;
  if (t < 2) return K;
  const double three_s = 3.0 * static_cast<double>(std::max<std::size_t>(s, 1));
  const double ratio = static_cast<double>(n) / static_cast<double>(std::max<std::size_t>(delta, 1));
  for (std::size_t i = 1; i < t; ++i) {
    const double e = static_cast<double>(i) / static_cast<double>(t);
    K.push_back(std::pow(three_s, e) * std::pow(ratio, 1.0 - e));
  }
  return K;
}

std::vector<std::size_t> optimal_K(std::size_t n, std::size_t s, std::size_t delta, std::size_t t) {
  using boost::multiprecision::cpp_int;
  std::vector<std::size_t> K;
  if (t < 2 || n == 0) return K;
  s = std::max<std::size_t>(s, 1);
  delta = std::max<std::size_t>(delta, 1);
  auto approx = continuous_optimal_K(n, s, delta, t);
  std::size_t running = n;
  for (std::size_t i = 1; i < t; ++i) {
    // ceil(K*_i) is the least k with k^t * delta^(t-i) >= (3s)^i * n^(t-i).
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(3 * s), static_cast<unsigned>(i)) *
                        boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(t - i));
    const cpp_int scale = boost::multiprecision::pow(cpp_int(delta), static_cast<unsigned>(t - i));
    auto holds = [&](std::size_t k) {
      return boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(t)) * scale >= rhs;
    };
    std::size_t k;
    if (approx[i - 1] >= static_cast<double>(n) + 2.0) {
      k = n;
    } else {
      k = static_cast<std::size_t>(std::max(1.0, std::floor(approx[i - 1]) - 1.0));
      while (!holds(k)) ++k;
      while (k > 1 && holds(k - 1)) --k;
    }
    k = std::clamp<std::size_t>(k, 1, n);
    running = std::min(running, k);
    K.push_back(running);
  }
  return K;
}

double f_of_K(std::size_t n, std::size_t s, std::size_t delta, std::span<const double> K) {
  if (K.empty()) return static_cast<double>(n);
  const double three_s = 3.0 * static_cast<double>(s);
  const double d = static_cast<double>(delta);
  double total = three_s * static_cast<double>(n) / K.front();
  for (std::size_t i = 1; i < K.size(); ++i) total += three_s * d * K[i - 1] / K[i];
  total += d * K.back();
  return total;
}

double f_of_K(std::size_t n, std::size_t s, std::size_t delta, std::span<const std::size_t> K) {
  std::vector<double> real(K.begin(), K.end());
  return f_of_K(n, s, delta, real);
}

}  // namespace lsr
