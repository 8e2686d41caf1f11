#include "brute.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

namespace brute {

std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = static_cast<int>(g.size());
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<Vertex> local_minima(const Graph& g, const std::vector<double>& f) {
  std::vector<char> bad(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    if (f[u] < f[v]) bad[v] = 1;
    if (f[v] < f[u]) bad[u] = 1;
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!bad[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::size_t min_cover_size(const Graph& g) {
  const std::size_t n = g.size();
  auto edges = g.edges();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

std::size_t min_separator_size(const Graph& g, const std::vector<Vertex>& subset, std::size_t num,
                               std::size_t den) {
  const std::size_t m = subset.size();
  std::vector<int> idx(g.size(), -1);
  for (std::size_t i = 0; i < m; ++i) idx[subset[i]] = static_cast<int>(i);
  std::size_t best = m;
  for (std::uint32_t smask = 0; smask < (1u << m); ++smask) {
    const std::size_t ssize = __builtin_popcount(smask);
    if (ssize >= best) continue;
    // label components of the rest with a union-find
    std::vector<int> comp(m);
    for (std::size_t i = 0; i < m; ++i) comp[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (auto [u, v] : g.edges()) {
      int a = idx[u], b = idx[v];
      if (a < 0 || b < 0 || ((smask >> a) & 1) || ((smask >> b) & 1)) continue;
      comp[find(a)] = find(b);
    }
    std::vector<int> roots;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < m; ++i) {
      if ((smask >> i) & 1) continue;
      int r = find(static_cast<int>(i));
      auto it = std::find(roots.begin(), roots.end(), r);
      if (it == roots.end()) {
        roots.push_back(r);
        sizes.push_back(1);
      } else {
        ++sizes[it - roots.begin()];
      }
    }
    const std::size_t k = sizes.size();
    bool ok = false;
    for (std::uint32_t side = 0; side < (1u << k) && !ok; ++side) {
      std::size_t a = 0, b = 0;
      for (std::size_t c = 0; c < k; ++c) ((side >> c) & 1 ? a : b) += sizes[c];
      ok = a * den <= num * m && b * den <= num * m;
    }
    if (ok) best = ssize;
  }
  return best;
}

std::size_t Tree::depth(Vertex v) const {
  std::size_t d = 0;
  while (v != root) {
    v = parent[v];
    ++d;
  }
  return d;
}

bool Tree::ancestor(Vertex a, Vertex v) const {
  while (true) {
    if (v == a) return true;
    if (v == root) return false;
    v = parent[v];
  }
}

Tree bfs_tree(const Graph& g, Vertex root) {
  Tree t;
  t.root = root;
  t.parent.assign(g.size(), -2);
  t.parent[root] = -1;
  std::queue<Vertex> q;
  q.push(root);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (t.parent[w] == -2) {
        t.parent[w] = u;
        q.push(w);
      }
    }
  }
  return t;
}

std::vector<double> staircase(const Tree& t, Vertex z) {
  std::vector<double> f(t.parent.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const double d = static_cast<double>(t.depth(static_cast<Vertex>(x)));
    f[x] = t.ancestor(static_cast<Vertex>(x), z) ? -d : d;
  }
  return f;
}

std::vector<Vertex> consistent_targets(const Tree& t, const std::vector<Vertex>& queries,
                                       const std::vector<double>& answers) {
  std::vector<Vertex> out;
  for (std::size_t z = 0; z < t.parent.size(); ++z) {
    auto f = staircase(t, static_cast<Vertex>(z));
    bool ok = true;
    for (std::size_t i = 0; i < queries.size() && ok; ++i) ok = f[queries[i]] == answers[i];
    if (ok) out.push_back(static_cast<Vertex>(z));
  }
  return out;
}

double expected_rank(std::size_t n, std::size_t q) {
  double sum = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    sum += std::pow(1.0 - static_cast<double>(j - 1) / static_cast<double>(n), static_cast<double>(q));
  }
  return sum;
}

Graph random_attach_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<lsr::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(static_cast<Vertex>(pick(rng)), static_cast<Vertex>(i));
  }
  return lsr::build_graph(n, edges);
}

std::size_t grid_edge_count(const std::vector<std::size_t>& dims) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    std::size_t lines = 1;
    for (std::size_t j = 0; j < dims.size(); ++j)
      if (j != k) lines *= dims[j];
    total += lines * (dims[k] - 1);
  }
  return total;
}

}  // namespace brute
