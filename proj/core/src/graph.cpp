#include "lsr/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>

#include "lsr/errors.hpp"

namespace lsr {

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; static_cast<std::size_t>(u) < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, Connectivity connectivity) {
  if (n == 0) throw InvalidGraph("graph must have at least one vertex");
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : directed) ++g.offsets_[u + 1];
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.reserve(directed.size());
  for (auto [u, v] : directed) g.targets_.push_back(v);

  if (connectivity == Connectivity::kRequired && !is_connected(g)) {
    throw DisconnectedGraph("graph is not connected");
  }
  return g;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<Vertex> ball(const Graph& g, Vertex v, std::size_t radius) {
  if (!g.contains(v)) throw InvalidVertex("ball center " + std::to_string(v) + " out of range");
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> layer{v};
  std::vector<Vertex> out{v};
  seen[v] = 1;
  for (std::size_t d = 0; d < radius && !layer.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex u : layer) {
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
          out.push_back(w);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw DisconnectedGraph("diameter of a disconnected graph");
      best = std::max(best, static_cast<std::size_t>(d));
    }
  }
  return best;
}

SpanningTree SpanningTree::from_parents(Vertex root, std::vector<Vertex> parent) {
  const std::size_t n = parent.size();
  if (root < 0 || static_cast<std::size_t>(root) >= n) throw InvalidVertex("tree root out of range");
  if (parent[root] != kNoVertex) throw InvalidGraph("root must not have a parent");

  SpanningTree t;
  t.root_ = root;
  t.children_.assign(n, {});
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (v == root) continue;
    Vertex p = parent[v];
    if (p < 0 || static_cast<std::size_t>(p) >= n || p == v) {
      throw InvalidGraph("vertex " + std::to_string(v) + " has an invalid parent");
    }
    t.children_[p].push_back(v);
  }
  t.parent_ = std::move(parent);
  t.depth_.assign(n, 0);
  t.entry_.assign(n, 0);
  t.exit_.assign(n, 0);

  // Iterative DFS for Euler-tour intervals; also detects cycles/unreached vertices.
  std::size_t clock = 0;
  std::size_t visited = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  t.entry_[root] = clock++;
  ++visited;
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    if (next_child < t.children_[v].size()) {
      Vertex c = t.children_[v][next_child++];
      t.depth_[c] = t.depth_[v] + 1;
      t.entry_[c] = clock++;
      ++visited;
      stack.emplace_back(c, 0);
    } else {
      t.exit_[v] = clock++;
      stack.pop_back();
    }
  }
  if (visited != n) throw InvalidGraph("parent array does not describe a single tree");
  return t;
}

SpanningTree bfs_spanning_tree(const Graph& g, Vertex root) {
  if (!g.contains(root)) throw InvalidVertex("root " + std::to_string(root) + " out of range");
  std::vector<Vertex> parent(g.size(), kNoVertex);
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> queue{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != g.size()) throw DisconnectedGraph("spanning tree of a disconnected graph");
  return SpanningTree::from_parents(root, std::move(parent));
}

std::vector<Vertex> ancestors(const SpanningTree& tree, Vertex v) {
  std::vector<Vertex> path;
  for (Vertex x = v; x != kNoVertex; x = tree.parent(x)) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> subtree(const SpanningTree& tree, Vertex x) {
  std::vector<Vertex> out;
  std::vector<Vertex> stack{x};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex c : tree.children(v)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_spanning_tree_of(const SpanningTree& tree, const Graph& g) {
  if (tree.size() != g.size()) return false;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    Vertex p = tree.parent(v);
    if (p == kNoVertex) {
      if (v != tree.root()) return false;
    } else if (!g.has_edge(v, p)) {
      return false;
    }
  }
  return true;
}

bool is_local_minimum(const Graph& g, std::span<const double> f, Vertex v) {
  for (Vertex u : g.neighbors(v)) {
    if (f[u] < f[v]) return false;
  }
  return true;
}

std::vector<Vertex> all_local_minima(const Graph& g, std::span<const double> f) {
  std::vector<Vertex> out;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    if (is_local_minimum(g, f, v)) out.push_back(v);
  }
  return out;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.size(), 0);
  for (Vertex v : cover) {
    if (!g.contains(v)) return false;
    in[v] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

namespace {

struct CoverSearch {
  std::vector<std::uint32_t> adj;
  std::uint32_t best_mask = 0;
  int best_size = 0;

  // `alive` holds vertices not yet decided; edges among alive vertices are uncovered.
  void search(std::uint32_t chosen, int chosen_size, std::uint32_t alive) {
    if (chosen_size >= best_size) return;
    Vertex pick = kNoVertex;
    int pick_deg = 0;
    int edges2 = 0;
    for (std::uint32_t rest = alive; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      int d = std::popcount(adj[v] & alive);
      edges2 += d;
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick == kNoVertex) {
      best_size = chosen_size;
      best_mask = chosen;
      return;
    }
    // Each added vertex covers at most pick_deg of the remaining edges.
    int remaining_edges = edges2 / 2;
    int lower = (remaining_edges + pick_deg - 1) / pick_deg;
    if (chosen_size + lower >= best_size) return;

    const std::uint32_t bit = 1u << pick;
    search(chosen | bit, chosen_size + 1, alive & ~bit);
    const std::uint32_t nb = adj[pick] & alive;
    search(chosen | nb, chosen_size + std::popcount(nb), alive & ~bit & ~nb);
  }
};

}  // namespace

std::vector<Vertex> min_vertex_cover(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kExactCoverLimit) {
    throw ExactLimitExceeded("exact vertex cover supports at most " + std::to_string(kExactCoverLimit) +
                             " vertices, got " + std::to_string(n));
  }
  CoverSearch s;
  s.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= 1u << v;
    s.adj[v] |= 1u << u;
  }
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  s.best_size = static_cast<int>(n) + 1;
  s.search(0, 0, all);
  std::vector<Vertex> cover;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (s.best_mask & (1u << v)) cover.push_back(v);
  }
  return cover;
}

Graph read_graph(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n <= 0 || m < 0) throw ParseError("graph header must be \"n m\" with n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge " + std::to_string(i) + " references a vertex outside 0.." + std::to_string(n - 1));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace lsr
