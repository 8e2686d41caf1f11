#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace lsr {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

using Edge = std::pair<Vertex, Vertex>;

enum class Connectivity { kRequired, kOptional };

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored in CSR form with every neighbor list sorted
/// ascending, so iteration order is deterministic everywhere.
class Graph {
 public:
  Graph() = default;

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, Connectivity);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Validates and builds a graph. Duplicate edges (in either orientation)
/// are merged. Throws InvalidGraph on self-loops or out-of-range ids and
/// DisconnectedGraph when connectivity is required but absent.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  Connectivity connectivity = Connectivity::kRequired);

std::size_t max_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Hop distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// {u : dist(v, u) <= radius}, sorted ascending.
std::vector<Vertex> ball(const Graph& g, Vertex v, std::size_t radius);

std::size_t diameter(const Graph& g);

/// Rooted spanning tree with O(1) ancestor queries.
class SpanningTree {
 public:
  Vertex root() const { return root_; }
  std::size_t size() const { return parent_.size(); }
  /// kNoVertex for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::size_t depth(Vertex v) const { return depth_[v]; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }

  /// True when `a` lies on the root-to-`v` path (inclusive on both ends).
  bool is_ancestor(Vertex a, Vertex v) const {
    return entry_[a] <= entry_[v] && exit_[v] <= exit_[a];
  }

  /// Builds a tree from a parent array; throws InvalidGraph if it is not
  /// a single tree rooted at `root`.
  static SpanningTree from_parents(Vertex root, std::vector<Vertex> parent);

 private:
  Vertex root_ = kNoVertex;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> entry_;
  std::vector<std::size_t> exit_;
};

/// BFS tree from `root` using sorted adjacency, so depth(v) = dist(root, v).
SpanningTree bfs_spanning_tree(const Graph& g, Vertex root = 0);

/// Vertices on the root-to-v path, ordered root first.
std::vector<Vertex> ancestors(const SpanningTree& tree, Vertex v);

/// Descendants of x including x, sorted ascending.
std::vector<Vertex> subtree(const SpanningTree& tree, Vertex x);

/// Whether the tree edges are all edges of g.
bool is_spanning_tree_of(const SpanningTree& tree, const Graph& g);

bool is_local_minimum(const Graph& g, std::span<const double> f, Vertex v);
std::vector<Vertex> all_local_minima(const Graph& g, std::span<const double> f);

inline constexpr std::size_t kExactCoverLimit = 24;

/// Minimum-cardinality vertex cover by branch and bound. Throws
/// ExactLimitExceeded above kExactCoverLimit vertices.
std::vector<Vertex> min_vertex_cover(const Graph& g);
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

/// Text format: "n m" then m lines "u v", 0-based.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace lsr
