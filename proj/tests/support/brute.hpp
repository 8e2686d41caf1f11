#pragma once

// Slow, independent reference implementations used as oracles in tests.
// None of them call into the corresponding library routine.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lsr/graph.hpp"

namespace brute {

using lsr::Graph;
using lsr::Vertex;

/// All-pairs hop distances by Floyd-Warshall (n small).
std::vector<std::vector<int>> all_pairs(const Graph& g);

/// Vertices with no strictly smaller neighbor, found by scanning the edge list.
std::vector<Vertex> local_minima(const Graph& g, const std::vector<double>& f);

/// Size of a minimum vertex cover by subset enumeration (n <= 20).
std::size_t min_cover_size(const Graph& g);

/// Size of a minimum (., num/den)-separator of G[subset], by enumerating
/// every S and every side assignment of the leftover components.
std::size_t min_separator_size(const Graph& g, const std::vector<Vertex>& subset, std::size_t num = 2,
                               std::size_t den = 3);

/// Rooted tree given by a parent array (root has parent -1).
struct Tree {
  Vertex root = 0;
  std::vector<Vertex> parent;

  std::size_t depth(Vertex v) const;
  bool ancestor(Vertex a, Vertex v) const;  // a on root..v path
};

Tree bfs_tree(const Graph& g, Vertex root);

/// f_z(x) = -depth(x) if x is an ancestor of z, else +depth(x).
std::vector<double> staircase(const Tree& t, Vertex z);

/// Targets z whose staircase reproduces every (vertex, answer) pair.
std::vector<Vertex> consistent_targets(const Tree& t, const std::vector<Vertex>& queries,
                                       const std::vector<double>& answers);

/// Exact sum from the expected-rank argument: sum_{j=1}^n (1 - (j-1)/n)^q.
double expected_rank(std::size_t n, std::size_t q);

/// Random labelled tree built by attaching vertex i to a uniform earlier vertex.
Graph random_attach_tree(std::size_t n, std::uint64_t seed);

/// Number of edges of the d-dimensional grid counted coordinate by coordinate.
std::size_t grid_edge_count(const std::vector<std::size_t>& dims);

}  // namespace brute
