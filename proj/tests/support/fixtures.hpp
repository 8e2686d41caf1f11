#pragma once

// A 16-vertex rooted example tree with known staircase values and candidate sets.
// Vertices are labelled 1..16; ids here are label - 1.

#include <vector>

#include "lsr/graph.hpp"

namespace fixtures {

inline constexpr lsr::Vertex id(int label) { return label - 1; }

inline lsr::Graph example_tree() {
  const int pairs[][2] = {{1, 2},  {1, 3},  {2, 4},  {2, 7},  {4, 5},  {4, 6},  {3, 8},  {3, 9},
                          {3, 10}, {8, 11}, {8, 12}, {8, 13}, {8, 14}, {10, 15}, {10, 16}};
  std::vector<lsr::Edge> edges;
  for (auto& p : pairs) edges.emplace_back(id(p[0]), id(p[1]));
  return lsr::build_graph(16, edges);
}

inline std::vector<lsr::Vertex> ids(std::initializer_list<int> labels) {
  std::vector<lsr::Vertex> out;
  for (int l : labels) out.push_back(id(l));
  return out;
}

// Candidate set per target after querying labels {2, 3, 10} in round 1 (labels).
inline const std::vector<std::vector<int>>& example_candidate_sets() {
  static const std::vector<std::vector<int>> table = {
      {1},
      {2, 4, 5, 6, 7},
      {3, 8, 9, 11, 12, 13, 14},
      {2, 4, 5, 6, 7},
      {2, 4, 5, 6, 7},
      {2, 4, 5, 6, 7},
      {2, 4, 5, 6, 7},
      {3, 8, 9, 11, 12, 13, 14},
      {3, 8, 9, 11, 12, 13, 14},
      {10, 15, 16},
      {3, 8, 9, 11, 12, 13, 14},
      {3, 8, 9, 11, 12, 13, 14},
      {3, 8, 9, 11, 12, 13, 14},
      {3, 8, 9, 11, 12, 13, 14},
      {10, 15, 16},
      {10, 15, 16},
  };
  return table;
}

}  // namespace fixtures
