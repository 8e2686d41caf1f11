#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsr/graph.hpp"

namespace lsr {

/// Balance parameter alpha = num/den, kept rational so |A| <= alpha|V|
/// is decided in integer arithmetic.
struct Balance {
  std::size_t num = 2;
  std::size_t den = 3;

  bool admits(std::size_t part, std::size_t total) const { return part * den <= num * total; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class SeparatorMode { kExact, kHeuristic };

/// Candidate sets examined by exact mode before it gives up.
inline constexpr std::size_t kExactSeparatorWork = 2'000'000;

/// An (|S|, alpha)-separator of an induced subgraph. All three vertex
/// lists are sorted.
struct SeparatorResult {
  std::vector<Vertex> separator;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  Balance alpha;
};

/// Exact mode returns a minimum separator, ties broken towards the
/// lexicographically smallest vertex set. Heuristic mode combines a
/// spanning-tree centroid candidate with BFS-prefix boundary cuts from a
/// few start vertices, then greedily drops separator vertices.
///
/// Throws ExactLimitExceeded (exact mode after `work_limit` candidate sets)
/// or NoSeparatorWithinBudget when the best separator is larger than `budget`.
SeparatorResult find_balanced_separator(const Graph& g, std::span<const Vertex> vertices, Balance alpha,
                                        SeparatorMode mode, std::optional<std::size_t> budget = std::nullopt,
                                        std::size_t work_limit = kExactSeparatorWork);

/// Checks disjoint cover, balance and the absence of A-B edges.
bool is_valid_separator(const Graph& g, std::span<const Vertex> vertices, const SeparatorResult& result);

/// Connected components of G[vertices], each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> induced_components(const Graph& g, std::span<const Vertex> vertices);

struct ShatterResult {
  std::vector<Vertex> separator;
  std::vector<std::vector<Vertex>> components;
  std::size_t K = 0;
};

/// Recursive 2/3-separator shattering: every component of G[V \ S] ends up
/// with at most K vertices.
ShatterResult shatter(const Graph& g, std::size_t K, SeparatorMode mode);
ShatterResult shatter(const Graph& g, std::span<const Vertex> vertices, std::size_t K, SeparatorMode mode);

/// Continuous optimum K*_i = (3s)^(i/t) (n/Delta)^(1-i/t), i = 1..t-1.
std::vector<double> continuous_optimal_K(std::size_t n, std::size_t s, std::size_t delta, std::size_t t);

/// Integer schedule ceil(K*_i), clamped to [1, n] and made nonincreasing.
std::vector<std::size_t> optimal_K(std::size_t n, std::size_t s, std::size_t delta, std::size_t t);

/// Round-cost bound 3sn/K_1 + sum_{i>=2} 3s Delta K_{i-1}/K_i + Delta K_{t-1}.
double f_of_K(std::size_t n, std::size_t s, std::size_t delta, std::span<const double> K);
double f_of_K(std::size_t n, std::size_t s, std::size_t delta, std::span<const std::size_t> K);

/// One component of the hierarchical decomposition. Level 0 is the whole
/// vertex set; level i components come from shattering their parent with
/// K_i. `separator` is the next level's separator inside this component
/// (empty for final components).
struct HierarchyNode {
  std::size_t level = 0;
  std::optional<std::size_t> parent;
  std::vector<Vertex> vertices;
  std::vector<Vertex> separator;
  std::vector<std::size_t> children;
};

class SeparatorHierarchy {
 public:
  /// The round count t; levels run 0..t-1.
  std::size_t rounds() const { return K_.size() + 1; }
  std::span<const std::size_t> sizes() const { return K_; }
  std::size_t vertex_count() const { return level_of_.size(); }

  const HierarchyNode& node(std::size_t id) const { return nodes_[id]; }
  std::span<const HierarchyNode> nodes() const { return nodes_; }
  std::size_t root() const { return 0; }

  /// Node ids of the components at `level` (0 <= level <= t-1).
  std::span<const std::size_t> components_at(std::size_t level) const { return by_level_[level]; }

  /// i if v lies in a level-i separator, t if it lies in a final component.
  std::size_t level_of(Vertex v) const { return level_of_[v]; }

  /// Component at `level` containing v, or nullopt if v was removed by a
  /// separator at some level <= `level`.
  std::optional<std::size_t> component_of(Vertex v, std::size_t level) const {
    auto id = component_of_[level][v];
    if (id < 0) return std::nullopt;
    return static_cast<std::size_t>(id);
  }

 private:
  friend SeparatorHierarchy build_hierarchy(const Graph&, std::span<const std::size_t>, SeparatorMode);

  std::vector<std::size_t> K_;
  std::vector<HierarchyNode> nodes_;
  std::vector<std::vector<std::size_t>> by_level_;
  std::vector<std::size_t> level_of_;
  std::vector<std::vector<std::int32_t>> component_of_;
};

/// Builds the (t-1)-level decomposition for K = (K_1, ..., K_{t-1}).
/// Throws InfeasibleParameters unless n >= K_1 >= ... >= K_{t-1} >= 1.
SeparatorHierarchy build_hierarchy(const Graph& g, std::span<const std::size_t> K, SeparatorMode mode);

/// Lists every structural violation (empty when the hierarchy is sound).
std::vector<std::string> check_hierarchy(const Graph& g, const SeparatorHierarchy& h);

/// {"t", "K", "levels": [{"level", "separators": [{"component", "vertices"}],
///  "components": [{"id", "parent", "vertices"}]}], "level_of"}
nlohmann::ordered_json to_json(const SeparatorHierarchy& h);

}  // namespace lsr
