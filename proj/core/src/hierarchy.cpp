#include <algorithm>
#include <string>

#include "lsr/errors.hpp"
#include "lsr/separators.hpp"

namespace lsr {

SeparatorHierarchy build_hierarchy(const Graph& g, std::span<const std::size_t> K, SeparatorMode mode) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i] < 1 || K[i] > n || (i > 0 && K[i] > K[i - 1])) {
      throw InfeasibleParameters("K must satisfy n >= K_1 >= ... >= K_{t-1} >= 1");
    }
  }
  const std::size_t t = K.size() + 1;

  SeparatorHierarchy h;
  h.K_.assign(K.begin(), K.end());
  h.by_level_.assign(t, {});
  h.level_of_.assign(n, t);
  h.component_of_.assign(t, std::vector<std::int32_t>(n, -1));

  HierarchyNode root;
  root.vertices.resize(n);
  for (std::size_t v = 0; v < n; ++v) root.vertices[v] = static_cast<Vertex>(v);
  h.nodes_.push_back(std::move(root));
  h.by_level_[0].push_back(0);
  for (std::size_t v = 0; v < n; ++v) h.component_of_[0][v] = 0;

  for (std::size_t level = 1; level < t; ++level) {
    const std::vector<std::size_t> parents = h.by_level_[level - 1];
    for (std::size_t pid : parents) {
      auto sh = shatter(g, h.nodes_[pid].vertices, K[level - 1], mode);
      for (Vertex v : sh.separator) h.level_of_[v] = level;
      h.nodes_[pid].separator = std::move(sh.separator);
      for (auto& comp : sh.components) {
        const std::size_t id = h.nodes_.size();
        for (Vertex v : comp) h.component_of_[level][v] = static_cast<std::int32_t>(id);
        HierarchyNode child;
        child.level = level;
        child.parent = pid;
        child.vertices = std::move(comp);
        h.nodes_.push_back(std::move(child));
        h.nodes_[pid].children.push_back(id);
        h.by_level_[level].push_back(id);
      }
    }
  }
  return h;
}

std::vector<std::string> check_hierarchy(const Graph& g, const SeparatorHierarchy& h) {
  std::vector<std::string> bad;
  const std::size_t n = g.size();
  const std::size_t t = h.rounds();
  auto K = h.sizes();
  if (h.vertex_count() != n) bad.push_back("vertex count mismatch");
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i] < 1 || K[i] > n || (i > 0 && K[i] > K[i - 1])) bad.push_back("K is not nonincreasing in [1, n]");
  }

  // Every vertex is either in exactly one separator or in exactly one final component.
  std::vector<std::size_t> seen(n, 0);
  for (const auto& node : h.nodes()) {
    for (Vertex v : node.separator) {
      ++seen[v];
      if (h.level_of(v) != node.level + 1) bad.push_back("level_of disagrees for separator vertex " + std::to_string(v));
    }
    if (node.level == t - 1) {
      for (Vertex v : node.vertices) {
        ++seen[v];
        if (h.level_of(v) != t) bad.push_back("level_of disagrees for final vertex " + std::to_string(v));
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v] != 1) bad.push_back("vertex " + std::to_string(v) + " has " + std::to_string(seen[v]) + " levels");
  }

  std::vector<std::int32_t> owner(n, -1);
  for (std::size_t id = 0; id < h.nodes().size(); ++id) {
    const auto& node = h.node(id);
    if (node.level > 0 && node.vertices.size() > K[node.level - 1]) {
      bad.push_back("component " + std::to_string(id) + " exceeds K_" + std::to_string(node.level));
    }
    if (node.parent && h.node(*node.parent).vertices.size() < node.vertices.size()) {
      bad.push_back("component " + std::to_string(id) + " larger than its parent");
    }
    if (induced_components(g, node.vertices).size() != 1) {
      bad.push_back("component " + std::to_string(id) + " is not connected");
    }
    // children + separator partition the node.
    std::vector<Vertex> joined = node.separator;
    for (std::size_t c : node.children) {
      const auto& cv = h.node(c).vertices;
      joined.insert(joined.end(), cv.begin(), cv.end());
    }
    std::sort(joined.begin(), joined.end());
    if (node.level + 1 < t && joined != node.vertices) {
      bad.push_back("children and separator do not partition component " + std::to_string(id));
    }
    // No edge between two different children.
    for (std::size_t c : node.children) {
      for (Vertex v : h.node(c).vertices) owner[v] = static_cast<std::int32_t>(c);
    }
    for (std::size_t c : node.children) {
      for (Vertex v : h.node(c).vertices) {
        for (Vertex w : g.neighbors(v)) {
          if (owner[w] >= 0 && owner[w] != static_cast<std::int32_t>(c)) {
            bad.push_back("edge " + std::to_string(v) + "-" + std::to_string(w) + " joins sibling components");
          }
        }
      }
    }
    for (std::size_t c : node.children) {
      for (Vertex v : h.node(c).vertices) owner[v] = -1;
    }
  }
  return bad;
}

nlohmann::ordered_json to_json(const SeparatorHierarchy& h) {
  nlohmann::ordered_json j;
  const std::size_t t = h.rounds();
  j["t"] = t;
  j["K"] = std::vector<std::size_t>(h.sizes().begin(), h.sizes().end());
  auto levels = nlohmann::ordered_json::array();
  for (std::size_t level = 0; level < t; ++level) {
    nlohmann::ordered_json entry;
    entry["level"] = level;
    auto seps = nlohmann::ordered_json::array();
    auto comps = nlohmann::ordered_json::array();
    for (std::size_t id : h.components_at(level)) {
      const auto& node = h.node(id);
      nlohmann::ordered_json c;
      c["id"] = id;
      c["parent"] = node.parent ? nlohmann::ordered_json(*node.parent) : nlohmann::ordered_json(nullptr);
      c["vertices"] = node.vertices;
      comps.push_back(std::move(c));
      if (level + 1 < t) seps.push_back({{"component", id}, {"vertices", node.separator}});
    }
    entry["separators"] = std::move(seps);
    entry["components"] = std::move(comps);
    levels.push_back(std::move(entry));
  }
  j["levels"] = std::move(levels);
  std::vector<std::size_t> level_of(h.vertex_count());
  for (std::size_t v = 0; v < level_of.size(); ++v) level_of[v] = h.level_of(static_cast<Vertex>(v));
  j["level_of"] = level_of;
  return j;
}

}  // namespace lsr
