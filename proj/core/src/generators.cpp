#include "lsr/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "lsr/errors.hpp"
#include "lsr/random.hpp"

namespace lsr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InfeasibleParameters(what);
}

}  // namespace

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph grid_graph(std::span<const std::size_t> dims) {
  require(!dims.empty(), "grid needs at least one dimension");
  std::size_t n = 1;
  for (std::size_t d : dims) {
    require(d >= 1, "grid dimensions must be positive");
    n *= d;
  }
  std::vector<Edge> edges;
  std::vector<std::size_t> coord(dims.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (coord[k] + 1 < dims[k]) edges.emplace_back(v, v + stride);
      stride *= dims[k];
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (++coord[k] < dims[k]) break;
      coord[k] = 0;
    }
  }
  return build_graph(n, edges);
}

Graph hypercube_graph(std::size_t d) {
  require(d < 24, "hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t w = v ^ (std::size_t{1} << k);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return build_graph(n, edges);
}

Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  require(n >= 1, "regular graph needs n >= 1");
  require(d < n, "regular graph needs d < n");
  require((n * d) % 2 == 0, "regular graph needs n*d even");
  require(d >= 1 || n == 1, "regular graph with d = 0 is disconnected");
  if (n == 1) return build_graph(1, {});

  Rng rng = make_rng(seed, 0);
  std::vector<Vertex> points(n * d);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[uniform_index(rng, i)]);
    }
    std::vector<Edge> edges;
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      if (u == v || !seen.emplace(u, v).second) {
        simple = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    Graph g = build_graph(n, edges, Connectivity::kOptional);
    if (is_connected(g)) return g;
  }
  throw InfeasibleParameters("could not sample a connected simple regular graph");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return build_graph(1, {});
  if (n == 2) {
    std::vector<Edge> e{{0, 1}};
    return build_graph(2, e);
  }
  Rng rng = make_rng(seed, 1);
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<Vertex>(uniform_index(rng, n));

  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  for (Vertex x : prufer) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  edges.emplace_back(a, b);
  return build_graph(n, edges);
}

Graph complete_binary_tree(std::size_t depth) {
  require(depth < 24, "binary tree depth too large");
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, v);
  return build_graph(n, edges);
}

Graph generate(const Family& family) {
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Path>) return path_graph(f.n);
        else if constexpr (std::is_same_v<T, family::Cycle>) return cycle_graph(f.n);
        else if constexpr (std::is_same_v<T, family::Grid>) return grid_graph(f.dims);
        else if constexpr (std::is_same_v<T, family::Hypercube>) return hypercube_graph(f.d);
        else if constexpr (std::is_same_v<T, family::RandomRegular>) return random_regular_graph(f.n, f.d, f.seed);
        else if constexpr (std::is_same_v<T, family::RandomTree>) return random_tree(f.n, f.seed);
        else if constexpr (std::is_same_v<T, family::CompleteBinaryTree>) return complete_binary_tree(f.depth);
        else if constexpr (std::is_same_v<T, family::Complete>) return complete_graph(f.n);
        else return star_graph(f.n);
      },
      family);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view s, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad number '" + std::string(s) + "' in family spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Family parse_family(std::string_view spec, std::uint64_t seed) {
  auto parts = split(spec, ':');
  const std::string_view kind = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw ParseError("family '" + std::string(kind) + "' takes " + std::to_string(k) + " parameter(s): '" +
                       std::string(spec) + "'");
    }
  };
  if (kind == "path") { arity(1); return family::Path{parse_count(parts[1], spec)}; }
  if (kind == "cycle") { arity(1); return family::Cycle{parse_count(parts[1], spec)}; }
  if (kind == "grid") {
    arity(1);
    family::Grid g;
    for (auto d : split(parts[1], 'x')) g.dims.push_back(parse_count(d, spec));
    return g;
  }
  if (kind == "hypercube") { arity(1); return family::Hypercube{parse_count(parts[1], spec)}; }
  if (kind == "regular") {
    arity(2);
    return family::RandomRegular{parse_count(parts[1], spec), parse_count(parts[2], spec), seed};
  }
  if (kind == "tree") { arity(1); return family::RandomTree{parse_count(parts[1], spec), seed}; }
  if (kind == "bintree") { arity(1); return family::CompleteBinaryTree{parse_count(parts[1], spec)}; }
  if (kind == "complete") { arity(1); return family::Complete{parse_count(parts[1], spec)}; }
  if (kind == "star") { arity(1); return family::Star{parse_count(parts[1], spec)}; }
  throw ParseError("unknown graph family '" + std::string(kind) + "'");
}

std::string describe(const Family& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Path>) return "path:" + std::to_string(f.n);
        else if constexpr (std::is_same_v<T, family::Cycle>) return "cycle:" + std::to_string(f.n);
        else if constexpr (std::is_same_v<T, family::Grid>) {
          std::string s = "grid:";
          for (std::size_t i = 0; i < f.dims.size(); ++i) s += (i ? "x" : "") + std::to_string(f.dims[i]);
          return s;
        } else if constexpr (std::is_same_v<T, family::Hypercube>) return "hypercube:" + std::to_string(f.d);
        else if constexpr (std::is_same_v<T, family::RandomRegular>)
          return "regular:" + std::to_string(f.n) + ":" + std::to_string(f.d);
        else if constexpr (std::is_same_v<T, family::RandomTree>) return "tree:" + std::to_string(f.n);
        else if constexpr (std::is_same_v<T, family::CompleteBinaryTree>) return "bintree:" + std::to_string(f.depth);
        else if constexpr (std::is_same_v<T, family::Complete>) return "complete:" + std::to_string(f.n);
        else return "star:" + std::to_string(f.n);
      },
      family);
}

std::optional<std::size_t> known_separation(const Family& family) {
  return std::visit(
      [](const auto& f) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Path> || std::is_same_v<T, family::RandomTree> ||
                      std::is_same_v<T, family::CompleteBinaryTree> || std::is_same_v<T, family::Star>) {
          return 1;
        } else if constexpr (std::is_same_v<T, family::Cycle>) {
          return 2;
        } else if constexpr (std::is_same_v<T, family::Grid>) {
          std::size_t prod = 1;
          std::size_t largest = 1;
          for (std::size_t d : f.dims) {
            prod *= d;
            largest = std::max(largest, d);
          }
          return prod / largest + 1;
        } else {
          return std::nullopt;
        }
      },
      family);
}

}  // namespace lsr
