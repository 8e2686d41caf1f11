#include "lsr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lsr/errors.hpp"
#include "lsr/random.hpp"

namespace lsr {

ValueFunction make_custom_function(std::vector<double> values) {
  ValueFunction f;
  f.values = std::move(values);
  f.kind = FunctionKind::kCustom;
  return f;
}

ValueFunction make_staircase(const SpanningTree& tree, Vertex z) {
  if (z < 0 || static_cast<std::size_t>(z) >= tree.size()) throw InvalidVertex("staircase target out of range");
  ValueFunction f;
  f.kind = FunctionKind::kStaircase;
  f.target = z;
  f.values.resize(tree.size());
  for (Vertex x = 0; static_cast<std::size_t>(x) < tree.size(); ++x) {
    const auto d = static_cast<double>(tree.depth(x));
    f.values[x] = tree.is_ancestor(x, z) ? -d : d;
  }
  return f;
}

ValueFunction make_random_function(const Graph& g, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0);
  ValueFunction f;
  f.kind = FunctionKind::kRandom;
  f.values.resize(g.size());
  for (auto& x : f.values) x = uniform_unit(rng);
  return f;
}

std::size_t rank(const ValueFunction& f, Vertex v) {
  std::size_t below = 0;
  for (Vertex u = 0; static_cast<std::size_t>(u) < f.size(); ++u) {
    if (order_less(f, u, v)) ++below;
  }
  return below + 1;
}

std::vector<std::size_t> ranks(const ValueFunction& f) {
  std::vector<Vertex> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return order_less(f, a, b); });
  std::vector<std::size_t> r(f.size());
  for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = i + 1;
  return r;
}

bool Transcript::consistent() const {
  std::size_t sum = 0;
  for (const auto& r : rounds) {
    if (r.batch.size() != r.answers.size()) return false;
    sum += r.batch.size();
  }
  return sum == total_queries;
}

nlohmann::ordered_json to_json(const Transcript& t) {
  nlohmann::ordered_json j;
  auto rounds = nlohmann::ordered_json::array();
  for (const auto& r : t.rounds) {
    nlohmann::ordered_json e;
    e["batch"] = r.batch;
    e["answers"] = r.answers;
    rounds.push_back(std::move(e));
  }
  j["rounds"] = std::move(rounds);
  j["total"] = t.total_queries;
  return j;
}

std::vector<double> RoundOracle::submit_batch(std::span<const Vertex> batch) {
  if (transcript_.rounds.size() >= t_budget_) {
    throw RoundBudgetExceeded("round budget of " + std::to_string(t_budget_) + " already used");
  }
  for (Vertex v : batch) {
    if (v < 0 || static_cast<std::size_t>(v) >= f_->size()) {
      throw InvalidVertex("query for vertex " + std::to_string(v) + " outside 0.." + std::to_string(f_->size() - 1));
    }
  }
  RoundRecord rec;
  rec.batch.assign(batch.begin(), batch.end());
  rec.answers.reserve(batch.size());
  for (Vertex v : batch) rec.answers.push_back((*f_)(v));
  transcript_.total_queries += batch.size();
  transcript_.rounds.push_back(rec);
  return rec.answers;
}

}  // namespace lsr
