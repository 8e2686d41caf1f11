#include "lsr/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "lsr/errors.hpp"
#include "lsr/parallel.hpp"

namespace lsr {

void SignHistory::append(std::vector<Vertex> batch, std::vector<Sign> signs) {
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (signs[i] == Sign::kNeg) q_minus.push_back(batch[i]);
    if (signs[i] == Sign::kPos) q_plus.push_back(batch[i]);
  }
  auto tidy = [](std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(q_minus);
  tidy(q_plus);
  rounds.push_back({std::move(batch), std::move(signs)});
}

SignHistory SignHistory::from_transcript(const SpanningTree& tree, const Transcript& transcript, std::size_t rounds) {
  SignHistory h;
  const std::size_t count = std::min(rounds, transcript.rounds.size());
  for (std::size_t i = 0; i < count; ++i) {
    const auto& rec = transcript.rounds[i];
    std::vector<Sign> signs;
    signs.reserve(rec.batch.size());
    for (std::size_t k = 0; k < rec.batch.size(); ++k) {
      const Vertex x = rec.batch[k];
      const double a = rec.answers[k];
      if (std::fabs(a) != static_cast<double>(tree.depth(x))) {
        throw InconsistentHistory("answer at vertex " + std::to_string(x) + " is not +-depth");
      }
      signs.push_back(a < 0 ? Sign::kNeg : (a > 0 ? Sign::kPos : Sign::kZero));
    }
    h.append(rec.batch, std::move(signs));
  }
  return h;
}

std::vector<Vertex> signature(const SpanningTree& tree, std::span<const Vertex> Q, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex q : Q) {
    if (tree.is_ancestor(q, u)) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_signatures(const SpanningTree& tree, std::span<const Vertex> Q, std::span<const Vertex> U) {
  std::set<std::vector<Vertex>> seen;
  for (Vertex u : U) seen.insert(signature(tree, Q, u));
  return seen.size();
}

CandidateSet candidate_set(const SpanningTree& tree, const SignHistory& h) {
  for (const auto& round : h.rounds) {
    for (std::size_t i = 0; i < round.batch.size(); ++i) {
      if ((round.signs[i] == Sign::kZero) != (round.batch[i] == tree.root())) {
        throw InconsistentHistory("zero answer must come from the root and only from it");
      }
    }
  }
  std::vector<Vertex> chain = h.q_minus;
  std::sort(chain.begin(), chain.end(), [&](Vertex a, Vertex b) { return tree.depth(a) < tree.depth(b); });
  Vertex r_h = tree.root();
  for (Vertex x : chain) {
    if (!tree.is_ancestor(r_h, x) || x == r_h) {
      throw InconsistentHistory("negative answers do not lie on one root path");
    }
    r_h = x;
  }
  for (Vertex x : h.q_plus) {
    if (tree.is_ancestor(x, r_h)) {
      throw InconsistentHistory("vertex " + std::to_string(x) + " answered positive but is an ancestor of r_H");
    }
  }
  CandidateSet c;
  c.r_h = r_h;
  for (Vertex v : subtree(tree, r_h)) {
    bool cut = false;
    for (Vertex x : h.q_plus) {
      if (tree.is_ancestor(x, v)) {
        cut = true;
        break;
      }
    }
    if (!cut) c.members.push_back(v);
  }
  return c;
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

namespace {

using HistoryKey = std::vector<std::int64_t>;

HistoryKey key_of(const Transcript& tr, std::size_t rounds) {
  HistoryKey key;
  for (std::size_t i = 0; i < std::min(rounds, tr.rounds.size()); ++i) {
    for (std::size_t k = 0; k < tr.rounds[i].batch.size(); ++k) {
      const double a = tr.rounds[i].answers[k];
      key.push_back(std::int64_t{tr.rounds[i].batch[k]} * 3 + (a < 0 ? 0 : (a > 0 ? 2 : 1)));
    }
    key.push_back(-1);
  }
  return key;
}

void check_round(const SpanningTree& tree, const std::vector<Transcript>& transcripts, std::size_t round,
                 PartitionReport& report) {
  const std::size_t n = tree.size();
  std::map<HistoryKey, std::vector<Vertex>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[key_of(transcripts[v], round)].push_back(static_cast<Vertex>(v));

  RoundPartition part;
  part.round = round;
  std::vector<std::size_t> cover(n, 0);
  auto fail = [&](const std::string& what) {
    report.violations.push_back("round " + std::to_string(round) + ": " + what);
  };
  for (const auto& [key, targets] : groups) {
    const Transcript& tr = transcripts[targets.front()];
    CandidateSet c;
    try {
      c = candidate_set(tree, SignHistory::from_transcript(tree, tr, round));
    } catch (const InconsistentHistory& e) {
      fail(std::string("history of target ") + std::to_string(targets.front()) + " rejected: " + e.what());
      continue;
    }
    if (c.members != targets) {
      fail("candidate set of target " + std::to_string(targets.front()) + " differs from its history class");
    }
    if (!std::binary_search(c.members.begin(), c.members.end(), c.r_h)) fail("candidate set misses r_H");
    for (Vertex v : c.members) {
      ++cover[v];
      if (v != c.r_h && !std::binary_search(c.members.begin(), c.members.end(), tree.parent(v))) {
        fail("candidate set rooted at " + std::to_string(c.r_h) + " is not connected in the tree");
        break;
      }
    }
    for (std::size_t i = 0; i < std::min(round, tr.rounds.size()); ++i) {
      for (Vertex q : tr.rounds[i].batch) {
        if (q != c.r_h && std::binary_search(c.members.begin(), c.members.end(), q)) {
          fail("queried vertex " + std::to_string(q) + " lies inside a candidate set");
        }
      }
    }
    part.sets.push_back(std::move(c));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (cover[v] != 1) fail("vertex " + std::to_string(v) + " lies in " + std::to_string(cover[v]) + " candidate sets");
  }
  std::sort(part.sets.begin(), part.sets.end(),
            [](const CandidateSet& a, const CandidateSet& b) { return a.members < b.members; });
  report.rounds.push_back(std::move(part));
}

}  // namespace

Evaluation evaluate_deterministic(const DeterministicAlgorithm& algo, const SpanningTree& tree, const Graph& g,
                                  std::size_t t, std::size_t jobs) {
  if (!is_spanning_tree_of(tree, g)) throw InvalidGraph("tree is not a spanning tree of the graph");
  const std::size_t n = g.size();
  std::vector<Transcript> transcripts(n);
  std::vector<std::optional<Vertex>> outputs(n);
  parallel_for(n, jobs, [&](std::size_t v) {
    auto f = make_staircase(tree, static_cast<Vertex>(v));
    RoundOracle o(f, t);
    auto r = algo(g, o);
    outputs[v] = r.output;
    transcripts[v] = o.take_transcript();
  });

  Evaluation ev;
  ev.queries.resize(n);
  ev.success.resize(n);
  std::uint64_t wins = 0;
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    ev.queries[v] = transcripts[v].total_queries;
    ev.success[v] = outputs[v] == static_cast<Vertex>(v);
    wins += ev.success[v];
    total += ev.queries[v];
    ev.max_rounds = std::max(ev.max_rounds, transcripts[v].rounds.size());
  }
  ev.success_prob = Rational::make(wins, n);
  ev.expected_queries = Rational::make(total, n);
  for (std::size_t round = 0; round <= ev.max_rounds; ++round) check_round(tree, transcripts, round, ev.partition);
  return ev;
}

double lower_bound_value(std::size_t n, std::size_t t, double c) {
  const double nn = static_cast<double>(n);
  if (t == 1) return std::ceil(c * nn) - 1.0;
  const double tt = static_cast<double>(t);
  const double root = std::pow(nn, 1.0 / tt);
  return c * tt * root + tt * std::pow(1.0 - c, 1.0 - 1.0 / tt) - tt - tt * std::pow(nn, 1.0 / tt - 1.0);
}

nlohmann::ordered_json to_json(const PartitionReport& report) {
  nlohmann::ordered_json j;
  auto rounds = nlohmann::ordered_json::array();
  for (const auto& r : report.rounds) {
    auto sets = nlohmann::ordered_json::array();
    for (const auto& c : r.sets) sets.push_back({{"r_H", c.r_h}, {"members", c.members}});
    rounds.push_back({{"round", r.round}, {"candidate_sets", std::move(sets)}});
  }
  j["rounds"] = std::move(rounds);
  j["violations"] = report.violations;
  return j;
}

}  // namespace lsr
