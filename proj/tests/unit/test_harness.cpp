#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lsr/errors.hpp"
#include "lsr/harness.hpp"

using namespace lsr;

TEST(Bounds, Examples) {
  auto b = compute_bounds(256, 2, 1, 2);
  EXPECT_NEAR(b.det_upper, 8 * 16 * std::sqrt(2.0), 1e-9);
  EXPECT_EQ(b.K_hat, std::vector<std::size_t>{20});
  auto c = compute_bounds(256, 8, 1, 2);
  EXPECT_NEAR(c.rand_lower, 16.0 - 8.0 - 8.0 * std::pow(256.0, -7.0 / 8.0), 1e-9);
  for (std::size_t n : {5u, 30u, 300u}) {
    for (std::size_t s = 1; 3 * s * 4 < n * 4 + 12; ++s) {
      if (3 * s * 4 >= n) {
        EXPECT_EQ(det_upper_bound(n, 3, s, 4), double(n));
        EXPECT_TRUE(compute_bounds(n, 3, s, 4).fallback);
      }
    }
  }
  auto j = to_json(b);
  EXPECT_TRUE(j.contains("det_upper"));
  EXPECT_TRUE(j.contains("rand_lower"));
}

TEST(Config, ParsesKeysAndComments) {
  std::istringstream in(
      "# trees\n"
      "family = tree, cycle\n"
      "n = 15,31\n"
      "t = 2, 3\n"
      "algo = sept,sep2\n"
      "seeds = 3..5\n"
      "seed = 42  # master\n"
      "function = staircase\n"
      "mode = exact\n"
      "jobs = 2\n");
  auto cfg = parse_config(in);
  EXPECT_EQ(cfg.families, (std::vector<std::string>{"tree", "cycle"}));
  EXPECT_EQ(cfg.sizes, (std::vector<std::size_t>{15, 31}));
  EXPECT_EQ(cfg.rounds, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(cfg.algos, (std::vector<Algo>{Algo::kSepT, Algo::kSep2}));
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{3, 4, 5}));
  EXPECT_EQ(cfg.master_seed, 42u);
  EXPECT_EQ(cfg.function, FunctionChoice::kStaircase);
  EXPECT_EQ(cfg.mode, SeparatorMode::kExact);
  EXPECT_EQ(cfg.jobs, 2u);
  EXPECT_EQ(expand(cfg).size(), 2u * 2 * 2 * 2 * 3);
}

TEST(Config, Rejects) {
  ExperimentConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), ParseError);
  EXPECT_THROW(apply_setting(cfg, "n", "ten"), ParseError);
  EXPECT_THROW(apply_setting(cfg, "algo", "magic"), ParseError);
  std::istringstream bad("family tree\n");
  EXPECT_THROW(parse_config(bad), ParseError);
}

TEST(Sweep, EmptyConfigIsHeaderOnly) {
  std::istringstream in("");
  auto cfg = parse_config(in);
  std::ostringstream out;
  write_csv(out, run_sweep(cfg, 1));
  EXPECT_EQ(out.str(), std::string(kCsvHeader) + "\n");
}

TEST(Sweep, DeterministicAndVerified) {
  std::istringstream in("family = tree, cycle\nn = 15, 31, 63\nt = 2, 3, 4\nseeds = 1..3\n");
  auto cfg = parse_config(in);
  auto a = run_sweep(cfg, 1);
  auto b = run_sweep(cfg, 3);
  std::ostringstream sa, sb;
  write_csv(sa, a);
  write_csv(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  ASSERT_EQ(a.size(), 2u * 3 * 3 * 3);
  for (const auto& row : a) {
    EXPECT_TRUE(row.verified) << row.family << " " << row.n;
    EXPECT_TRUE(row.success);
    EXPECT_LE(double(row.queries), row.det_upper);
  }
}

TEST(Sweep, AllAlgorithms) {
  std::istringstream in("family = grid:2, regular:3\nn = 64\nt = 2, 3\nalgo = cover2, sep2, sept, descent\nseeds = 1..2\n");
  auto cfg = parse_config(in);
  for (const auto& row : run_sweep(cfg, 1)) {
    EXPECT_TRUE(row.verified) << row.family << " " << algo_name(row.algo);
    for (const auto& p : row.problems) ADD_FAILURE() << p;
  }
}

TEST(Csv, Quoting) {
  EXPECT_EQ(csv_field("tree"), "tree");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("x\ny"), "\"x\ny\"");
}

TEST(Families, Instantiate) {
  EXPECT_EQ(describe(instantiate_family("grid:2", 64, 1)), "grid:8x8");
  EXPECT_EQ(describe(instantiate_family("grid", 64, 1)), "grid:8x8");
  EXPECT_EQ(describe(instantiate_family("hypercube", 64, 1)), "hypercube:6");
  EXPECT_EQ(describe(instantiate_family("bintree", 63, 1)), "bintree:5");
  EXPECT_EQ(describe(instantiate_family("regular", 64, 1)), "regular:64:3");
  EXPECT_EQ(describe(instantiate_family("regular:4", 64, 1)), "regular:64:4");
  EXPECT_EQ(describe(instantiate_family("cycle", 10, 1)), "cycle:10");
  EXPECT_THROW(instantiate_family("grid:2", 50, 1), ParseError);
  EXPECT_THROW(instantiate_family("hypercube", 50, 1), ParseError);
  EXPECT_THROW(instantiate_family("bintree", 50, 1), ParseError);
  EXPECT_THROW(instantiate_family("moebius", 50, 1), ParseError);
  EXPECT_EQ(separation_for(instantiate_family("tree", 40, 1), 40), 1u);
  EXPECT_EQ(separation_for(instantiate_family("cycle", 40, 1), 40), 2u);
  EXPECT_EQ(separation_for(instantiate_family("regular", 40, 1), 40), 40u);
}

TEST(Values, ReadAndVerify) {
  std::istringstream ok("1 0.5\n2\n");
  auto v = read_values(ok, 3);
  EXPECT_EQ(v, (std::vector<double>{1, 0.5, 2}));
  std::istringstream few("1 2");
  EXPECT_THROW(read_values(few, 3), ParseError);
  std::istringstream junk("1 x 2");
  EXPECT_THROW(read_values(junk, 3), ParseError);
  std::istringstream many("1 2 3 4");
  EXPECT_THROW(read_values(many, 3), ParseError);
  std::vector<Edge> e{{0, 1}, {1, 2}};
  auto g = build_graph(3, e);
  EXPECT_TRUE(verify_local_minimum(g, v, 1));
  EXPECT_FALSE(verify_local_minimum(g, v, 0));
}
