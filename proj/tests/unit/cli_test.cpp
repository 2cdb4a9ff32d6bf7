#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permsort/cost_matrix.hpp"
#include "permsort/error.hpp"
#include "permsort_cli/bench.hpp"
#include "permsort_cli/commands.hpp"
#include "support/instances.hpp"

namespace permsort::cli {
namespace {

std::string data(const std::string& name) {
  return std::string(PERMSORT_TEST_DATA) + "/" + name;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("permsort_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

int run(const std::function<int(std::ostream&)>& f, std::string& out, std::string& err) {
  std::ostringstream o;
  std::ostringstream e;
  const int code = run_guarded([&] { return f(o); }, e);
  out = o.str();
  err = e.str();
  return code;
}

using CliTest = TempDir;

TEST_F(CliTest, OptimizeTripleExample) {
  const std::string out_file = path("star.cost");
  std::string out, err;
  const int code = run(
      [&](std::ostream& os) {
        return cmd_optimize({data("triple_example.cost"), out_file, "both"}, os);
      },
      out, err);
  ASSERT_EQ(code, kExitOk) << err;
  EXPECT_NE(out.find("2 entries changed"), std::string::npos);
  const std::string written = read_file(out_file);
  EXPECT_NE(written.find("1 4 8\n"), std::string::npos);
  EXPECT_NE(written.find("2 3 11\n"), std::string::npos);
  EXPECT_EQ(parse_cost_file(written), optimize_all_pairs(testing::triple_example()).with_kind(CostKind::kRaw));
}

TEST_F(CliTest, OptimizeMetricChangesNothing) {
  const std::string cost = write("m.cost", serialize_cost_file(metric_path({{1, 2, 3}, {1, 2}})));
  for (const char* method : {"alg1", "bellman-ford", "both"}) {
    std::string out, err;
    ASSERT_EQ(run([&](std::ostream& os) { return cmd_optimize({cost, "", method}, os); }, out, err),
              kExitOk);
    EXPECT_NE(out.find("# 0 entries changed"), std::string::npos);
    // stdout stays a valid cost file.
    EXPECT_EQ(parse_cost_file(out), metric_path({{1, 2, 3}, {1, 2}}));
  }
}

TEST_F(CliTest, ParseErrorsCarryLineNumbers) {
  const std::string cost = write("bad.cost", "n 3\n1 2 1\n2 3 oops\n");
  std::string out, err;
  EXPECT_EQ(run([&](std::ostream& os) { return cmd_optimize({cost, "", "both"}, os); }, out, err),
            kExitParse);
  EXPECT_NE(err.find("line 3"), std::string::npos);

  const std::string perm = write("bad.perm", "# comment\n\n1 2 2\n");
  EXPECT_EQ(run([&](std::ostream& os) {
              return cmd_decompose({data("triple_example.cost"), perm}, os);
            },
            out, err),
            kExitParse);
  EXPECT_NE(err.find("line 3"), std::string::npos);
}

TEST_F(CliTest, DecomposeMergeWithJoin) {
  std::string out, err;
  DecomposeArgs args{data("ring_ten.cost"), data("two_five_cycles.perm"), "merge"};
  args.joins = "1,2";
  ASSERT_EQ(run([&](std::ostream& os) { return cmd_decompose(args, os); }, out, err), kExitOk)
      << err;
  EXPECT_NE(out.find("joins: (12)"), std::string::npos);
  EXPECT_NE(out.find("cost: 38\n"), std::string::npos);
  EXPECT_NE(out.find("lower bound: 20\n"), std::string::npos);
  EXPECT_NE(out.find("(applied right-to-left)"), std::string::npos);
}

TEST_F(CliTest, DecomposeExpanded) {
  std::string out, err;
  DecomposeArgs args{data("sparse_five.cost"), data("cycle_12345.perm"), "mld"};
  args.expand = true;
  ASSERT_EQ(run([&](std::ostream& os) { return cmd_decompose(args, os); }, out, err), kExitOk);
  EXPECT_NE(out.find("cost: 105\n"), std::string::npos);
  EXPECT_NE(out.find("length: 6\n"), std::string::npos);
  // The printed sequence multiplies to the input cycle.
  const auto start = out.find("right-to-left):\n") + 16;
  const std::string seq = out.substr(start, out.find('\n', start) - start);
  EXPECT_TRUE(validate_decomposition(testing::parse_compact(seq), Permutation({2, 3, 4, 5, 1})));
  EXPECT_EQ(decomposition_cost(testing::parse_compact(seq), testing::sparse_five()), 105);
}

TEST_F(CliTest, DecomposeIdentity) {
  std::string out, err;
  ASSERT_EQ(run([&](std::ostream& os) {
              return cmd_decompose({data("unit_path.cost"), data("identity5.perm")}, os);
            },
            out, err),
            kExitOk);
  EXPECT_NE(out.find("right-to-left):\n\n"), std::string::npos);
  EXPECT_NE(out.find("cost: 0\n"), std::string::npos);
}

TEST_F(CliTest, DecomposeMetricExact) {
  std::string out, err;
  DecomposeArgs args{data("unit_path.cost"), data("cycle_12345.perm"), "metric-exact"};
  ASSERT_EQ(run([&](std::ostream& os) { return cmd_decompose(args, os); }, out, err), kExitOk);
  EXPECT_NE(out.find("cost: 10\n"), std::string::npos);
  args.cost_file = data("sparse_five.cost");
  EXPECT_EQ(run([&](std::ostream& os) { return cmd_decompose(args, os); }, out, err),
            kExitContract);
}

TEST_F(CliTest, DecomposeInfeasibleNamesThePair) {
  const std::string cost = write("gap.cost", "n 4\n1 2 1\n3 4 inf\n");
  const std::string perm = write("p.perm", "(1 2)(3 4)\n");
  std::string out, err;
  EXPECT_EQ(run([&](std::ostream& os) { return cmd_decompose({cost, perm}, os); }, out, err),
            kExitInfeasible);
  EXPECT_NE(err.find("(3 4)"), std::string::npos);
}

TEST_F(CliTest, OracleChain) {
  std::string out, err;
  ASSERT_EQ(run([&](std::ostream& os) {
              return cmd_oracle({data("mod_five.cost"), data("cycle_12345.perm"), {}}, os);
            },
            out, err),
            kExitOk);
  EXPECT_NE(out.find("M=6 L=8 S=12 chain OK"), std::string::npos);

  ASSERT_EQ(run([&](std::ostream& os) {
              return cmd_oracle({data("interval_example.cost"), data("cycle_1234.perm"), {}}, os);
            },
            out, err),
            kExitOk);
  EXPECT_NE(out.find("chain OK"), std::string::npos);
}

TEST_F(CliTest, OracleSizeGuard) {
  std::string out, err;
  const auto call = [&](std::optional<std::size_t> limit) {
    return run([&](std::ostream& os) {
      return cmd_oracle({data("ring_ten.cost"), data("two_five_cycles.perm"), limit}, os);
    },
               out, err);
  };
  EXPECT_EQ(call(std::nullopt), kExitSizeGuard);
  EXPECT_EQ(call(std::size_t{9}), kExitSizeGuard);
  ::setenv("PERMSORT_LIMIT", "6", 1);
  EXPECT_EQ(resolve_limit(std::nullopt), 6u);
  EXPECT_EQ(resolve_limit(std::size_t{3}), 3u);
  ::unsetenv("PERMSORT_LIMIT");
  EXPECT_EQ(resolve_limit(std::nullopt), 7u);
}

TEST_F(CliTest, BenchIsDeterministic) {
  std::string a, b, err;
  ASSERT_EQ(run([&](std::ostream& os) { return cmd_bench({3, 6, 50, 9, ""}, os); }, a, err),
            kExitOk);
  ASSERT_EQ(run([&](std::ostream& os) { return cmd_bench({3, 6, 50, 9, ""}, os); }, b, err),
            kExitOk);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')), "k,trials,mean_raw,mean_opt");
  for (const BenchRow& r : run_bench(3, 8, 40, 123)) EXPECT_LE(r.mean_opt, r.mean_raw);
  EXPECT_EQ(run([&](std::ostream& os) { return cmd_bench({2, 6, 50, 9, ""}, os); }, a, err),
            kExitContract);
  EXPECT_EQ(run([&](std::ostream& os) { return cmd_bench({3, 15, 50, 9, ""}, os); }, a, err),
            kExitContract);
}

TEST(BenchRng, UniformRange) {
  std::mt19937_64 engine(trial_seed(1, 5, 0));
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform_unit(engine);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(trial_seed(1, 5, 0), trial_seed(1, 5, 1));
  EXPECT_NE(trial_seed(1, 5, 0), trial_seed(1, 6, 0));
}

TEST(BenchCsv, SixDecimals) {
  EXPECT_EQ(bench_csv({{4, 10, 0.5, 0.25}}), "k,trials,mean_raw,mean_opt\n4,10,0.500000,0.250000\n");
}

TEST(Joins, Parsing) {
  EXPECT_EQ(parse_joins("1,2; 3 ,4").size(), 2u);
  EXPECT_EQ(parse_joins("").size(), 0u);
  EXPECT_THROW(parse_joins("1-2"), ParseError);
  EXPECT_THROW(parse_joins("1,1"), ParseError);
  EXPECT_THROW(parse_joins("a,2"), ParseError);
}

TEST(PermutationText, Forms) {
  EXPECT_EQ(parse_permutation_text("# c\n3 1 2\n", 3), Permutation({3, 1, 2}));
  EXPECT_EQ(parse_permutation_text("(1 3 2)", 3), Permutation({3, 1, 2}));
  EXPECT_THROW(parse_permutation_text("\n# nothing\n", 3), ParseError);
}

}  // namespace
}  // namespace permsort::cli
