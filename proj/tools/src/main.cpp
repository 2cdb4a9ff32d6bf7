#include <iostream>

#include "CLI11.hpp"
#include "permsort_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace permsort::cli;

  CLI::App app{"Low-cost transposition decompositions of permutations"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "Optimize transposition costs");
  optimize->add_option("cost_file", opt.cost_file, "Cost file")->required();
  optimize->add_option("-o,--out", opt.out_file, "Write optimized costs here");
  optimize->add_option("--method", opt.method, "alg1, bellman-ford or both")
      ->check(CLI::IsMember({"alg1", "bellman-ford", "both"}));

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Decompose a permutation");
  decompose->add_option("cost_file", dec.cost_file, "Cost or path file")->required();
  decompose->add_option("perm_file", dec.perm_file, "Permutation file")->required();
  decompose->add_option("--method", dec.method, "mld, std, merge or metric-exact")
      ->check(CLI::IsMember({"mld", "std", "merge", "metric-exact"}));
  decompose->add_flag("--expand", dec.expand,
                      "Replace each transposition by its cheapest raw sequence");
  decompose->add_flag("--trust-raw", dec.trust_raw,
                      "Run on the raw costs without optimizing them");
  decompose->add_option("--join", dec.joins, "Explicit merge joins \"a,b;c,d\"");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Raw vs optimized MLD cost sweep");
  bench_cmd->add_option("--kmin", bench.kmin)->capture_default_str();
  bench_cmd->add_option("--kmax", bench.kmax)->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv_out, "Write CSV here (default stdout)");

  OracleArgs orc;
  std::size_t limit = 0;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum cost by exhaustive search");
  oracle->add_option("cost_file", orc.cost_file, "Cost file")->required();
  oracle->add_option("perm_file", orc.perm_file, "Permutation file")->required();
  auto* limit_opt = oracle->add_option(
      "--limit", limit, "Largest n to search (default 7 or PERMSORT_LIMIT)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  return run_guarded(
      [&] {
        if (*optimize) return cmd_optimize(opt, std::cout);
        if (*decompose) return cmd_decompose(dec, std::cout);
        if (*bench_cmd) return cmd_bench(bench, std::cout);
        if (*limit_opt) orc.limit = limit;
        return cmd_oracle(orc, std::cout);
      },
      std::cerr);
}
