#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsort/permutation.hpp"

namespace permsort::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitContract = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitSizeGuard = 4;

struct OptimizeArgs {
  std::string cost_file;
  std::string out_file;  // empty: write the matrix to stdout
  std::string method = "both";  // alg1 | bellman-ford | both
};

struct DecomposeArgs {
  std::string cost_file;
  std::string perm_file;
  std::string method = "mld";  // mld | std | merge | metric-exact
  bool expand = false;
  bool trust_raw = false;
  std::string joins;  // "a,b;c,d"
};

struct BenchArgs {
  int kmin = 3;
  int kmax = 12;
  int trials = 500;
  std::uint64_t seed = 1;
  std::string csv_out;  // empty: stdout
};

struct OracleArgs {
  std::string cost_file;
  std::string perm_file;
  std::optional<std::size_t> limit;
};

int cmd_optimize(const OptimizeArgs& args, std::ostream& out);
int cmd_decompose(const DecomposeArgs& args, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out);
int cmd_oracle(const OracleArgs& args, std::ostream& out);

// Runs `body`, mapping library errors to their exit code and printing
// "error: ..." to err.
int run_guarded(const std::function<int()>& body, std::ostream& err);

// First non-comment line, either one-line notation "3 1 2" or cycle
// notation "(1 3 2)" (which needs n).
Permutation parse_permutation_text(std::string_view text, std::size_t n);

// "1,2;3,4" -> (1 2), (3 4).
std::vector<Transposition> parse_joins(std::string_view text);

// Oracle size limit: explicit value, else PERMSORT_LIMIT, else the default.
std::size_t resolve_limit(std::optional<std::size_t> explicit_limit);

std::string read_file(const std::string& path);

}  // namespace permsort::cli
