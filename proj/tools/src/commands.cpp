#include "permsort_cli/commands.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "permsort/cost_matrix.hpp"
#include "permsort/error.hpp"
#include "permsort/optimizer.hpp"
#include "permsort/oracle.hpp"
#include "permsort/permutation_decomposer.hpp"
#include "permsort_cli/bench.hpp"

namespace permsort::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void write_text(const std::string& path, const std::string& text,
                std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write '" + path + "'");
  out << text;
}

std::string strip_line_prefix(const std::string& what) {
  const auto colon = what.find(": ");
  return what.rfind("line ", 0) == 0 && colon != std::string::npos
             ? what.substr(colon + 2)
             : what;
}

Method parse_method(const std::string& name) {
  if (name == "mld") return Method::kPerCycleMld;
  if (name == "std") return Method::kPerCycleStd;
  if (name == "merge") return Method::kMergedMld;
  if (name == "metric-exact") return Method::kMetricExact;
  throw ContractError("unknown method '" + name + "'");
}

std::string format_decomposition(const Decomposition& d) {
  return d.empty() ? std::string() : format_transpositions(d);
}

}  // namespace

Permutation parse_permutation_text(std::string_view text, std::size_t n) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      try {
        return line[first] == '(' ? parse_cycle_notation(line, n)
                                  : parse_one_line(line);
      } catch (const ParseError& e) {
        throw ParseError(line_no, strip_line_prefix(e.what()));
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  throw ParseError(1, "no permutation found");
}

std::vector<Transposition> parse_joins(std::string_view text) {
  std::vector<Transposition> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(1, "join '" + std::string(item) + "' must be 'a,b'");
    }
    const auto number = [&](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      Label v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(1, "bad join label '" + std::string(s) + "'");
      }
      return v;
    };
    const Label a = number(item.substr(0, comma));
    const Label b = number(item.substr(comma + 1));
    if (a == b) throw ParseError(1, "join needs two distinct labels");
    out.emplace_back(a, b);
    pos = end + 1;
  }
  return out;
}

std::size_t resolve_limit(std::optional<std::size_t> explicit_limit) {
  if (explicit_limit) return *explicit_limit;
  if (const char* env = std::getenv("PERMSORT_LIMIT"); env && *env) {
    std::size_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ContractError("PERMSORT_LIMIT must be a non-negative integer");
    }
    return v;
  }
  return kDefaultSearchLimit;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitContract;
  }
}

int cmd_optimize(const OptimizeArgs& args, std::ostream& out) {
  const CostMatrix raw = parse_cost_text(read_file(args.cost_file)).matrix;
  if (args.method != "alg1" && args.method != "bellman-ford" &&
      args.method != "both") {
    throw ContractError("unknown method '" + args.method + "'");
  }
  std::optional<CostMatrix> phi_star;
  if (args.method != "bellman-ford") {
    const OptimizerReport report = optimize_triple_substitution(raw);
    out << "# triple substitution sweeps: " << report.sweeps() << "\n";
    phi_star = report.optimized();
  }
  if (args.method != "alg1") {
    CostMatrix bf = optimize_all_pairs(raw);
    if (phi_star && *phi_star != bf) {
      throw ContractError("triple substitution and Bellman-Ford disagree");
    }
    phi_star = std::move(bf);
  }

  std::size_t changed = 0;
  std::ostringstream lines;
  const auto n = static_cast<Label>(raw.size());
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      if ((*phi_star)(a, b) != raw(a, b)) {
        ++changed;
        lines << "#   " << a << " " << b << ": " << format_cost(raw(a, b))
              << " -> " << format_cost((*phi_star)(a, b)) << "\n";
      }
    }
  }
  out << "# " << changed << " entries changed\n" << lines.str();
  write_text(args.out_file, serialize_cost_file(*phi_star), out);
  return kExitOk;
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out) {
  const ParsedCosts parsed = parse_cost_text(read_file(args.cost_file));
  const CostMatrix& raw = parsed.matrix;
  const Permutation p =
      parse_permutation_text(read_file(args.perm_file), raw.size());
  const Method method = parse_method(args.method);

  const OptimizerReport optimizer = optimize_triple_substitution(raw);
  DecomposeOptions options;
  options.trust_raw = args.trust_raw;
  options.joins = parse_joins(args.joins);
  if (args.expand) options.expand = &optimizer;
  if (parsed.path) options.path = &*parsed.path;
  if (method == Method::kMetricExact && !parsed.path) {
    throw ContractError("metric-exact needs a 'path' cost file");
  }
  const CostMatrix& costs =
      method == Method::kMetricExact ? raw
      : args.trust_raw             ? raw
                                   : optimizer.optimized();

  const DecompositionReport report = decompose(p, costs, method, options);
  out << "permutation: " << format_cycle_notation(p) << "\n";
  out << "method: " << method_name(method) << (args.expand ? " (expanded)" : "")
      << "\n";
  if (method == Method::kMergedMld) {
    out << "joins: " << format_decomposition(report.joins) << "\n";
  }
  if (!report.decomposition) {
    throw InfeasibleError(
        report.blocking
            ? "no finite decomposition: pair (" + std::to_string(report.blocking->a()) +
                  " " + std::to_string(report.blocking->b()) +
                  ") has infinite cost"
            : std::string("no finite decomposition"));
  }
  if (!validate_decomposition(*report.decomposition, p)) {
    throw ContractError("decomposition failed validation");
  }
  out << "transpositions (applied right-to-left):\n"
      << format_decomposition(*report.decomposition) << "\n";
  out << "length: " << report.decomposition->size() << "\n";
  out << "cost: " << format_cost(report.cost) << "\n";
  out << "lower bound: " << format_cost(report.lower_bound) << "\n";
  out << "ratio (upper estimate): " << format_cost(report.alpha_upper) << "\n";
  return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const auto rows = run_bench(args.kmin, args.kmax, args.trials, args.seed);
  write_text(args.csv_out, bench_csv(rows), out);
  return kExitOk;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const CostMatrix raw = parse_cost_text(read_file(args.cost_file)).matrix;
  const Permutation p =
      parse_permutation_text(read_file(args.perm_file), raw.size());
  const std::size_t limit = resolve_limit(args.limit);
  const CayleySearchResult exact = mcd_exact(p, raw, limit);
  const CostMatrix phi_star = optimize_triple_substitution(raw).optimized();
  const DecompositionReport mld = decompose(p, phi_star, Method::kPerCycleMld);
  const DecompositionReport stdd = decompose(p, phi_star, Method::kPerCycleStd);

  if (is_finite(exact.min_cost) &&
      !validate_decomposition(exact.witness, p)) {
    throw ContractError("oracle witness failed validation");
  }
  const Cost m = exact.min_cost;
  const Cost l = mld.cost;
  const Cost s = stdd.cost;
  const bool chain = m <= l && l <= s && s <= 4 * m;
  out << "permutation: " << format_cycle_notation(p) << "\n";
  out << "witness (applied right-to-left): "
      << format_decomposition(exact.witness) << "\n";
  out << "M=" << format_cost(m) << " L=" << format_cost(l)
      << " S=" << format_cost(s) << " chain " << (chain ? "OK" : "FAILED")
      << "\n";
  return chain ? kExitOk : kExitContract;
}

}  // namespace permsort::cli
