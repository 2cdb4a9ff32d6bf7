// Acceptance suite: one PASS/FAIL line per criterion.
//
//   permsort_acceptance                 run every criterion
//   permsort_acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "permsort/permsort.hpp"
#include "permsort_cli/bench.hpp"
#include "support/instances.hpp"

namespace permsort::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every emitted decomposition goes through here.
struct Gate {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  // `minimum_length`: the decomposition claims to be an MLD.
  void check(const Decomposition& d, const Permutation& target, bool minimum_length,
             const char* where) {
    ++checked;
    const bool valid = validate_decomposition(d, target);
    const bool parity_ok =
        (d.size() % 2 == 1) == (parity(target) == Parity::kOdd);
    const bool length_ok = minimum_length ? d.size() == cayley_length(target)
                                          : d.size() >= cayley_length(target);
    if (valid && parity_ok && length_ok) return;
    ++failed;
    if (first_failure.empty()) {
      first_failure = std::string(where) + ": " + format_transpositions(d);
    }
  }
};

Gate gate;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(Cost c) { return format_cost(c); }

Permutation of_cycle(const Cycle& c, std::size_t n) {
  return Permutation::from_cycles(n, std::span<const Cycle>(&c, 1));
}

Outcome triple_substitution_example() {
  Outcome o;
  const CostMatrix raw = testing::triple_example();
  const auto start = Clock::now();
  const OptimizerReport r = optimize_triple_substitution(raw);
  const double elapsed = seconds_since(start);
  const CostMatrix& star = r.optimized();
  o.require(star(1, 4) == 8, "phi*(1,4)=" + num(star(1, 4)));
  o.require(star(2, 3) == 11, "phi*(2,3)=" + num(star(2, 3)));
  for (Label a = 1; a <= 4; ++a) {
    for (Label b = a + 1; b <= 4; ++b) {
      if ((a == 1 && b == 4) || (a == 2 && b == 3)) continue;
      o.require(star(a, b) == raw(a, b), "phi*(" + std::to_string(a) + "," +
                                             std::to_string(b) + ") changed");
    }
  }
  for (Label a = 1; a <= 4; ++a) {
    for (Label b = a + 1; b <= 4; ++b) {
      gate.check(expand_transposition(a, b, r),
                 Permutation::from_transposition(4, Transposition(a, b)), false,
                 "c1 expansion");
    }
  }
  o.require(elapsed < 1e-3, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome bellman_ford_figure() {
  Outcome o;
  const CostMatrix g = testing::six_vertex_graph();
  const auto start = Clock::now();
  const PathTable t = bellman_ford(g, 1);
  const double elapsed = seconds_since(start);
  const Cost d1[] = {0, 4, 1, 10, 18, 12};
  const Cost d2[] = {0, 8, 2, 16, 26, 20};
  const char names[] = "abcdef";
  for (Label v = 1; v <= 6; ++v) {
    o.require(t.d1(v) == d1[v - 1] && t.d2(v) == d2[v - 1],
              std::string(1, names[v - 1]) + "(" + num(t.d1(v)) + "," + num(t.d2(v)) + ")");
    if (v > 1) {
      gate.check(expand_transposition(1, v, t, g),
                 Permutation::from_transposition(6, Transposition(1, v)), false,
                 "c2 expansion");
    }
  }
  o.require(elapsed < 1e-3, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome optimizer_agreement() {
  Outcome o;
  std::mt19937_64 rng(3);
  const auto start = Clock::now();
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 2, 12));
    const CostMatrix raw = testing::random_integer_costs(n, rng, 1, 100, 0.2);
    const OptimizerReport r = optimize_triple_substitution(raw);
    if (r.optimized() != optimize_all_pairs(raw)) ++mismatches;
    if (trial % 10 == 0) {
      for (Label a = 1; a <= static_cast<Label>(n); ++a) {
        for (Label b = a + 1; b <= static_cast<Label>(n); ++b) {
          if (!is_finite(r.optimized()(a, b))) continue;
          gate.check(expand_transposition(a, b, r),
                     Permutation::from_transposition(n, Transposition(a, b)), false,
                     "c3 expansion");
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatching instances");
  o.require(elapsed < 5, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome interval_dp_example() {
  Outcome o;
  const CostMatrix raw = testing::interval_example();
  const CostMatrix star = optimize_triple_substitution(raw).optimized();
  CostMatrix expected_star = raw.with_kind(CostKind::kOptimized);
  expected_star.set(1, 3, 9);
  expected_star.set(3, 4, 7);
  o.require(star == expected_star, "Phi* differs");

  const Cycle c = testing::full_cycle(4);
  const MldTable t(c, star);
  const Cost table[4][4] = {{0, 5, 7, 8}, {0, 0, 2, 5}, {0, 0, 0, 7}, {0, 0, 0, 0}};
  bool table_ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) table_ok = table_ok && t.cost(i, j) == table[i][j];
  }
  o.require(table_ok, "C table differs");
  o.require(t.total() == 8, "C(1,4)=" + num(t.total()));

  const CycleSolution s = min_cost_mld(c, star);
  gate.check(s.require(), of_cycle(c, 4), true, "c4 mld");
  const Decomposition expected = testing::parse_compact("(34)(24)(14)");
  o.require(s.require() == expected,
            "reconstructed MLD " + format_transpositions(s.require()) + " (cost " +
                num(s.cost) + "), expected (34)(24)(14) (cost " +
                num(decomposition_cost(expected, star)) + ")");
  return o;
}

Outcome mod_five_chain() {
  Outcome o;
  const CostMatrix raw = testing::mod_five();
  const CostMatrix star = optimize_all_pairs(raw);
  const Cycle c = testing::full_cycle(5);
  const Permutation sigma = of_cycle(c, 5);
  const auto start = Clock::now();
  const CayleySearchResult m = mcd_exact(sigma, raw);
  const CycleSolution l = min_cost_mld(c, star);
  const CycleSolution s = simple_transposition_decomposition(c, star);
  const double elapsed = seconds_since(start);
  gate.check(m.witness, sigma, false, "c5 oracle");
  gate.check(l.require(), sigma, true, "c5 mld");
  gate.check(s.require(), sigma, true, "c5 std");
  o.require(m.min_cost == 6, "M=" + num(m.min_cost));
  o.require(l.cost == 8, "L=" + num(l.cost));
  o.require(s.cost == 12, "S=" + num(s.cost));
  o.require(m.min_cost <= l.cost && l.cost <= s.cost && s.cost <= 4 * m.min_cost,
            "chain broken");
  o.require(elapsed < 1, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome sparse_five_example() {
  Outcome o;
  const CostMatrix raw = testing::sparse_five();
  const OptimizerReport opt = optimize_triple_substitution(raw);
  const Cycle c = testing::full_cycle(5);
  const Permutation sigma = of_cycle(c, 5);

  const Cost lb = permutation_lower_bound(sigma, raw);
  o.require(lb == 103.5, "lower bound " + num(lb));

  const DecompositionReport mld = decompose(sigma, opt.optimized(), Method::kPerCycleMld);
  gate.check(*mld.decomposition, sigma, true, "c6 mld");
  o.require(mld.cost == 105, "L=" + num(mld.cost));
  o.require(mld.decomposition->size() == 4 && validate_decomposition(*mld.decomposition, sigma),
            "MLD not a valid 4-transposition sequence");

  DecomposeOptions options;
  options.expand = &opt;
  const DecompositionReport expanded =
      decompose(sigma, opt.optimized(), Method::kPerCycleMld, options);
  gate.check(*expanded.decomposition, sigma, false, "c6 expansion");
  o.require(expanded.decomposition->size() == 6, "expansion length " +
                                                     std::to_string(expanded.decomposition->size()));
  o.require(decomposition_cost(*expanded.decomposition, raw) == 105,
            "expansion raw cost " + num(decomposition_cost(*expanded.decomposition, raw)));
  o.require(product(*expanded.decomposition, 5) == sigma, "expansion product differs");

  const DecompositionReport s = decompose(sigma, opt.optimized(), Method::kPerCycleStd);
  gate.check(*s.decomposition, sigma, true, "c6 std");
  o.require(s.cost == 111, "STD=" + num(s.cost));
  return o;
}

Outcome ring_multi_cycle() {
  Outcome o;
  const CostMatrix raw = testing::ring(10);
  const CostMatrix star = optimize_all_pairs(raw);
  for (Label a = 1; a <= 10; ++a) {
    for (Label b = a + 1; b <= 10; ++b) {
      if (star(a, b) != 2 * testing::ring_distance(a, b, 10) - 1) {
        o.require(false, "phi*(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  const Permutation pi = parse_cycle_notation("(1 7 3 9 5)(2 8 4 10 6)", 10);
  const DecompositionReport mld = decompose(pi, star, Method::kPerCycleMld);
  const DecompositionReport std_ = decompose(pi, star, Method::kPerCycleStd);
  DecomposeOptions options;
  options.joins = {Transposition(1, 2)};
  const DecompositionReport merged = merged_decompose(pi, star, options);
  gate.check(*mld.decomposition, pi, true, "c7 mld");
  gate.check(*std_.decomposition, pi, true, "c7 std");
  gate.check(*merged.decomposition, pi, false, "c7 merge");
  o.require(mld.cost == 40, "MLD total " + num(mld.cost));
  o.require(std_.cost == 56, "STD total " + num(std_.cost));
  o.require(merged.cost == 38, "merged total " + num(merged.cost));
  o.require(permutation_lower_bound(pi, raw) == 20,
            "lower bound " + num(permutation_lower_bound(pi, raw)));
  return o;
}

// Random cycle over a random subset of 1..n with at least two elements.
Cycle random_cycle(std::size_t n, std::mt19937_64& rng) {
  std::vector<Label> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(static_cast<std::size_t>(testing::uniform_int(rng, 2, static_cast<int>(n))));
  return Cycle(v);
}

Outcome metric_path_exactness() {
  Outcome o;
  std::mt19937_64 rng(8);
  const auto start = Clock::now();
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 2, 7));
    const DefiningPath path = testing::random_path(n, rng, 1, 9);
    const CostMatrix metric = metric_path(path);
    const Cycle c = random_cycle(n, rng);
    const Permutation sigma = of_cycle(c, n);
    Cost half = 0;
    for (Label i = 1; i <= static_cast<Label>(n); ++i) {
      if (sigma(i) != i) half += metric(i, sigma(i));
    }
    half /= 2;
    const CycleSolution exact = metric_path_mcd(c, metric, path);
    const CycleSolution dp = min_cost_mld(c, optimize_all_pairs(metric));
    const CayleySearchResult m = mcd_exact(sigma, metric);
    gate.check(exact.require(), sigma, true, "c8 metric-exact");
    gate.check(dp.require(), sigma, true, "c8 mld");
    gate.check(m.witness, sigma, false, "c8 oracle");
    if (!(exact.cost == half && dp.cost == half && m.min_cost == half)) ++bad;
  }
  const double elapsed = seconds_since(start);
  o.require(bad == 0, std::to_string(bad) + " trials disagree");
  o.require(elapsed < 60, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome extended_path_two_approx() {
  Outcome o;
  std::mt19937_64 rng(9);
  int over = 0;
  int closed_form = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 2, 6));
    const DefiningPath path = testing::random_path(n, rng, 1, 9);
    const CostMatrix raw = extended_metric_path(path);
    const CostMatrix star = optimize_all_pairs(raw);
    if (extended_path_optimized(path) != star) ++closed_form;
    const Permutation p = testing::random_permutation(n, rng);
    const DecompositionReport dp = decompose(p, star, Method::kPerCycleMld);
    const CayleySearchResult m = mcd_exact(p, raw);
    gate.check(*dp.decomposition, p, true, "c9 mld");
    gate.check(m.witness, p, false, "c9 oracle");
    if (!(dp.cost <= 2 * m.min_cost)) ++over;
  }
  o.require(over == 0, std::to_string(over) + " trials exceed 2M");
  o.require(closed_form == 0, std::to_string(closed_form) + " closed-form mismatches");
  return o;
}

Outcome universal_four_approx() {
  Outcome o;
  std::mt19937_64 rng(10);
  int broken = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 2, 6));
    const CostMatrix raw = testing::random_integer_costs(n, rng, 0, 50);
    const CostMatrix star = optimize_all_pairs(raw);
    const Permutation p = testing::random_permutation(n, rng);
    const auto sp = testing::floyd_warshall(raw);
    Cost shortest_sum = 0;
    for (Label i = 1; i <= static_cast<Label>(n); ++i) shortest_sum += sp[i - 1][p(i) - 1];

    const CayleySearchResult m = mcd_exact(p, raw);
    const DecompositionReport l = decompose(p, star, Method::kPerCycleMld);
    const DecompositionReport s = decompose(p, star, Method::kPerCycleStd);
    gate.check(m.witness, p, false, "c10 oracle");
    gate.check(*l.decomposition, p, true, "c10 mld");
    gate.check(*s.decomposition, p, true, "c10 std");
    const Cost M = m.min_cost;
    if (!(M <= l.cost && l.cost <= s.cost && s.cost <= 4 * M && s.cost <= 2 * shortest_sum)) {
      ++broken;
    }
  }
  o.require(broken == 0, std::to_string(broken) + " trials break the chain");
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  std::mt19937_64 rng(11);
  const auto start = Clock::now();
  for (std::size_t k = 2; k <= 7; ++k) {
    std::size_t trees = 1;
    for (std::size_t i = 0; i + 2 < k; ++i) trees *= k;
    int bad = 0;
    for (int draw = 0; draw < 50; ++draw) {
      const CostMatrix star = optimize_all_pairs(testing::random_integer_costs(k, rng, 0, 100));
      const Cycle c = testing::random_full_cycle(k, rng);
      const EnumerationResult e = mld_exact_enumeration(c, star);
      const CycleSolution dp = min_cost_mld(c, star);
      gate.check(e.witness, of_cycle(c, k), true, "c11 enumeration");
      gate.check(dp.require(), of_cycle(c, k), true, "c11 mld");
      if (e.min_cost != dp.cost || e.trees != trees) ++bad;
    }
    o.require(bad == 0, "k=" + std::to_string(k) + ": " + std::to_string(bad) + " draws differ");
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 120, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome bench_reproduction() {
  Outcome o;
  constexpr std::uint64_t kSeed = 1;
  constexpr int kTrials = 500;
  const auto start = Clock::now();
  const auto rows = cli::run_bench(3, 12, kTrials, kSeed);
  const auto again = cli::run_bench(3, 12, kTrials, kSeed);
  const double elapsed = seconds_since(start);
  o.require(cli::bench_csv(rows) == cli::bench_csv(again), "CSV not deterministic");

  int raw_inversions = 0;
  int opt_inversions = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].k >= 4) {
      o.require(rows[i].mean_opt < rows[i].mean_raw,
                "k=" + std::to_string(rows[i].k) + " optimized not below raw");
    }
    if (i > 0) {
      raw_inversions += rows[i].mean_raw < rows[i - 1].mean_raw;
      opt_inversions += rows[i].mean_opt < rows[i - 1].mean_opt;
    }
  }
  o.require(raw_inversions <= 1, std::to_string(raw_inversions) + " inversions in mean_raw");
  o.require(opt_inversions <= 1, std::to_string(opt_inversions) + " inversions in mean_opt");

  // Replay every trial so its decompositions pass the gate, and confirm the
  // means come from them.
  for (const cli::BenchRow& row : rows) {
    const Cycle c = testing::full_cycle(static_cast<std::size_t>(row.k));
    const Permutation sigma = of_cycle(c, c.size());
    double raw_sum = 0;
    double opt_sum = 0;
    for (int t = 0; t < kTrials; ++t) {
      std::mt19937_64 engine(cli::trial_seed(kSeed, row.k, t));
      const CostMatrix raw = cli::random_uniform_costs(row.k, engine);
      const CycleSolution on_raw = min_cost_mld(c, raw, {.trust_raw = true});
      const CycleSolution on_opt = min_cost_mld(c, optimize_all_pairs(raw));
      gate.check(on_raw.require(), sigma, true, "c12 raw");
      gate.check(on_opt.require(), sigma, true, "c12 optimized");
      raw_sum += on_raw.cost;
      opt_sum += on_opt.cost;
    }
    o.require(raw_sum / kTrials == row.mean_raw && opt_sum / kTrials == row.mean_opt,
              "k=" + std::to_string(row.k) + " replay differs");
  }
  o.require(elapsed < 120, "took " + std::to_string(elapsed) + " s");
  return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Outcome()>>> list{
      {"triple-substitution worked example", triple_substitution_example},
      {"Bellman-Ford six-vertex figure", bellman_ford_figure},
      {"optimizer agreement on 100 random instances", optimizer_agreement},
      {"interval DP worked example", interval_dp_example},
      {"mod-5 instance M=6 L=8 S=12", mod_five_chain},
      {"sparse five-cycle instance", sparse_five_example},
      {"ring multi-cycle instance", ring_multi_cycle},
      {"metric-path exactness", metric_path_exactness},
      {"extended-metric-path 2-approximation", extended_path_two_approx},
      {"universal 4-approximation", universal_four_approx},
      {"non-crossing tree enumeration oracle", enumeration_oracle},
      {"benchmark curve reproduction", bench_reproduction},
  };
  return list;
}

Outcome validation_gate() {
  gate = Gate{};
  for (const auto& [name, run] : criteria()) run();
  Outcome o;
  o.require(gate.checked > 0, "nothing checked");
  o.require(gate.failed == 0, std::to_string(gate.failed) + " of " +
                                  std::to_string(gate.checked) +
                                  " decompositions failed, first " + gate.first_failure);
  if (o.pass) o.detail = std::to_string(gate.checked) + " decompositions checked";
  return o;
}

bool report(int id, const char* name, const std::function<Outcome()>& run) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("criterion %2d %s: %s%s%s\n", id, o.pass ? "PASS" : "FAIL", name,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace
}  // namespace permsort::acceptance

int main(int argc, char** argv) {
  using namespace permsort::acceptance;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 13) {
    std::fprintf(stderr, "criterion must be 1..13\n");
    return 2;
  }
  bool all = true;
  const auto& list = criteria();
  for (int id = 1; id <= 12; ++id) {
    if (only == 0 || only == id) all &= report(id, list[id - 1].first, list[id - 1].second);
  }
  if (only == 0 || only == 13) all &= report(13, "validation gate", validation_gate);
  return all ? 0 : 1;
}
