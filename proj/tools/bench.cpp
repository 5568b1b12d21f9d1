// Command-line benchmark driver for the optimizer library.
//
//   bench run    — execute a benchmark campaign and export traces/curves
//   bench curves — rebuild the success-curve plot from an exported traces.csv
//   bench list   — print the objective registry as JSON
//   bench solve  — run one solver on one function and print the result
//
// Exit status: 0 on success (including --help), 2 on bad arguments or any
// runtime failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gasopt/core.hpp"
#include "gasopt/harness.hpp"
#include "gasopt/testbed.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  for (char c : csv) {
    if (c == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

// Budgets are entered as doubles so that "1e6" works on the command line.
std::uint64_t budget_from_double(double budget) {
  if (!(budget >= 1.0) || budget > 9.0e18) {
    throw CLI::ValidationError("budget", "budget must be a positive count");
  }
  return static_cast<std::uint64_t>(std::llround(budget));
}

int run_command(const std::string& algos_csv, const std::string& functions_tok,
                double budget, int runs, std::uint64_t seed, int workers,
                const std::string& out_dir) {
  gasopt::BenchmarkPlan plan;
  plan.algorithms = split_csv(algos_csv);
  plan.functions = gasopt::expand_function_set(functions_tok);
  plan.budget = budget_from_double(budget);
  plan.runs_T = runs;
  plan.base_seed = seed;

  gasopt::BenchmarkResults results = gasopt::run_plan(plan, workers);
  gasopt::export_results(results, out_dir);

  // Per algorithm: how many functions were solved by at least one run.
  std::map<std::string, int> solved;
  std::map<std::string, bool> group_solved;
  for (const auto& trace : results.traces) {
    group_solved[trace.algorithm + "/" + trace.objective] |=
        trace.solved_at_reads.has_value();
  }
  for (const auto& [key, hit] : group_solved) {
    if (hit) ++solved[key.substr(0, key.find('/'))];
  }

  std::printf("ran %zu algorithm(s) x %zu function(s), %d run(s) each, budget %llu reads\n",
              plan.algorithms.size(), plan.functions.size(), plan.runs_T,
              static_cast<unsigned long long>(plan.budget));
  for (const auto& algo : plan.algorithms) {
    std::printf("  %-3s solved %d/%zu functions\n", algo.c_str(), solved[algo],
                plan.functions.size());
  }
  std::printf("wrote %s/traces.csv, summary.json, curves.svg\n",
              out_dir.c_str());
  return 0;
}

int solve_command(const std::string& algo, const std::string& function_name,
                  double budget, std::uint64_t seed) {
  gasopt::RunTrace trace = gasopt::run_single(
      algo, function_name, budget_from_double(budget), seed);
  const auto& registry = gasopt::FunctionRegistry::instance();
  double target = registry.known_minimum(function_name).first;

  std::printf("algorithm:  %s\n", trace.algorithm.c_str());
  std::printf("function:   %s\n", trace.objective.c_str());
  std::printf("seed:       %llu\n",
              static_cast<unsigned long long>(trace.seed));
  std::printf("status:     %s\n", std::string(to_string(trace.status)).c_str());
  std::printf("best value: %.17g\n", trace.final_best());
  std::printf("target:     %.17g (tolerance %g)\n", target,
              registry.success_tolerance(function_name));
  std::printf("error:      %.17g\n", std::fabs(trace.final_best() - target));
  if (trace.solved_at_reads) {
    std::printf("solved at:  %llu reads\n",
                static_cast<unsigned long long>(*trace.solved_at_reads));
  } else {
    std::printf("solved at:  -\n");
  }
  if (trace.best_position) {
    std::printf("best point:");
    for (double v : *trace.best_position) std::printf(" %.17g", v);
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark driver for the swarm optimizer and its baselines"};
  app.require_subcommand(1);

  // --- run ---------------------------------------------------------------
  std::string algos_csv = "gas";
  std::string functions_tok = "all";
  double budget = 1e6;
  int runs = 1;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out_dir = "bench_out";

  CLI::App* run = app.add_subcommand(
      "run", "Run a benchmark campaign and export traces and curves");
  run->add_option("--algos", algos_csv,
                  "Comma-separated solvers: gas,bh,cs,de");
  run->add_option("--functions", functions_tok,
                  "Function set: all, 2d, lj, rastrigin, or a comma list");
  run->add_option("--budget", budget, "Function reads per run (e.g. 1e6)");
  run->add_option("--runs", runs, "Independent runs per (solver, function)")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Base seed; run i uses a derived child seed");
  run->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", out_dir, "Output directory");

  // --- curves ------------------------------------------------------------
  std::string in_dir;
  std::string curves_out;

  CLI::App* curves = app.add_subcommand(
      "curves", "Rebuild curves.svg from a previously exported traces.csv");
  curves->add_option("--in", in_dir, "Directory holding traces.csv")
      ->required();
  curves->add_option("--out", curves_out,
                     "Output directory (defaults to --in)");

  // --- list --------------------------------------------------------------
  CLI::App* list = app.add_subcommand(
      "list", "Print the objective registry (name, dimension, domain, target)");

  // --- solve -------------------------------------------------------------
  std::string solve_algo = "gas";
  std::string solve_function;
  double solve_budget = 1e6;
  std::uint64_t solve_seed = 1;

  CLI::App* solve = app.add_subcommand(
      "solve", "Run one solver on one function and print the outcome");
  solve->add_option("--algo", solve_algo, "Solver: gas, bh, cs, or de");
  solve->add_option("--function", solve_function, "Registry function name")
      ->required();
  solve->add_option("--budget", solve_budget,
                    "Function reads allowed (e.g. 2e5)");
  solve->add_option("--seed", solve_seed, "Run seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      return run_command(algos_csv, functions_tok, budget, runs, seed, workers,
                         out_dir);
    }
    if (curves->parsed()) {
      gasopt::rebuild_curves(in_dir, curves_out.empty() ? in_dir : curves_out);
      std::printf("wrote %s/curves.svg\n",
                  (curves_out.empty() ? in_dir : curves_out).c_str());
      return 0;
    }
    if (list->parsed()) {
      std::printf("%s\n",
                  gasopt::FunctionRegistry::instance().manifest_json().c_str());
      return 0;
    }
    if (solve->parsed()) {
      return solve_command(solve_algo, solve_function, solve_budget,
                           solve_seed);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
