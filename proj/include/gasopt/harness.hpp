#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasopt/core.hpp"

namespace gasopt {

// A success-curve group is missing runs (fewer than the expected T traces).
struct IncompleteData : std::runtime_error {
  explicit IncompleteData(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// One benchmark campaign: every algorithm runs every function T times.
struct BenchmarkPlan {
  std::vector<std::string> algorithms;  // subset of {gas, bh, cs, de}
  std::vector<std::string> functions;   // registry names
  std::uint64_t budget = 1000000;       // reads per run
  int runs_T = 1;
  std::uint64_t base_seed = 1;
  std::vector<std::uint64_t> sample_grid;  // empty -> log_sample_grid(budget)
};

struct CurvePoint {
  std::uint64_t reads = 0;
  double fraction = 0.0;  // functions solved by at least one of T runs

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct SuccessCurve {
  std::string algorithm;
  int runs_T = 1;
  std::vector<CurvePoint> points;
};

// Logarithmic read checkpoints from 100 up to the budget (inclusive),
// deduplicated after rounding; used as the x-grid of the success curves.
std::vector<std::uint64_t> log_sample_grid(std::uint64_t budget,
                                           int points = 30);

// Expands a CLI function-set token: "all", "2d", "lj", "rastrigin", or a
// comma-separated list of registry names.
std::vector<std::string> expand_function_set(const std::string& token);

// One run of the named solver with default configuration; the target value
// and success tolerance come from the registry, so the run halts on solve or
// budget (never on stability).
RunTrace run_single(const std::string& algo, const std::string& function_name,
                    std::uint64_t budget, std::uint64_t seed);

// T independent runs with seeds derived from (base_seed, run index); the
// budget applies per run. Runs execute on up to `workers` threads; results
// do not depend on the interleaving.
std::vector<RunTrace> run_concurrent(const std::string& algo,
                                     const std::string& function_name,
                                     std::uint64_t budget, int runs_T,
                                     std::uint64_t base_seed, int workers = 1);

// Fraction of functions solved by at least one of the T runs within each
// checkpoint's read count. Traces are grouped by objective name; every group
// must hold exactly T traces or IncompleteData is thrown.
SuccessCurve success_curve(const std::vector<RunTrace>& traces,
                           const std::vector<std::uint64_t>& sample_grid,
                           int runs_T);

struct BenchmarkResults {
  BenchmarkPlan plan;
  std::vector<RunTrace> traces;      // ordered by (algorithm, function, run)
  std::vector<SuccessCurve> curves;  // one per algorithm
};

// Executes the full plan on up to `workers` threads.
BenchmarkResults run_plan(const BenchmarkPlan& plan, int workers = 1);

// Writes traces.csv, summary.json, and curves.svg into out_dir. Identical
// inputs produce byte-identical files.
void export_results(const BenchmarkResults& results,
                    const std::filesystem::path& out_dir);

// Reads traces.csv back into traces (samples, seeds, and run grouping;
// solved-at reads are re-derived from the per-function tolerance).
std::vector<RunTrace> load_traces_csv(const std::filesystem::path& csv_path);

// Rebuilds curves and curves.svg in out_dir from a previously exported
// traces.csv (and summary.json when present, for the plan's grid).
void rebuild_curves(const std::filesystem::path& in_dir,
                    const std::filesystem::path& out_dir);

}  // namespace gasopt
