#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gasopt/harness.hpp"
#include "gasopt/testbed.hpp"

using namespace gasopt;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("gasopt_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunTrace fake_trace(const std::string& algo, const std::string& fn,
                    std::uint64_t seed,
                    std::optional<std::uint64_t> solved_at) {
  RunTrace t;
  t.algorithm = algo;
  t.objective = fn;
  t.seed = seed;
  t.samples = {{10, 5.0}, {200, 1.0}};
  if (solved_at) {
    t.samples.push_back({*solved_at, 0.0});
    t.solved_at_reads = solved_at;
    t.status = RunStatus::solved;
  }
  return t;
}

}  // namespace

TEST_CASE("log sample grid spans 100 to the budget") {
  auto grid = log_sample_grid(1000000);
  REQUIRE(!grid.empty());
  CHECK(grid.front() == 100);
  CHECK(grid.back() == 1000000);
  CHECK(grid.size() <= 30);
  CHECK(grid.size() >= 25);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

  CHECK(log_sample_grid(50) == std::vector<std::uint64_t>{50});
  CHECK(log_sample_grid(100) == std::vector<std::uint64_t>{100});
  auto small = log_sample_grid(300);
  CHECK(small.front() == 100);
  CHECK(small.back() == 300);
}

TEST_CASE("function set tokens expand against the registry") {
  const auto& names = FunctionRegistry::instance().names();
  CHECK(expand_function_set("all") == names);

  auto flat = expand_function_set("2d");
  REQUIRE(flat.size() == 15);
  CHECK(flat.front() == "ackley");
  CHECK(flat.back() == "three_hump_camel");

  auto lj = expand_function_set("lj");
  REQUIRE(lj.size() == 8);
  CHECK(lj.front() == "lj3");
  CHECK(lj.back() == "lj10");

  auto rast = expand_function_set("rastrigin");
  REQUIRE(rast.size() == 8);
  CHECK(rast.front() == "rastrigin3");
  CHECK(rast.back() == "rastrigin10");

  CHECK(expand_function_set("sphere,beale") ==
        std::vector<std::string>{"sphere", "beale"});
  CHECK_THROWS_AS(expand_function_set("nope"), UnknownFunction);
  CHECK_THROWS_AS(expand_function_set(""), UnknownFunction);
}

TEST_CASE("run_single applies registry targets and replays exactly") {
  RunTrace t = run_single("gas", "sphere", 10000, 1);
  CHECK(t.status == RunStatus::solved);
  REQUIRE(t.solved_at_reads.has_value());
  CHECK(*t.solved_at_reads <= 10000);
  CHECK(t.algorithm == "gas");
  CHECK(t.objective == "sphere");
  REQUIRE(t.best_position.has_value());
  CHECK(t.best_position->size() == 2);

  RunTrace again = run_single("gas", "sphere", 10000, 1);
  CHECK(again.samples == t.samples);
  CHECK(again.solved_at_reads == t.solved_at_reads);

  RunTrace tiny = run_single("de", "lj10", 1000, 7);
  CHECK(tiny.status == RunStatus::budget_exhausted);
  CHECK(!tiny.samples.empty());

  CHECK_THROWS_AS(run_single("pso", "sphere", 100, 1), UnknownAlgorithm);
  CHECK_THROWS_AS(run_single("gas", "nope", 100, 1), UnknownFunction);
}

TEST_CASE("concurrent runs use nested seeds and ignore the worker count") {
  auto three = run_concurrent("bh", "beale", 8000, 3, 42);
  REQUIRE(three.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(three[i].seed == derive_run_seed(42, i));

  // T=1 is exactly run_single on the first derived seed.
  auto one = run_concurrent("bh", "beale", 8000, 1, 42);
  RunTrace single = run_single("bh", "beale", 8000, derive_run_seed(42, 0));
  CHECK(one[0].samples == single.samples);

  // Smaller T is a prefix of larger T.
  auto two = run_concurrent("bh", "beale", 8000, 2, 42);
  for (int i = 0; i < 2; ++i) CHECK(two[i].samples == three[i].samples);

  // Scheduling across workers cannot change the result.
  auto parallel = run_concurrent("bh", "beale", 8000, 3, 42, 4);
  for (int i = 0; i < 3; ++i) CHECK(parallel[i].samples == three[i].samples);
}

TEST_CASE("success curve counts functions solved by any run") {
  std::vector<std::uint64_t> grid = {1000, 4999, 5000, 9000};

  std::vector<RunTrace> one = {fake_trace("gas", "sphere", 1, 5000)};
  SuccessCurve c = success_curve(one, grid, 1);
  REQUIRE(c.points.size() == 4);
  CHECK(c.points[0].fraction == 0.0);
  CHECK(c.points[1].fraction == 0.0);
  CHECK(c.points[2].fraction == 1.0);
  CHECK(c.points[3].fraction == 1.0);

  std::vector<RunTrace> none = {fake_trace("gas", "sphere", 1, std::nullopt)};
  for (const auto& p : success_curve(none, grid, 1).points)
    CHECK(p.fraction == 0.0);

  // Two functions, two runs each; beale solved only by its second run.
  std::vector<RunTrace> mixed = {
      fake_trace("gas", "sphere", 1, 900),
      fake_trace("gas", "sphere", 2, std::nullopt),
      fake_trace("gas", "beale", 1, std::nullopt),
      fake_trace("gas", "beale", 2, 6000),
  };
  SuccessCurve m = success_curve(mixed, grid, 2);
  CHECK(m.points[0].fraction == doctest::Approx(0.5));  // sphere at 900
  CHECK(m.points[3].fraction == doctest::Approx(1.0));  // beale at 6000
  for (std::size_t i = 1; i < m.points.size(); ++i)
    CHECK(m.points[i].fraction >= m.points[i - 1].fraction);

  std::vector<RunTrace> missing = {
      fake_trace("gas", "sphere", 1, 900),
      fake_trace("gas", "beale", 1, std::nullopt),
      fake_trace("gas", "beale", 2, 6000),
  };
  CHECK_THROWS_AS(success_curve(missing, grid, 2), IncompleteData);
  CHECK_THROWS_AS(success_curve({}, grid, 1), IncompleteData);
}

TEST_CASE("more concurrent runs never lower the curve") {
  const std::vector<std::uint64_t> grid = log_sample_grid(20000);
  auto runs4 = run_concurrent("gas", "rastrigin2d", 20000, 4, 9);
  std::vector<RunTrace> first1(runs4.begin(), runs4.begin() + 1);
  std::vector<RunTrace> first2(runs4.begin(), runs4.begin() + 2);

  SuccessCurve c1 = success_curve(first1, grid, 1);
  SuccessCurve c2 = success_curve(first2, grid, 2);
  SuccessCurve c4 = success_curve(runs4, grid, 4);
  REQUIRE(c1.points.size() == c4.points.size());
  for (std::size_t i = 0; i < c1.points.size(); ++i) {
    CHECK(c2.points[i].fraction >= c1.points[i].fraction);
    CHECK(c4.points[i].fraction >= c2.points[i].fraction);
  }
}

TEST_CASE("plan execution, export, and reload round-trip") {
  BenchmarkPlan plan;
  plan.algorithms = {"gas", "bh"};
  plan.functions = {"sphere", "beale"};
  plan.budget = 5000;
  plan.runs_T = 2;
  plan.base_seed = 7;

  BenchmarkResults results = run_plan(plan, 2);
  REQUIRE(results.traces.size() == 8);
  REQUIRE(results.curves.size() == 2);
  CHECK(results.curves[0].algorithm == "gas");
  CHECK(results.curves[1].algorithm == "bh");

  // Deterministic regardless of worker count.
  BenchmarkResults serial = run_plan(plan, 1);
  for (std::size_t i = 0; i < results.traces.size(); ++i)
    CHECK(results.traces[i].samples == serial.traces[i].samples);

  fs::path dir_a = fresh_dir("export_a");
  fs::path dir_b = fresh_dir("export_b");
  export_results(results, dir_a);
  export_results(results, dir_b);
  const std::string csv = slurp(dir_a / "traces.csv");
  CHECK(csv == slurp(dir_b / "traces.csv"));
  CHECK(slurp(dir_a / "summary.json") == slurp(dir_b / "summary.json"));
  CHECK(slurp(dir_a / "curves.svg") == slurp(dir_b / "curves.svg"));

  // Row count equals the total number of samples.
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  std::size_t samples = 0;
  for (const auto& t : results.traces) samples += t.samples.size();
  CHECK(rows == samples + 1);  // header

  // Parsed traces reproduce the source records.
  std::vector<RunTrace> loaded = load_traces_csv(dir_a / "traces.csv");
  REQUIRE(loaded.size() == results.traces.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].algorithm == results.traces[i].algorithm);
    CHECK(loaded[i].objective == results.traces[i].objective);
    CHECK(loaded[i].seed == results.traces[i].seed);
    CHECK(loaded[i].samples == results.traces[i].samples);
    CHECK(loaded[i].solved_at_reads == results.traces[i].solved_at_reads);
  }

  // Rebuilding the figure from the CSV reproduces it byte-for-byte.
  fs::path dir_c = fresh_dir("export_c");
  rebuild_curves(dir_a, dir_c);
  CHECK(slurp(dir_c / "curves.svg") == slurp(dir_a / "curves.svg"));

  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  fs::remove_all(dir_c);
}

TEST_CASE("empty result sets still export valid files") {
  BenchmarkResults empty;
  empty.plan.sample_grid = log_sample_grid(1000);
  fs::path dir = fresh_dir("export_empty");
  export_results(empty, dir);

  CHECK(slurp(dir / "traces.csv") ==
        "algo,function,run_id,seed,reads,best_value,error\n");
  const std::string svg = slurp(dir / "curves.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(!slurp(dir / "summary.json").empty());
  fs::remove_all(dir);
}
