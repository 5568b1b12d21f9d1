#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "gasopt/baselines.hpp"
#include "gasopt/testbed.hpp"

using namespace gasopt;

namespace {

// Wraps a registry entry so every evaluated point is captured; used to check
// domain containment, read accounting, and proposal provenance from outside.
ObjectiveSpec logging_spec(const ObjectiveSpec& base,
                           std::shared_ptr<std::vector<Point>> log) {
  ObjectiveSpec spec = base;
  auto f = base.evaluate;
  spec.evaluate = [f, log](std::span<const double> x) {
    log->emplace_back(x.begin(), x.end());
    return f(x);
  };
  return spec;
}

void check_trace_shape(const RunTrace& trace) {
  REQUIRE(!trace.samples.empty());
  for (std::size_t i = 1; i < trace.samples.size(); ++i) {
    CHECK(trace.samples[i].reads > trace.samples[i - 1].reads);
    CHECK(trace.samples[i].best_value < trace.samples[i - 1].best_value);
  }
}

double min_distance_to(const Point& x, const std::vector<Point>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : set) best = std::min(best, squared_distance(x, p));
  return std::sqrt(best);
}

}  // namespace

TEST_CASE("metropolis rule accepts drops and obeys the temperature limit") {
  RngStream rng(11);
  CHECK(metropolis_accept(-1.0, 1.0, rng));
  CHECK(metropolis_accept(0.0, 1.0, rng));
  for (int i = 0; i < 1000; ++i)
    CHECK_FALSE(metropolis_accept(1e-3, 1e-300, rng));

  // rise = ln 2 at temperature 1 accepts about half the time.
  int accepted = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i)
    accepted += metropolis_accept(std::log(2.0), 1.0, rng) ? 1 : 0;
  CHECK(std::abs(accepted / double(trials) - 0.5) < 0.02);
}

TEST_CASE("basin hopping solves sphere and replays deterministically") {
  const auto& reg = FunctionRegistry::instance();
  const ObjectiveSpec& sphere = reg.get("sphere");

  EvalBudget budget(10000);
  RunTrace trace = bh_run(sphere, BhConfig{}, budget, 7,
                          Target{0.0, 1e-6});
  CHECK(trace.status == RunStatus::solved);
  REQUIRE(trace.solved_at_reads.has_value());
  CHECK(*trace.solved_at_reads <= 10000);
  CHECK(trace.algorithm == "bh");
  check_trace_shape(trace);

  EvalBudget b2(10000);
  RunTrace replay = bh_run(sphere, BhConfig{}, b2, 7, Target{0.0, 1e-6});
  CHECK(replay.samples == trace.samples);

  EvalBudget b3(10000);
  RunTrace other = bh_run(sphere, BhConfig{}, b3, 8, Target{0.0, 1e-6});
  CHECK(other.samples != trace.samples);
}

TEST_CASE("basin hopping stays in the domain and counts every read") {
  const auto& reg = FunctionRegistry::instance();
  auto log = std::make_shared<std::vector<Point>>();
  ObjectiveSpec spec = logging_spec(reg.get("eggholder"), log);

  EvalBudget budget(3000);
  RunTrace trace = bh_run(spec, BhConfig{}, budget, 3, Target{-1e18, 1e-6});
  CHECK(trace.status == RunStatus::budget_exhausted);
  CHECK(log->size() == budget.used());
  CHECK(budget.used() == 3000);
  for (const Point& x : *log) CHECK(spec.domain.contains(x));
}

TEST_CASE("levy flight lengths have the requested tail exponent") {
  RngStream rng(19);
  const int n = 100000;
  std::vector<double> sizes(n);
  for (int i = 0; i < n; ++i)
    sizes[i] = std::abs(levy_step(rng, 1.5, 1)[0]);
  std::sort(sizes.begin(), sizes.end());

  // Hill estimator over the top 2000 order statistics.
  const int k = 2000;
  double sum = 0.0;
  const double threshold = sizes[n - k - 1];
  for (int i = n - k; i < n; ++i) sum += std::log(sizes[i] / threshold);
  const double tail = k / sum;
  CHECK(tail > 1.3);
  CHECK(tail < 1.7);
}

TEST_CASE("levy flight is reproducible and degenerates at beta = 2") {
  RngStream a(4), b(4);
  Point s1 = levy_step(a, 1.5, 6);
  Point s2 = levy_step(b, 1.5, 6);
  CHECK(s1 == s2);

  // Mantegna's sigma_u carries sin(pi beta / 2), which collapses to rounding
  // noise at beta = 2: steps shrink to ~1e-8 and the sample variance is
  // stable and tiny instead of heavy-tailed.
  RngStream c(9);
  double first = 0.0, second = 0.0;
  const int n = 1000;
  for (int i = 0; i < 2 * n; ++i) {
    Point s = levy_step(c, 2.0, 3);
    for (double v : s) (i < n ? first : second) += v * v;
  }
  CHECK(first / n < 1e-12);
  CHECK(second / n < 1e-12);
}

TEST_CASE("cuckoo search solves sphere and replays deterministically") {
  const auto& reg = FunctionRegistry::instance();
  const ObjectiveSpec& sphere = reg.get("sphere");

  EvalBudget budget(20000);
  RunTrace trace = cs_run(sphere, CsConfig{}, budget, 5, Target{0.0, 1e-6});
  CHECK(trace.status == RunStatus::solved);
  CHECK(trace.algorithm == "cs");
  check_trace_shape(trace);

  EvalBudget b2(20000);
  RunTrace replay = cs_run(sphere, CsConfig{}, b2, 5, Target{0.0, 1e-6});
  CHECK(replay.samples == trace.samples);
}

TEST_CASE("cuckoo search with pa = 0 never abandons a nest") {
  const auto& reg = FunctionRegistry::instance();
  auto log = std::make_shared<std::vector<Point>>();
  ObjectiveSpec spec = logging_spec(reg.get("sphere"), log);

  CsConfig config;
  config.pa = 0.0;
  config.levy_scale = 1e-300;  // proposals stay glued to their nests
  config.local_search_period = 1000000;

  const int m = config.n_nests;
  EvalBudget budget(m + 10 * m);
  cs_run(spec, config, budget, 21, Target{-1.0, 1e-6});

  REQUIRE(log->size() == std::size_t(m + 10 * m));
  std::vector<Point> initial(log->begin(), log->begin() + m);
  for (std::size_t i = m; i < log->size(); ++i)
    CHECK(min_distance_to((*log)[i], initial) < 1e-250);
}

TEST_CASE("cuckoo search abandonment introduces fresh uniform nests") {
  const auto& reg = FunctionRegistry::instance();
  auto log = std::make_shared<std::vector<Point>>();
  ObjectiveSpec spec = logging_spec(reg.get("sphere"), log);

  CsConfig config;
  config.levy_scale = 1e-300;
  config.local_search_period = 1000000;

  const int m = config.n_nests;
  const int per_loop = m + int(config.pa * m);
  EvalBudget budget(m + 10 * per_loop);
  cs_run(spec, config, budget, 21, Target{-1.0, 1e-6});

  // Each loop re-seeds floor(pa * m) = 6 nests far from the initial set, and
  // later proposals from re-seeded nests stay far as well.
  std::vector<Point> initial(log->begin(), log->begin() + m);
  int fresh = 0;
  for (std::size_t i = m; i < log->size(); ++i)
    if (min_distance_to((*log)[i], initial) > 1e-3) ++fresh;
  CHECK(fresh >= 10 * int(config.pa * m));
}

TEST_CASE("cuckoo search runs its first local search exactly at loop 100") {
  const auto& reg = FunctionRegistry::instance();
  auto log = std::make_shared<std::vector<Point>>();
  ObjectiveSpec spec = logging_spec(reg.get("sphere"), log);

  CsConfig config;
  config.pa = 0.0;
  config.levy_scale = 1e-300;

  const int m = config.n_nests;
  const std::size_t before_search = std::size_t(m) + 100 * std::size_t(m);
  EvalBudget budget(before_search + 40);
  cs_run(spec, config, budget, 13, Target{-1.0, 1e-6});

  std::vector<Point> initial(log->begin(), log->begin() + m);
  // Loops 1..100 only re-propose nest positions; the local search right after
  // loop 100 is the first read that leaves the initial nest set.
  for (std::size_t i = m; i < before_search; ++i)
    CHECK(min_distance_to((*log)[i], initial) < 1e-250);
  REQUIRE(log->size() > before_search + 1);
  bool moved = false;
  for (std::size_t i = before_search; i < log->size(); ++i)
    if (min_distance_to((*log)[i], initial) > 1e-6) moved = true;
  CHECK(moved);
}

TEST_CASE("differential evolution trial construction") {
  BoxDomain box = BoxDomain::cube(3, -100.0, 100.0);
  Point best = {1.0, 2.0, 3.0};
  Point current = {-5.0, -6.0, -7.0};
  Point a = {4.0, 0.0, 2.0};
  Point b = {1.0, 1.0, 1.0};

  // Full crossover reproduces the donor exactly.
  RngStream rng(2);
  Point trial = de_trial(best, current, a, b, 0.8, 1.0, box, rng);
  for (int n = 0; n < 3; ++n)
    CHECK(trial[n] == doctest::Approx(best[n] + 0.8 * (a[n] - b[n])));

  // Zero crossover keeps the parent except at the forced coordinate.
  for (int t = 0; t < 50; ++t) {
    Point tr = de_trial(best, current, a, b, 0.5, 0.0, box, rng);
    int changed = 0;
    for (int n = 0; n < 3; ++n)
      if (tr[n] != current[n]) {
        ++changed;
        CHECK(tr[n] == doctest::Approx(best[n] + 0.5 * (a[n] - b[n])));
      }
    CHECK(changed == 1);
  }

  // A fully collapsed population is a fixed point of mutation + crossover.
  Point p = {0.25, -0.5, 0.75};
  Point same = de_trial(p, p, p, p, 0.9, 0.7, box, rng);
  CHECK(same == p);

  // Donors outside the box are projected back in.
  Point far_best = {99.0, 0.0, 0.0};
  Point big_a = {100.0, 0.0, 0.0}, big_b = {-100.0, 0.0, 0.0};
  Point clipped = de_trial(far_best, current, big_a, big_b, 1.0, 1.0, box, rng);
  CHECK(clipped[0] == 100.0);
}

TEST_CASE("differential evolution solves sphere and replays deterministically") {
  const auto& reg = FunctionRegistry::instance();
  const ObjectiveSpec& sphere = reg.get("sphere");

  EvalBudget budget(20000);
  RunTrace trace = de_run(sphere, DeConfig{}, budget, 6, Target{0.0, 1e-6});
  CHECK(trace.status == RunStatus::solved);
  CHECK(trace.algorithm == "de");
  check_trace_shape(trace);

  EvalBudget b2(20000);
  RunTrace replay = de_run(sphere, DeConfig{}, b2, 6, Target{0.0, 1e-6});
  CHECK(replay.samples == trace.samples);
}

TEST_CASE("differential evolution respects the domain and the floor population") {
  const auto& reg = FunctionRegistry::instance();
  auto log = std::make_shared<std::vector<Point>>();
  ObjectiveSpec spec = logging_spec(reg.get("rastrigin2d"), log);

  EvalBudget budget(2000);
  RunTrace trace = de_run(spec, DeConfig{}, budget, 17, Target{-1.0, 1e-6});
  CHECK(trace.status == RunStatus::budget_exhausted);
  CHECK(log->size() == 2000);
  for (const Point& x : *log) CHECK(spec.domain.contains(x));
  REQUIRE(trace.samples.front().reads >= 1);
}

TEST_CASE("baseline runs without a target exhaust the budget") {
  const auto& reg = FunctionRegistry::instance();
  const ObjectiveSpec& ackley = reg.get("ackley");

  EvalBudget b1(1500);
  CHECK(bh_run(ackley, BhConfig{}, b1, 1, std::nullopt).status ==
        RunStatus::budget_exhausted);
  EvalBudget b2(1500);
  CHECK(cs_run(ackley, CsConfig{}, b2, 1, std::nullopt).status ==
        RunStatus::budget_exhausted);
  EvalBudget b3(1500);
  CHECK(de_run(ackley, DeConfig{}, b3, 1, std::nullopt).status ==
        RunStatus::budget_exhausted);
  CHECK(b1.used() == 1500);
  CHECK(b2.used() == 1500);
  CHECK(b3.used() == 1500);
}
