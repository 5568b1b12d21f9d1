#include <doctest.h>

#include <cmath>
#include <vector>

#include "gasopt/local_search.hpp"
#include "gasopt/testbed.hpp"

using namespace gasopt;

TEST_CASE("project clamps componentwise") {
  BoxDomain box = BoxDomain::cube(2, -10.0, 10.0);
  CHECK(project({11.0, 0.0}, box) == Point{10.0, 0.0});
  CHECK(project({3.0, -4.0}, box) == Point{3.0, -4.0});
  BoxDomain r = BoxDomain::cube(2, -5.12, 5.12);
  CHECK(project({-6.0, 6.0}, r) == Point{-5.12, 5.12});
}

TEST_CASE("fd_gradient matches simple analytic gradients") {
  const auto& reg = FunctionRegistry::instance();
  EvalBudget budget(1000);

  Point g = fd_gradient(reg.get("sphere"), Point{1.0, 2.0}, budget);
  CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(g[1] == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(budget.used() == 4);  // two reads per dimension

  g = fd_gradient(reg.get("matyas"), Point{0.0, 0.0}, budget);
  CHECK(std::abs(g[0]) < 1e-6);
  CHECK(std::abs(g[1]) < 1e-6);
}

TEST_CASE("fd_gradient cross-checks the cluster gradient") {
  const auto& spec = FunctionRegistry::instance().get("lj3");
  RngStream rng(17);
  Point x(9);
  for (double& v : x) v = -0.9 + 1.8 * rng.uniform();
  // Spread the particles so the configuration is far from singular.
  x[3] += 0.9;
  x[7] += 0.9;

  EvalBudget budget(100);
  Point fd = fd_gradient(spec, x, budget);
  Point exact(9);
  lj_gradient(x, exact);
  for (int n = 0; n < 9; ++n) {
    double scale = std::max(1.0, std::abs(exact[n]));
    CHECK(std::abs(fd[n] - exact[n]) / scale < 1e-5);
  }
}

TEST_CASE("fd_gradient shortens steps at the walls") {
  const auto& spec = FunctionRegistry::instance().get("sphere");
  EvalBudget budget(100);
  // At the corner the forward step has zero room; a one-sided difference
  // must still produce the right slope.
  Point g = fd_gradient(spec, Point{100.0, 0.0}, budget);
  CHECK(g[0] == doctest::Approx(200.0).epsilon(1e-5));
  CHECK(std::abs(g[1]) < 1e-6);
}

TEST_CASE("minimize_bounded solves the classic starts") {
  const auto& reg = FunctionRegistry::instance();
  RngStream rng(1);

  SUBCASE("sphere from (3,4)") {
    EvalBudget budget(100000);
    auto r = minimize_bounded(reg.get("sphere"), Point{3.0, 4.0}, {}, budget,
                              rng);
    CHECK(r.converged);
    CHECK(std::abs(r.x[0]) < 1e-6);
    CHECK(std::abs(r.x[1]) < 1e-6);
    CHECK(r.value <= 1e-12);
  }

  SUBCASE("rosenbrock from (-1.2, 1)") {
    EvalBudget budget(100000);
    auto r = minimize_bounded(reg.get("rosenbrock2d"), Point{-1.2, 1.0}, {},
                              budget, rng);
    CHECK(r.value <= 1e-8);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("minimum on an active bound converges with zero projected gradient") {
  ObjectiveSpec spec;
  spec.name = "shifted_square";
  spec.dimension = 1;
  spec.evaluate = [](std::span<const double> x) { return x[0] * x[0]; };
  spec.gradient = [](std::span<const double> x, std::span<double> g) {
    g[0] = 2.0 * x[0];
  };
  spec.domain = BoxDomain::cube(1, 1.0, 2.0);

  EvalBudget budget(1000);
  RngStream rng(2);
  auto r = minimize_bounded(spec, Point{1.5}, {}, budget, rng);
  CHECK(r.converged);
  CHECK(r.x[0] == 1.0);  // exactly on the bound
  CHECK(r.value == 1.0);
}

TEST_CASE("positive-definite quadratics are solved to high accuracy") {
  RngStream rng(77);
  for (int d : {2, 5, 10}) {
    // f(x) = sum c_n (x_n - m_n)^2 with random curvatures and minimizer.
    std::vector<double> c(d), m(d);
    for (int n = 0; n < d; ++n) {
      c[n] = 0.5 + 4.5 * rng.uniform();
      m[n] = -5.0 + 10.0 * rng.uniform();
    }
    ObjectiveSpec spec;
    spec.name = "quadratic";
    spec.dimension = d;
    spec.evaluate = [c, m](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t n = 0; n < x.size(); ++n)
        s += c[n] * (x[n] - m[n]) * (x[n] - m[n]);
      return s;
    };
    spec.gradient = [c, m](std::span<const double> x, std::span<double> g) {
      for (std::size_t n = 0; n < x.size(); ++n)
        g[n] = 2.0 * c[n] * (x[n] - m[n]);
    };
    spec.domain = BoxDomain::cube(d, -10.0, 10.0);

    LocalSearchOptions opts;
    opts.max_iterations = 100;
    EvalBudget budget(100000);
    Point start(d, 8.0);
    auto r = minimize_bounded(spec, start, opts, budget, rng);
    CHECK(r.converged);
    for (int n = 0; n < d; ++n)
      CHECK(std::abs(r.x[n] - m[n]) < 1e-8);
  }
}

TEST_CASE("result never exceeds the start value and stays in the domain") {
  const auto& reg = FunctionRegistry::instance();
  RngStream rng(31);
  for (const auto& name : {"ackley", "eggholder", "schaffer4", "levy13",
                           "lj4", "rastrigin5"}) {
    const auto& spec = reg.get(name);
    for (int trial = 0; trial < 5; ++trial) {
      Point x0(spec.dimension);
      for (int n = 0; n < spec.dimension; ++n)
        x0[n] = spec.domain.lower[n] + rng.uniform() * spec.domain.length(n);
      EvalBudget budget(100000);
      double f0 = spec.evaluate(x0);
      auto r = minimize_bounded(spec, x0, {}, budget, rng);
      INFO(name << " trial " << trial);
      CHECK(r.value <= f0);
      CHECK(spec.domain.contains(r.x));
      CHECK(r.reads_used == budget.used());
      CHECK(r.value == doctest::Approx(spec.evaluate(r.x)));
    }
  }
}

TEST_CASE("an exhausted budget yields best-so-far without throwing") {
  const auto& spec = FunctionRegistry::instance().get("rosenbrock2d");
  RngStream rng(4);
  EvalBudget budget(5);
  auto r = minimize_bounded(spec, Point{-1.2, 1.0}, {}, budget, rng);
  CHECK_FALSE(r.converged);
  CHECK(budget.exhausted());
  CHECK(r.reads_used == 5);
  CHECK(spec.domain.contains(r.x));
  CHECK(r.value < std::numeric_limits<double>::infinity());

  // Zero budget: nothing can even be evaluated.
  EvalBudget empty(0);
  auto r2 = minimize_bounded(spec, Point{0.0, 0.0}, {}, empty, rng);
  CHECK_FALSE(r2.converged);
  CHECK(r2.reads_used == 0);
  CHECK(std::isinf(r2.value));
}

TEST_CASE("analytic gradients cost no reads") {
  const auto& reg = FunctionRegistry::instance();
  const auto& with_grad = reg.get("sphere");

  ObjectiveSpec no_grad = with_grad;
  no_grad.gradient = nullptr;

  RngStream rng(9);
  EvalBudget b1(100000), b2(100000);
  auto r1 = minimize_bounded(with_grad, Point{3.0, 4.0}, {}, b1, rng);
  auto r2 = minimize_bounded(no_grad, Point{3.0, 4.0}, {}, b2, rng);
  CHECK(r1.converged);
  CHECK(r2.converged);
  // The finite-difference variant pays 2d reads per gradient; the analytic
  // variant pays only for line-search evaluations.
  CHECK(b1.used() < b2.used());
}
