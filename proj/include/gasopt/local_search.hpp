#pragma once

#include "gasopt/core.hpp"

namespace gasopt {

struct LocalSearchOptions {
  int memory_pairs = 10;       // limited-memory history size
  int max_iterations = 200;
  double pg_tolerance = 1e-9;  // projected-gradient infinity-norm stop
  double fd_step = 1e-8;       // central-difference step, scaled by max(1,|x|)
};

struct LocalMinResult {
  Point x;
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t reads_used = 0;
  bool converged = false;
};

// Componentwise clamp onto the box.
Point project(Point x, const BoxDomain& domain);

// Central-difference gradient, 2d reads. Steps are shortened at the walls
// (one-sided difference when a bound is closer than the step).
Point fd_gradient(const ObjectiveSpec& spec, std::span<const double> x,
                  EvalBudget& budget, double fd_step = 1e-8);

// Bound-constrained local minimizer: limited-memory BFGS directions with
// gradient projection and a backtracking Armijo line search. Uses the
// objective's analytic gradient when present (uncounted), otherwise counted
// central differences. If the budget runs out mid-search, returns the best
// point found so far with converged=false instead of propagating.
// `rng` is reserved for stochastic restarts and currently unused.
LocalMinResult minimize_bounded(const ObjectiveSpec& spec,
                                std::span<const double> x0,
                                const LocalSearchOptions& opts,
                                EvalBudget& budget, RngStream& rng);

}  // namespace gasopt
