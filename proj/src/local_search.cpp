#include "gasopt/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace gasopt {

namespace {

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

// Gradient components pressing against an active bound are zeroed so the
// quasi-Newton model only sees the free subspace.
Point masked_gradient(const Point& x, const Point& g, const BoxDomain& dom) {
  Point m = g;
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (x[n] <= dom.lower[n] && g[n] > 0.0) m[n] = 0.0;
    if (x[n] >= dom.upper[n] && g[n] < 0.0) m[n] = 0.0;
  }
  return m;
}

struct CurvaturePair {
  Point s;
  Point y;
  double rho;  // 1 / (s . y)
};

// Standard two-loop recursion: returns an approximation of H^{-1} g.
Point two_loop(const std::deque<CurvaturePair>& mem, const Point& g) {
  Point q = g;
  std::vector<double> alpha(mem.size());
  for (std::size_t i = mem.size(); i-- > 0;) {
    alpha[i] = mem[i].rho * dot(mem[i].s, q);
    for (std::size_t n = 0; n < q.size(); ++n)
      q[n] -= alpha[i] * mem[i].y[n];
  }
  const auto& last = mem.back();
  double gamma = dot(last.s, last.y) / dot(last.y, last.y);
  for (double& v : q) v *= gamma;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    double beta = mem[i].rho * dot(mem[i].y, q);
    for (std::size_t n = 0; n < q.size(); ++n)
      q[n] += (alpha[i] - beta) * mem[i].s[n];
  }
  return q;
}

}  // namespace

Point project(Point x, const BoxDomain& domain) {
  for (std::size_t n = 0; n < x.size(); ++n)
    x[n] = std::clamp(x[n], domain.lower[n], domain.upper[n]);
  return x;
}

Point fd_gradient(const ObjectiveSpec& spec, std::span<const double> x,
                  EvalBudget& budget, double fd_step) {
  const std::size_t d = x.size();
  Point grad(d), probe(x.begin(), x.end());
  for (std::size_t n = 0; n < d; ++n) {
    double h = fd_step * std::max(1.0, std::abs(x[n]));
    double hp = std::min(h, spec.domain.upper[n] - x[n]);
    double hm = std::min(h, x[n] - spec.domain.lower[n]);
    probe[n] = x[n] + hp;
    double fp = counted_evaluate(spec, probe, budget);
    probe[n] = x[n] - hm;
    double fm = counted_evaluate(spec, probe, budget);
    probe[n] = x[n];
    grad[n] = (fp - fm) / (hp + hm);
  }
  return grad;
}

LocalMinResult minimize_bounded(const ObjectiveSpec& spec,
                                std::span<const double> x0,
                                const LocalSearchOptions& opts,
                                EvalBudget& budget, RngStream& rng) {
  (void)rng;
  constexpr double kArmijoC = 1e-4;
  constexpr double kCurvatureMin = 1e-10;

  const std::uint64_t reads_before = budget.used();
  LocalMinResult result;
  result.x = project(Point(x0.begin(), x0.end()), spec.domain);

  auto gradient_at = [&](const Point& x) {
    if (spec.has_gradient()) {
      Point g(x.size());
      spec.gradient(x, g);
      return g;
    }
    return fd_gradient(spec, x, budget, opts.fd_step);
  };

  try {
    Point x = result.x;
    double f = counted_evaluate(spec, x, budget);
    result.x = x;
    result.value = f;

    Point g = gradient_at(x);
    std::deque<CurvaturePair> memory;

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
      if (!all_finite(g)) break;

      // Stop on the projected gradient: x - P(x - g).
      double pg = 0.0;
      for (std::size_t n = 0; n < x.size(); ++n) {
        double moved = std::clamp(x[n] - g[n], spec.domain.lower[n],
                                  spec.domain.upper[n]);
        pg = std::max(pg, std::abs(x[n] - moved));
      }
      if (pg <= opts.pg_tolerance) {
        result.converged = true;
        break;
      }

      Point gm = masked_gradient(x, g, spec.domain);
      Point dir;
      if (memory.empty()) {
        dir = gm;
        for (double& v : dir) v = -v;
      } else {
        dir = two_loop(memory, gm);
        for (double& v : dir) v = -v;
        if (!all_finite(dir) || dot(dir, gm) >= 0.0) {
          dir = gm;  // fall back to steepest descent
          for (double& v : dir) v = -v;
        }
      }

      // Backtracking Armijo search along the projected path.
      double t = memory.empty()
                     ? std::min(1.0, 1.0 / std::max(1.0, inf_norm(gm)))
                     : 1.0;
      Point xt;
      double ft = 0.0;
      bool accepted = false;
      for (int back = 0; back < 60; ++back) {
        xt.assign(x.begin(), x.end());
        for (std::size_t n = 0; n < x.size(); ++n)
          xt[n] = std::clamp(x[n] + t * dir[n], spec.domain.lower[n],
                             spec.domain.upper[n]);
        if (xt == x) break;  // projection erased the step
        ft = counted_evaluate(spec, xt, budget);
        double slope = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n)
          slope += g[n] * (xt[n] - x[n]);
        if (ft <= f + kArmijoC * slope && ft < f) {
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) break;  // best-so-far exit, e.g. non-smooth objectives

      Point g_new = gradient_at(xt);
      Point s(x.size()), y(x.size());
      for (std::size_t n = 0; n < x.size(); ++n) {
        s[n] = xt[n] - x[n];
        y[n] = g_new[n] - g[n];
      }
      double sy = dot(s, y);
      if (sy > kCurvatureMin && all_finite(y)) {
        memory.push_back({std::move(s), std::move(y), 1.0 / sy});
        if (memory.size() > static_cast<std::size_t>(opts.memory_pairs))
          memory.pop_front();
      } else {
        memory.clear();  // curvature breakdown: restart the model
      }

      x = std::move(xt);
      f = ft;
      g = std::move(g_new);
      result.x = x;
      result.value = f;
    }
  } catch (const BudgetExhausted&) {
    result.converged = false;
  }

  result.reads_used = budget.used() - reads_before;
  return result;
}

}  // namespace gasopt
