#include "gasopt/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gasopt {

namespace {

std::string bh_config_json(const BhConfig& c) {
  nlohmann::ordered_json j;
  j["algo"] = "bh";
  j["step_size"] = c.step_size;
  j["temperature"] = c.temperature;
  j["adaptive_interval"] = c.adaptive_interval;
  j["local"] = {{"memory_pairs", c.local_opts.memory_pairs},
                {"max_iterations", c.local_opts.max_iterations},
                {"pg_tolerance", c.local_opts.pg_tolerance},
                {"fd_step", c.local_opts.fd_step}};
  return j.dump();
}

std::string cs_config_json(const CsConfig& c) {
  nlohmann::ordered_json j;
  j["algo"] = "cs";
  j["n_nests"] = c.n_nests;
  j["pa"] = c.pa;
  j["levy_beta"] = c.levy_beta;
  j["levy_scale"] = c.levy_scale;
  j["local_search_period"] = c.local_search_period;
  j["local"] = {{"memory_pairs", c.local_opts.memory_pairs},
                {"max_iterations", c.local_opts.max_iterations},
                {"pg_tolerance", c.local_opts.pg_tolerance},
                {"fd_step", c.local_opts.fd_step}};
  return j.dump();
}

std::string de_config_json(const DeConfig& c) {
  nlohmann::ordered_json j;
  j["algo"] = "de";
  j["pop_multiplier"] = c.pop_multiplier;
  j["strategy"] = "best1bin";
  j["mutation_min"] = c.mutation_min;
  j["mutation_max"] = c.mutation_max;
  j["crossover_rate"] = c.crossover_rate;
  return j.dump();
}

std::optional<double> target_value(const std::optional<Target>& t) {
  if (t) return t->value;
  return std::nullopt;
}

double target_tolerance(const std::optional<Target>& t) {
  return t ? t->tolerance : 1e-6;
}

Point uniform_point(const BoxDomain& domain, RngStream& rng) {
  Point x(domain.dimension());
  for (int n = 0; n < domain.dimension(); ++n)
    x[n] = domain.lower[n] + domain.length(n) * rng.uniform();
  return x;
}

}  // namespace

Point levy_step(RngStream& rng, double beta, int dimension) {
  const double num =
      std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                     std::pow(2.0, (beta - 1.0) / 2.0);
  const double sigma_u = std::pow(num / den, 1.0 / beta);
  Point step(dimension);
  for (int n = 0; n < dimension; ++n) {
    const double u = rng.normal(sigma_u);
    const double v = rng.normal(1.0);
    step[n] = u / std::pow(std::abs(v), 1.0 / beta);
  }
  return step;
}

bool metropolis_accept(double rise, double temperature, RngStream& rng) {
  if (rise <= 0.0) return true;
  return rng.uniform() < std::exp(-rise / temperature);
}

RunTrace bh_run(const ObjectiveSpec& spec, const BhConfig& config,
                EvalBudget& budget, std::uint64_t seed,
                std::optional<Target> target) {
  TraceRecorder recorder("bh", spec.name, seed, target_value(target),
                         target_tolerance(target));
  RngStream rng = RngStream(seed).child("bh");
  const BoxDomain& domain = spec.domain;
  const int d = spec.dimension;
  double step = config.step_size;
  Point best_x;
  double best_v = std::numeric_limits<double>::infinity();
  RunStatus status = RunStatus::budget_exhausted;
  try {
    LocalMinResult incumbent = minimize_bounded(
        spec, uniform_point(domain, rng), config.local_opts, budget, rng);
    recorder.record(budget.used(), incumbent.value);
    best_x = incumbent.x;
    best_v = incumbent.value;
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    while (!(target && recorder.solved())) {
      // minimize_bounded returns its best-so-far instead of throwing once
      // reads run out, so the hop loop must watch the budget itself.
      if (budget.exhausted()) throw BudgetExhausted{};
      Point cand = incumbent.x;
      for (int n = 0; n < d; ++n)
        cand[n] += step * domain.length(n) * (2.0 * rng.uniform() - 1.0);
      LocalMinResult trial =
          minimize_bounded(spec, project(std::move(cand), domain),
                           config.local_opts, budget, rng);
      recorder.record(budget.used(), trial.value);
      if (trial.value < best_v) {
        best_v = trial.value;
        best_x = trial.x;
      }
      ++proposals;
      if (metropolis_accept(trial.value - incumbent.value, config.temperature,
                            rng)) {
        incumbent = std::move(trial);
        ++accepted;
      }
      if (proposals % static_cast<std::uint64_t>(config.adaptive_interval) ==
          0) {
        const double rate =
            static_cast<double>(accepted) / static_cast<double>(proposals);
        if (rate > 0.5)
          step = std::min(step / 0.9, 1.0);
        else
          step *= 0.9;
      }
    }
    status = RunStatus::solved;
  } catch (const BudgetExhausted&) {
  }
  RunTrace trace =
      std::move(recorder).finish(status, bh_config_json(config));
  if (std::isfinite(best_v)) trace.best_position = std::move(best_x);
  return trace;
}

RunTrace cs_run(const ObjectiveSpec& spec, const CsConfig& config,
                EvalBudget& budget, std::uint64_t seed,
                std::optional<Target> target) {
  TraceRecorder recorder("cs", spec.name, seed, target_value(target),
                         target_tolerance(target));
  RngStream rng = RngStream(seed).child("cs");
  const BoxDomain& domain = spec.domain;
  const int d = spec.dimension;
  const int m = config.n_nests;
  const int abandoned = static_cast<int>(config.pa * m);
  Point best_x;
  double best_v = std::numeric_limits<double>::infinity();
  auto offer = [&](const Point& x, double v) {
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  };
  RunStatus status = RunStatus::budget_exhausted;
  try {
    std::vector<Point> nests(m);
    std::vector<double> values(m);
    for (int i = 0; i < m; ++i) {
      nests[i] = uniform_point(domain, rng);
      values[i] = counted_evaluate(spec, nests[i], budget);
      recorder.record(budget.used(), values[i]);
      offer(nests[i], values[i]);
    }
    std::uint64_t loop = 0;
    while (!(target && recorder.solved())) {
      ++loop;
      for (int i = 0; i < m; ++i) {
        const Point flight = levy_step(rng, config.levy_beta, d);
        Point cand = nests[i];
        for (int n = 0; n < d; ++n)
          cand[n] += config.levy_scale * domain.length(n) * flight[n];
        cand = project(std::move(cand), domain);
        const double value = counted_evaluate(spec, cand, budget);
        recorder.record(budget.used(), value);
        offer(cand, value);
        const std::size_t j = rng.pick(m);
        if (value < values[j]) {
          nests[j] = std::move(cand);
          values[j] = value;
        }
      }
      if (abandoned > 0) {
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::partial_sort(order.begin(), order.begin() + abandoned,
                          order.end(), [&](std::size_t a, std::size_t b) {
                            return values[a] > values[b];
                          });
        for (int k = 0; k < abandoned; ++k) {
          const std::size_t w = order[k];
          nests[w] = uniform_point(domain, rng);
          values[w] = counted_evaluate(spec, nests[w], budget);
          recorder.record(budget.used(), values[w]);
          offer(nests[w], values[w]);
        }
      }
      if (loop % static_cast<std::uint64_t>(config.local_search_period) == 0) {
        const std::size_t b = static_cast<std::size_t>(
            std::min_element(values.begin(), values.end()) - values.begin());
        LocalMinResult lm =
            minimize_bounded(spec, nests[b], config.local_opts, budget, rng);
        recorder.record(budget.used(), lm.value);
        offer(lm.x, lm.value);
        if (lm.value < values[b]) {
          nests[b] = std::move(lm.x);
          values[b] = lm.value;
        }
      }
    }
    status = RunStatus::solved;
  } catch (const BudgetExhausted&) {
  }
  RunTrace trace =
      std::move(recorder).finish(status, cs_config_json(config));
  if (std::isfinite(best_v)) trace.best_position = std::move(best_x);
  return trace;
}

Point de_trial(const Point& best, const Point& current, const Point& a,
               const Point& b, double mutation, double crossover_rate,
               const BoxDomain& domain, RngStream& rng) {
  const int d = domain.dimension();
  const std::size_t forced = rng.pick(static_cast<std::size_t>(d));
  Point trial(d);
  for (int n = 0; n < d; ++n) {
    const bool cross = rng.uniform() < crossover_rate;
    if (cross || static_cast<std::size_t>(n) == forced)
      trial[n] = best[n] + mutation * (a[n] - b[n]);
    else
      trial[n] = current[n];
  }
  return project(std::move(trial), domain);
}

RunTrace de_run(const ObjectiveSpec& spec, const DeConfig& config,
                EvalBudget& budget, std::uint64_t seed,
                std::optional<Target> target) {
  TraceRecorder recorder("de", spec.name, seed, target_value(target),
                         target_tolerance(target));
  RngStream rng = RngStream(seed).child("de");
  const BoxDomain& domain = spec.domain;
  const int np = std::max(config.pop_multiplier * spec.dimension, 20);
  Point best_x;
  double best_v = std::numeric_limits<double>::infinity();
  auto offer = [&](const Point& x, double v) {
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  };
  RunStatus status = RunStatus::budget_exhausted;
  try {
    std::vector<Point> pop(np);
    std::vector<double> values(np);
    for (int i = 0; i < np; ++i) {
      pop[i] = uniform_point(domain, rng);
      values[i] = counted_evaluate(spec, pop[i], budget);
      recorder.record(budget.used(), values[i]);
      offer(pop[i], values[i]);
    }
    while (!(target && recorder.solved())) {
      const std::size_t best = static_cast<std::size_t>(
          std::min_element(values.begin(), values.end()) - values.begin());
      const double mutation =
          config.mutation_min +
          (config.mutation_max - config.mutation_min) * rng.uniform();
      std::vector<Point> trials(np);
      std::vector<double> trial_values(np);
      for (int i = 0; i < np; ++i) {
        const std::size_t n = static_cast<std::size_t>(np);
        const std::size_t a = rng.pick_excluding(n, static_cast<std::size_t>(i));
        std::size_t b = rng.pick_excluding(n, static_cast<std::size_t>(i));
        while (b == a) b = rng.pick_excluding(n, static_cast<std::size_t>(i));
        trials[i] = de_trial(pop[best], pop[i], pop[a], pop[b], mutation,
                             config.crossover_rate, domain, rng);
        trial_values[i] = counted_evaluate(spec, trials[i], budget);
        recorder.record(budget.used(), trial_values[i]);
        offer(trials[i], trial_values[i]);
      }
      for (int i = 0; i < np; ++i) {
        if (trial_values[i] < values[i]) {
          pop[i] = std::move(trials[i]);
          values[i] = trial_values[i];
        }
      }
    }
    status = RunStatus::solved;
  } catch (const BudgetExhausted&) {
  }
  RunTrace trace =
      std::move(recorder).finish(status, de_config_json(config));
  if (std::isfinite(best_v)) trace.best_position = std::move(best_x);
  return trace;
}

}  // namespace gasopt
