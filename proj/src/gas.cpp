#include "gasopt/gas.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include <json.hpp>

namespace gasopt {

std::vector<double> scale_values(const std::vector<double>& values) {
  assert(!values.empty());
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  std::vector<double> phis(values.size(), 0.0);
  if (hi > lo)
    for (std::size_t i = 0; i < values.size(); ++i)
      phis[i] = (values[i] - lo) / (hi - lo);
  return phis;  // all zeros when the values are all equal
}

double walker_flow(double phi, double d2, double delta2) {
  return (phi + 1.0) * (phi + 1.0) * d2 * delta2;
}

double tabu_flow(double phi_t, double d2) {
  return (phi_t + 1.0) * (phi_t + 1.0) * d2;
}

double clone_probability(double f_self, double f_other) {
  if (f_other > f_self || f_self == 0.0) return 0.0;
  return std::min(1.0, (f_self - f_other) / f_self);
}

double jump_scale(double phi, Sense sense) {
  double exponent =
      sense == Sense::minimize ? -(5.0 - 4.0 * phi) : -(1.0 + 4.0 * phi);
  return std::pow(10.0, exponent);
}

void flow_and_clone_pass(Swarm& swarm, const TabuList& tabu, RngStream& rng) {
  const std::size_t n = swarm.positions.size();
  assert(n >= 2 && tabu.memories.size() >= 1);

  // Partner and tabu draws for every walker, then the flows.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = rng.pick_excluding(n, i);
    std::size_t r = rng.pick(tabu.memories.size());
    double d2 = squared_distance(swarm.positions[i], swarm.positions[j]);
    double delta2 =
        bitwise_equal(tabu.memories[r], swarm.positions[i])
            ? 1.0
            : squared_distance(swarm.positions[i], tabu.memories[r]);
    swarm.flows[i] = walker_flow(swarm.phis[i], d2, delta2);
  }

  // Clone decisions against the pre-pass flows, applied simultaneously.
  std::vector<std::size_t> source(n);
  std::vector<bool> clones(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = rng.pick_excluding(n, i);
    double p = clone_probability(swarm.flows[i], swarm.flows[k]);
    source[i] = k;
    clones[i] = rng.uniform() < p;
  }
  Swarm before = swarm;
  for (std::size_t i = 0; i < n; ++i) {
    if (!clones[i]) continue;
    std::size_t k = source[i];
    swarm.positions[i] = before.positions[k];
    swarm.values[i] = before.values[k];
    swarm.phis[i] = before.phis[k];
    swarm.flows[i] = before.flows[k];
  }
}

Point center_of_mass(const Swarm& swarm, const BoxDomain& domain) {
  const std::size_t n = swarm.positions.size();
  const std::size_t d = swarm.positions.front().size();
  double total = std::accumulate(swarm.phis.begin(), swarm.phis.end(), 0.0);
  Point cm(d, 0.0);
  if (total > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < d; ++c)
        cm[c] += swarm.phis[i] * swarm.positions[i][c];
    for (double& v : cm) v /= total;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < d; ++c) cm[c] += swarm.positions[i][c];
    for (double& v : cm) v /= static_cast<double>(n);
  }
  return project(std::move(cm), domain);
}

Point perturb_position(const Point& x, double phi, const BoxDomain& domain,
                       Sense sense, RngStream& rng) {
  double delta = jump_scale(phi, sense);
  Point candidate(x.size());
  while (true) {
    for (std::size_t n = 0; n < x.size(); ++n)
      candidate[n] = x[n] + domain.length(n) * rng.normal(delta);
    if (domain.contains(candidate)) return candidate;
    delta *= 0.5;  // shrink and redraw the whole vector
  }
}

void memory_insert(TabuList& tabu, const Point& t_new, double f_new,
                   RngStream& rng) {
  std::size_t slot = rng.pick(tabu.memories.size());
  tabu.memories[slot] = t_new;
  tabu.values[slot] = f_new;
}

void memory_churn(TabuList& tabu, RngStream& rng) {
  const std::size_t n = tabu.memories.size();
  assert(n >= 2);

  // One partner per memory, used both for the flow distance and as the
  // clone source.
  std::vector<double> phis = scale_values(tabu.values);
  std::vector<std::size_t> partner(n);
  for (std::size_t r = 0; r < n; ++r) {
    partner[r] = rng.pick_excluding(n, r);
    double d2 = squared_distance(tabu.memories[r], tabu.memories[partner[r]]);
    tabu.flows[r] = tabu_flow(phis[r], d2);
  }
  std::vector<bool> clones(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    double p = clone_probability(tabu.flows[r], tabu.flows[partner[r]]);
    clones[r] = rng.uniform() < p;
  }
  TabuList before = tabu;
  for (std::size_t r = 0; r < n; ++r) {
    if (!clones[r]) continue;
    std::size_t s = partner[r];
    tabu.memories[r] = before.memories[s];
    tabu.values[r] = before.values[s];
    tabu.flows[r] = before.flows[s];
  }
}

void memory_insert_and_churn(TabuList& tabu, const Point& t_new, double f_new,
                             RngStream& rng) {
  memory_insert(tabu, t_new, f_new, rng);
  memory_churn(tabu, rng);
}

std::size_t argmin_random_ties(const std::vector<double>& values,
                               RngStream& rng) {
  assert(!values.empty());
  double lo = *std::min_element(values.begin(), values.end());
  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == lo) minima.push_back(i);
  if (minima.size() == 1) return minima.front();
  return minima[rng.pick(minima.size())];
}

GasState gas_init(const ObjectiveSpec& spec, const GasConfig& config,
                  EvalBudget& budget, std::uint64_t seed,
                  TraceRecorder& recorder) {
  assert(config.n_walkers >= 2);
  RngStream root(seed);
  GasState state(config, root);
  const std::size_t n = static_cast<std::size_t>(config.n_walkers);
  const int d = spec.dimension;

  RngStream place = root.child("place");
  state.swarm.positions.resize(n);
  state.swarm.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point& x = state.swarm.positions[i];
    x.resize(d);
    for (int c = 0; c < d; ++c)
      x[c] = spec.domain.lower[c] + place.uniform() * spec.domain.length(c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    state.swarm.values[i] = counted_evaluate(spec, state.swarm.positions[i],
                                             budget);
    recorder.record(budget.used(), state.swarm.values[i]);
  }

  std::size_t i_min = argmin_random_ties(state.swarm.values, state.ties_rng);
  LocalMinResult star = minimize_bounded(spec, state.swarm.positions[i_min],
                                         config.local_opts, budget,
                                         state.local_rng);

  state.tabu.memories.assign(n, star.x);
  state.tabu.values.assign(n, star.value);
  state.tabu.flows.assign(n, 0.0);

  state.best.position = star.x;
  state.best.value = star.value;
  recorder.record(budget.used(), state.best.value);

  state.swarm.phis = scale_values(state.swarm.values);
  state.swarm.flows.assign(n, 0.0);
  return state;
}

StepOutcome gas_step(GasState& state, const ObjectiveSpec& spec,
                     EvalBudget& budget, TraceRecorder& recorder) {
  Swarm& swarm = state.swarm;
  const std::size_t n = swarm.positions.size();

  // Step 1: walker flow and cloning.
  flow_and_clone_pass(swarm, state.tabu, state.flow_rng);

  // Step 2: two local searches feed the tabu memory.
  Point x_cm = center_of_mass(swarm, spec.domain);
  std::size_t i_min = argmin_random_ties(swarm.values, state.ties_rng);

  LocalMinResult from_cm = minimize_bounded(spec, x_cm, state.config.local_opts,
                                            budget, state.local_rng);
  LocalMinResult from_min =
      minimize_bounded(spec, swarm.positions[i_min], state.config.local_opts,
                       budget, state.local_rng);
  // A non-finite value can only appear when the budget died before the
  // search's first evaluation; the run is about to end, keep the list clean.
  if (std::isfinite(from_cm.value))
    memory_insert_and_churn(state.tabu, from_cm.x, from_cm.value,
                            state.memory_rng);
  if (std::isfinite(from_min.value))
    memory_insert_and_churn(state.tabu, from_min.x, from_min.value,
                            state.memory_rng);

  // BEST is monotone: replaced only when the best tabu entry improves it.
  std::size_t tabu_min = static_cast<std::size_t>(
      std::min_element(state.tabu.values.begin(), state.tabu.values.end()) -
      state.tabu.values.begin());
  if (state.tabu.values[tabu_min] < state.best.value) {
    state.best.value = state.tabu.values[tabu_min];
    state.best.position = state.tabu.memories[tabu_min];
  }
  recorder.record(budget.used(), state.best.value);

  // Halt checks. The stability halt compares BEST against its mean over the
  // preceding W loops and stays off in target mode.
  if (recorder.has_target()) {
    if (recorder.solved()) return StepOutcome::solved;
  } else {
    const std::size_t w =
        static_cast<std::size_t>(state.config.stability_window);
    if (state.best_history.size() >= w) {
      double mean = std::accumulate(state.best_history.begin(),
                                    state.best_history.end(), 0.0) /
                    static_cast<double>(state.best_history.size());
      if (std::abs(state.best.value - mean) < state.config.stability_precision)
        return StepOutcome::stability_halt;
    }
  }
  state.best_history.push_back(state.best.value);
  if (state.best_history.size() >
      static_cast<std::size_t>(state.config.stability_window))
    state.best_history.pop_front();

  // Step 3: jump-based position update, then one evaluation per walker.
  for (std::size_t i = 0; i < n; ++i)
    swarm.positions[i] =
        perturb_position(swarm.positions[i], swarm.phis[i], spec.domain,
                         state.config.sense, state.jump_rng);
  for (std::size_t i = 0; i < n; ++i)
    swarm.values[i] = counted_evaluate(spec, swarm.positions[i], budget);
  swarm.phis = scale_values(swarm.values);

  ++state.loops;
  return StepOutcome::running;
}

namespace {

std::string gas_config_json(const GasConfig& c) {
  nlohmann::ordered_json j;
  j["algo"] = "gas";
  j["n_walkers"] = c.n_walkers;
  j["stability_window"] = c.stability_window;
  j["stability_precision"] = c.stability_precision;
  j["sense"] = c.sense == Sense::minimize ? "minimize" : "maximize";
  j["local"] = {{"memory_pairs", c.local_opts.memory_pairs},
                {"max_iterations", c.local_opts.max_iterations},
                {"pg_tolerance", c.local_opts.pg_tolerance},
                {"fd_step", c.local_opts.fd_step}};
  return j.dump();
}

// Maximization runs the minimizer on -f; phi values flip as 1-phi, which
// turns the minimization jump formula into the maximization one, so no other
// part of the loop needs a sense switch.
ObjectiveSpec negated(const ObjectiveSpec& spec) {
  ObjectiveSpec neg = spec;
  auto f = spec.evaluate;
  neg.evaluate = [f](std::span<const double> x) { return -f(x); };
  if (spec.has_gradient()) {
    auto g = spec.gradient;
    neg.gradient = [g](std::span<const double> x, std::span<double> out) {
      g(x, out);
      for (double& v : out) v = -v;
    };
  }
  neg.known_min_value = -spec.known_min_value;
  return neg;
}

}  // namespace

RunTrace gas_run(const ObjectiveSpec& spec, const GasConfig& config,
                 EvalBudget& budget, std::uint64_t seed,
                 std::optional<Target> target) {
  const bool maximize = config.sense == Sense::maximize;
  ObjectiveSpec work = maximize ? negated(spec) : spec;
  GasConfig work_config = config;
  work_config.sense = Sense::minimize;
  std::optional<double> goal;
  double tolerance = 1e-6;
  if (target) {
    goal = maximize ? -target->value : target->value;
    tolerance = target->tolerance;
  }

  TraceRecorder recorder("gas", spec.name, seed, goal, tolerance);
  RunStatus fallback = RunStatus::budget_exhausted;
  std::optional<GasState> state;
  try {
    state.emplace(gas_init(work, work_config, budget, seed, recorder));
    while (true) {
      StepOutcome outcome = gas_step(*state, work, budget, recorder);
      if (outcome == StepOutcome::solved) break;
      if (outcome == StepOutcome::stability_halt) {
        fallback = RunStatus::stability_halt;
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    fallback = RunStatus::budget_exhausted;
  }

  RunTrace trace = std::move(recorder).finish(fallback, gas_config_json(config));
  if (maximize)
    for (TraceSample& s : trace.samples) s.best_value = -s.best_value;
  if (state && !state->best.position.empty())
    trace.best_position = std::move(state->best.position);
  return trace;
}

}  // namespace gasopt
