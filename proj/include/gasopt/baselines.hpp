#pragma once

#include <cstdint>
#include <optional>

#include "gasopt/core.hpp"
#include "gasopt/gas.hpp"
#include "gasopt/local_search.hpp"

namespace gasopt {

// Basin Hopping: monotonic-sequence perturb / local-minimize / Metropolis
// loop with adaptive step sizing.
struct BhConfig {
  double step_size = 0.25;     // initial displacement, fraction of each L(n); in (0,1]
  double temperature = 1.0;    // Metropolis acceptance temperature
  int adaptive_interval = 50;  // iterations between step retargeting to 50% acceptance
  LocalSearchOptions local_opts;
};

// Cuckoo Search with Levy-flight proposals and a periodic local search.
struct CsConfig {
  int n_nests = 25;
  double pa = 0.25;            // fraction of worst nests abandoned per loop
  double levy_beta = 1.5;      // tail exponent of the flight lengths, in (1, 2]
  double levy_scale = 0.01;    // step scale, fraction of each L(n)
  int local_search_period = 100;  // loops between local searches from the best nest
  LocalSearchOptions local_opts;
};

enum class DeStrategy { best1bin };

// Differential Evolution, generational best/1/bin.
struct DeConfig {
  int pop_multiplier = 15;     // population = max(multiplier * d, 20)
  DeStrategy strategy = DeStrategy::best1bin;
  double mutation_min = 0.5;   // F dithered uniformly per generation
  double mutation_max = 1.0;
  double crossover_rate = 0.7;
};

// One heavy-tailed flight: per coordinate u/|v|^(1/beta) with u ~ N(0, sigma_u),
// v ~ N(0, 1) and sigma_u from Mantegna's formula. |step| has tail exponent
// beta. Note sigma_u nearly vanishes at the beta = 2 endpoint.
Point levy_step(RngStream& rng, double beta, int dimension);

// Metropolis rule: a drop (rise <= 0) is always accepted, a rise with
// probability exp(-rise / temperature). As temperature -> 0 every strict
// rise is rejected.
bool metropolis_accept(double rise, double temperature, RngStream& rng);

// Builds one best/1/bin trial vector: donor = best + mutation * (a - b),
// binomial crossover against `current` with one uniformly chosen forced
// coordinate, result projected into the domain.
Point de_trial(const Point& best, const Point& current, const Point& a,
               const Point& b, double mutation, double crossover_rate,
               const BoxDomain& domain, RngStream& rng);

// All three runners share the gas_run halt contract: solved when the best
// value comes within the target tolerance, otherwise budget exhaustion ends
// the run with the best-so-far preserved. No stability halt.
RunTrace bh_run(const ObjectiveSpec& spec, const BhConfig& config,
                EvalBudget& budget, std::uint64_t seed,
                std::optional<Target> target);

RunTrace cs_run(const ObjectiveSpec& spec, const CsConfig& config,
                EvalBudget& budget, std::uint64_t seed,
                std::optional<Target> target);

RunTrace de_run(const ObjectiveSpec& spec, const DeConfig& config,
                EvalBudget& budget, std::uint64_t seed,
                std::optional<Target> target);

}  // namespace gasopt
