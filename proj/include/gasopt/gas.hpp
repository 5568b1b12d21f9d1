#pragma once

#include <deque>
#include <optional>

#include "gasopt/core.hpp"
#include "gasopt/local_search.hpp"

namespace gasopt {

// A solve target: the run counts as solved when the best value comes within
// `tolerance` of `value`. Solvers that support a stability halt disable it
// while a target is set, so benchmark runs go to solution or budget.
struct Target {
  double value = 0.0;
  double tolerance = 1e-6;
};

struct GasConfig {
  int n_walkers = 50;              // swarm size N (>= 2: cloning needs a partner)
  int stability_window = 50;       // W loops averaged by the stability halt
  double stability_precision = 1e-6;
  Sense sense = Sense::minimize;
  LocalSearchOptions local_opts;
};

// Walker swarm: parallel arrays indexed by walker.
struct Swarm {
  std::vector<Point> positions;
  std::vector<double> values;  // f(x_i), refreshed once per loop
  std::vector<double> phis;    // scaled values in [0,1]
  std::vector<double> flows;   // diversity-weighted scores, see walker_flow
};

// Tabu memory: N stored local minima with their own flow-and-clone churn.
struct TabuList {
  std::vector<Point> memories;
  std::vector<double> values;
  std::vector<double> flows;
};

struct BestRecord {
  Point position;
  double value = std::numeric_limits<double>::infinity();
};

// Scales values to [0,1]: (v - min)/(max - min), all zeros when the values
// are all equal. Preserves arg-min and arg-max.
std::vector<double> scale_values(const std::vector<double>& values);

// Flow of a walker: (phi+1)^2 * d2 * delta2, with d2 the squared distance to
// a random partner walker and delta2 the squared distance to a random tabu
// memory.
double walker_flow(double phi, double d2, double delta2);

// Flow of a tabu memory: (phi+1)^2 * d2 to a random partner memory.
double tabu_flow(double phi_t, double d2);

// Probability that the agent with flow f_self copies the agent with flow
// f_other: 0 when f_other > f_self or f_self = 0, else
// min{1, (f_self - f_other)/f_self}. High-flow agents copy low-flow ones.
double clone_probability(double f_self, double f_other);

// Per-walker jump scale: phi maps fitness to mobility. Minimization uses
// 10^-(5-4 phi) in [1e-5, 1e-1]; maximization mirrors it as 10^-(1+4 phi).
double jump_scale(double phi, Sense sense);

// One flow-and-clone pass over the walkers: draws a partner j != i and a
// tabu index r per walker, computes flows, then applies all clone decisions
// simultaneously against the pre-pass flows. A clone copies position,
// value, phi, and flow. delta2 is forced to 1 when t_r equals x_i bitwise
// (a copied memory would otherwise zero the flow).
void flow_and_clone_pass(Swarm& swarm, const TabuList& tabu, RngStream& rng);

// Phi-weighted mean of walker positions (unweighted when all phi = 0),
// projected onto the domain.
Point center_of_mass(const Swarm& swarm, const BoxDomain& domain);

// Displaces each coordinate by length(n) * N(0, delta) with delta from
// jump_scale. On a domain violation the whole vector is redrawn with delta
// halved, until feasible.
Point perturb_position(const Point& x, double phi, const BoxDomain& domain,
                       Sense sense, RngStream& rng);

// Overwrites a uniformly chosen tabu slot with (t_new, f_new). List size
// never changes.
void memory_insert(TabuList& tabu, const Point& t_new, double f_new,
                   RngStream& rng);

// Memory flow-and-clone churn: per slot a partner s != r is drawn, used both
// for the flow distance and as the clone source; clones are applied
// simultaneously against the pre-pass flows.
void memory_churn(TabuList& tabu, RngStream& rng);

// The combined per-local-search memory update: insert, then churn.
void memory_insert_and_churn(TabuList& tabu, const Point& t_new, double f_new,
                             RngStream& rng);

// Full per-loop state. Child RNG streams are split per component so draws in
// one phase never shift another phase's sequence.
struct GasState {
  GasConfig config;
  Swarm swarm;
  TabuList tabu;
  BestRecord best;
  std::deque<double> best_history;  // loop-end best values, at most W kept
  std::uint64_t loops = 0;
  RngStream ties_rng, flow_rng, memory_rng, jump_rng, local_rng;

  GasState(const GasConfig& cfg, const RngStream& root)
      : config(cfg),
        ties_rng(root.child("ties")),
        flow_rng(root.child("flow")),
        memory_rng(root.child("memory")),
        jump_rng(root.child("jump")),
        local_rng(root.child("local")) {}
};

// Index of the smallest value; ties are broken uniformly at random (the
// random draw happens only on an actual tie).
std::size_t argmin_random_ties(const std::vector<double>& values,
                               RngStream& rng);

// Initialization: uniform walker placement, first evaluations, local search
// from the best walker, tabu list filled with its result, BEST set. Records
// the evaluations' running best into `recorder`.
GasState gas_init(const ObjectiveSpec& spec, const GasConfig& config,
                  EvalBudget& budget, std::uint64_t seed,
                  TraceRecorder& recorder);

enum class StepOutcome { running, solved, stability_halt };

// One loop: flow & clone, the two local searches (from the center of mass
// and from the best walker) feeding the tabu memory, BEST update and halt
// check, then the jump-based position update with re-evaluation.
// BudgetExhausted propagates; recorder state is preserved.
StepOutcome gas_step(GasState& state, const ObjectiveSpec& spec,
                     EvalBudget& budget, TraceRecorder& recorder);

// Complete run. The stability halt is active only when no target is given.
// Maximization negates the objective internally and reports values in the
// caller's sense.
RunTrace gas_run(const ObjectiveSpec& spec, const GasConfig& config,
                 EvalBudget& budget, std::uint64_t seed,
                 std::optional<Target> target);

}  // namespace gasopt
