#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gasopt {

using Point = std::vector<double>;

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("function-read budget exhausted") {}
};

struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownFunction : std::runtime_error {
  explicit UnknownFunction(const std::string& name)
      : std::runtime_error("unknown objective: " + name) {}
};

struct UnknownAlgorithm : std::runtime_error {
  explicit UnknownAlgorithm(const std::string& name)
      : std::runtime_error("unknown algorithm: " + name) {}
};

// Axis-aligned compact search box. lower[n] < upper[n] for every dimension.
struct BoxDomain {
  std::vector<double> lower;
  std::vector<double> upper;

  BoxDomain() = default;
  BoxDomain(std::vector<double> lo, std::vector<double> hi);

  // Uniform box [lo, hi]^d.
  static BoxDomain cube(int dim, double lo, double hi);

  int dimension() const { return static_cast<int>(lower.size()); }
  double length(int n) const { return upper[n] - lower[n]; }
  bool contains(std::span<const double> x) const;
};

enum class Sense { minimize, maximize };

// A named objective with its box domain and known global minimum.
// `evaluate` must be pure and callable concurrently; `gradient` is optional
// (empty std::function when absent) and writes into a caller-provided span.
struct ObjectiveSpec {
  std::string name;
  int dimension = 0;
  std::function<double(std::span<const double>)> evaluate;
  std::function<void(std::span<const double>, std::span<double>)> gradient;
  BoxDomain domain;
  double known_min_value = 0.0;
  std::optional<Point> known_min_position;
  Sense sense = Sense::minimize;

  bool has_gradient() const { return static_cast<bool>(gradient); }
};

// Counts scalar objective evaluations against a hard limit. One unit per
// counted_evaluate call; gradient calls are not charged here.
class EvalBudget {
 public:
  explicit EvalBudget(std::uint64_t limit) : limit_(limit) {}

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return limit_ - used_; }
  bool exhausted() const { return used_ >= limit_; }

  // Throws BudgetExhausted if the limit was already reached.
  void charge() {
    if (used_ >= limit_) throw BudgetExhausted{};
    ++used_;
  }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

double counted_evaluate(const ObjectiveSpec& spec, std::span<const double> x,
                        EvalBudget& budget);

// Deterministic counter-style generator (splitmix64 core). Child streams are
// derived from the stream's key, not its consumed state, so draws in one
// component never shift another component's sequence.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t key() const { return key_; }

  RngStream child(std::string_view label) const;
  RngStream child(std::uint64_t index) const;

  std::uint64_t next_u64();

  // Uniform double in [0, 1).
  double uniform();

  // N(0, sigma) with sigma the standard deviation. Box-Muller, two uniforms
  // per draw.
  double normal(double sigma);

  // Uniform integer in [0, n). n must be positive.
  std::size_t pick(std::size_t n);

  // Uniform integer in [0, n) excluding `skip`. Requires n >= 2.
  std::size_t pick_excluding(std::size_t n, std::size_t skip);

 private:
  std::uint64_t key_;
  std::uint64_t state_;
};

// Derives the per-run seed used by concurrent benchmark runs from a base seed
// and run index. Runs for smaller T are a prefix of runs for larger T.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t run_index);

enum class RunStatus { solved, budget_exhausted, stability_halt };

std::string_view to_string(RunStatus s);

struct TraceSample {
  std::uint64_t reads = 0;
  double best_value = 0.0;

  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

// Time series of (reads consumed, best value so far) for one solver run.
// Samples are strictly increasing in reads and non-increasing in best value.
struct RunTrace {
  std::string algorithm;
  std::string objective;
  std::uint64_t seed = 0;
  std::vector<TraceSample> samples;
  RunStatus status = RunStatus::budget_exhausted;
  std::optional<std::uint64_t> solved_at_reads;
  std::string config_json;
  std::optional<Point> best_position;  // argument of the final best value

  double final_best() const {
    return samples.empty() ? std::numeric_limits<double>::infinity()
                           : samples.back().best_value;
  }
};

// Shared bookkeeping for all solvers: keeps the best-so-far monotone, appends
// trace samples on improvement, and detects the first read count at which
// |best - target| <= tolerance.
class TraceRecorder {
 public:
  TraceRecorder(std::string algorithm, std::string objective,
                std::uint64_t seed, std::optional<double> target,
                double tolerance);

  // Reports a candidate best value observed after `reads` total reads.
  void record(std::uint64_t reads, double value);

  double best() const { return best_; }
  bool has_target() const { return target_.has_value(); }
  bool solved() const { return solved_at_.has_value(); }

  // Finalizes and returns the trace. `fallback_status` is used unless the
  // target was reached.
  RunTrace finish(RunStatus fallback_status, std::string config_json) &&;

 private:
  RunTrace trace_;
  double best_ = std::numeric_limits<double>::infinity();
  std::optional<double> target_;
  double tolerance_;
  std::optional<std::uint64_t> solved_at_;
};

// Small vector helpers shared by the solvers.
double squared_distance(std::span<const double> a, std::span<const double> b);
double dot(std::span<const double> a, std::span<const double> b);
double inf_norm(std::span<const double> v);
bool bitwise_equal(std::span<const double> a, std::span<const double> b);

}  // namespace gasopt
