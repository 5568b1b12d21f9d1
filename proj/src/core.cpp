#include "gasopt/core.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gasopt {

BoxDomain::BoxDomain(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size())
    throw std::invalid_argument("BoxDomain: bound size mismatch");
  for (std::size_t n = 0; n < lower.size(); ++n)
    if (!(lower[n] < upper[n]))
      throw std::invalid_argument("BoxDomain: lower must be < upper");
}

BoxDomain BoxDomain::cube(int dim, double lo, double hi) {
  return BoxDomain(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool BoxDomain::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t n = 0; n < x.size(); ++n)
    if (x[n] < lower[n] || x[n] > upper[n]) return false;
  return true;
}

double counted_evaluate(const ObjectiveSpec& spec, std::span<const double> x,
                        EvalBudget& budget) {
  if (!spec.domain.contains(x)) {
    std::ostringstream msg;
    msg << spec.name << ": point outside the search domain";
    throw OutOfDomain(msg.str());
  }
  budget.charge();
  return spec.evaluate(x);
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t hash_label(std::string_view label) {
  // FNV-1a
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed)
    : key_(mix64(seed + kGolden)), state_(key_) {}

RngStream RngStream::child(std::string_view label) const {
  return RngStream(key_ ^ hash_label(label));
}

RngStream RngStream::child(std::uint64_t index) const {
  return RngStream(key_ ^ mix64(index + kGolden));
}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal(double sigma) {
  assert(sigma > 0.0);
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  return sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t RngStream::pick(std::size_t n) {
  assert(n > 0);
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

std::size_t RngStream::pick_excluding(std::size_t n, std::size_t skip) {
  assert(n >= 2 && skip < n);
  std::size_t i = pick(n - 1);
  return i >= skip ? i + 1 : i;
}

std::uint64_t derive_run_seed(std::uint64_t base_seed,
                              std::uint64_t run_index) {
  return RngStream(base_seed).child(run_index).key();
}

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::solved: return "solved";
    case RunStatus::budget_exhausted: return "budget_exhausted";
    case RunStatus::stability_halt: return "stability_halt";
  }
  return "unknown";
}

TraceRecorder::TraceRecorder(std::string algorithm, std::string objective,
                             std::uint64_t seed, std::optional<double> target,
                             double tolerance)
    : target_(target), tolerance_(tolerance) {
  trace_.algorithm = std::move(algorithm);
  trace_.objective = std::move(objective);
  trace_.seed = seed;
}

void TraceRecorder::record(std::uint64_t reads, double value) {
  if (!(value < best_)) return;
  best_ = value;
  if (!trace_.samples.empty() && trace_.samples.back().reads == reads)
    trace_.samples.back().best_value = value;
  else
    trace_.samples.push_back({reads, value});
  if (target_ && !solved_at_ && std::abs(best_ - *target_) <= tolerance_)
    solved_at_ = reads;
}

RunTrace TraceRecorder::finish(RunStatus fallback_status,
                               std::string config_json) && {
  trace_.status = solved_at_ ? RunStatus::solved : fallback_status;
  trace_.solved_at_reads = solved_at_;
  trace_.config_json = std::move(config_json);
  return std::move(trace_);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    double diff = a[n] - b[n];
    s += diff * diff;
  }
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += a[n] * b[n];
  return s;
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t n = 0; n < a.size(); ++n)
    if (std::bit_cast<std::uint64_t>(a[n]) !=
        std::bit_cast<std::uint64_t>(b[n]))
      return false;
  return true;
}

}  // namespace gasopt
