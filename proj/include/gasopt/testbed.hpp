#pragma once

#include <string>
#include <vector>

#include "gasopt/core.hpp"

namespace gasopt {

// Lennard-Jones potential of m particles in reduced units over the flattened
// coordinate vector (x1,y1,z1,...,xm,ym,zm). A coincident (or numerically
// collapsed) pair yields a +infinity sentinel instead of an error.
double lj_energy(std::span<const double> positions);
void lj_gradient(std::span<const double> positions, std::span<double> grad);

// d-dimensional Rastrigin, 10d + sum(x^2 - 10 cos 2 pi x).
double rastrigin(std::span<const double> x);
void rastrigin_gradient(std::span<const double> x, std::span<double> grad);

// The registry of the 31 benchmark objectives: 15 two-dimensional functions,
// Lennard-Jones clusters lj3..lj10, and rastrigin3..rastrigin10. Immutable
// after construction; evaluators are pure and safe to call concurrently.
class FunctionRegistry {
 public:
  static const FunctionRegistry& instance();

  const ObjectiveSpec& get(const std::string& name) const;
  bool contains(const std::string& name) const;

  // Target value for the halt criterion plus the representative minimizer
  // when one is stored.
  std::pair<double, std::optional<Point>> known_minimum(
      const std::string& name) const;

  // Per-function success tolerance. 1e-6 except for the entries whose
  // published targets are rounded prints (eggholder, mccormick, schaffer4).
  double success_tolerance(const std::string& name) const;

  // Registry order: the 15 two-dimensional functions, then lj3..lj10, then
  // rastrigin3..rastrigin10.
  const std::vector<std::string>& names() const { return order_; }

  // Machine-readable manifest: name, dimension, domain, target value,
  // success tolerance.
  std::string manifest_json() const;

 private:
  FunctionRegistry();

  struct Entry {
    ObjectiveSpec spec;
    double success_tolerance;
  };

  const Entry& entry(const std::string& name) const;

  std::vector<std::string> order_;
  std::vector<Entry> entries_;  // parallel to order_
};

}  // namespace gasopt
