#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qwit {

using Objective = std::function<double(std::span<const double>)>;

struct OptimumResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead simplex ascent. Stops when the simplex values span less than
/// `tolerance` and its diameter is below sqrt(tolerance), or after
/// `max_evaluations` calls.
OptimumResult nelder_mead_maximize(const Objective& f, std::vector<double> start, double step,
                                   double tolerance = 1e-12, std::size_t max_evaluations = 20000);

struct GridRefineOptions {
  double lo0 = 0.0, hi0 = 0.0;
  double lo1 = 0.0, hi1 = 0.0;
  std::size_t steps = 201;       // per axis, half-open [lo, hi)
  std::size_t refine_starts = 8;  // best grid points handed to the simplex
  double tolerance = 1e-12;
};

/// Coarse grid over a 2-D box followed by simplex refinement from the best
/// grid points. The result is the best value seen anywhere.
OptimumResult grid_refine_maximize(const std::function<double(double, double)>& f,
                                   const GridRefineOptions& options);

}  // namespace qwit
