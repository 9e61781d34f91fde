#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qwit/statesim.hpp"

namespace qwit {

struct QaoaOptimum {
  QaoaParams params;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Maximizes <W> over depth-p angles with multi-start Nelder-Mead from
/// uniform starts in [0, pi)^{2p}. Start i uses derive_seed(seed, i).
QaoaOptimum maximize_qaoa(const ProblemHamiltonian& h, const Observable& obs, std::size_t depth,
                          std::size_t starts, std::uint64_t seed);

/// `steps` evenly spaced points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, std::size_t steps);

}  // namespace qwit
