#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

namespace qwit {

/// A sample counts as detected when <W> > |E_k| + tolerance. The slack keeps
/// values that equal the bound in exact arithmetic (e.g. <X^N> = 1) out.
inline constexpr double kDetectionTolerance = 1e-9;

struct PotencyOptions {
  bool two_sided = false;  // also count <W> < -|E_k|
  double tolerance = kDetectionTolerance;
  bool keep_samples = false;
};

struct PotencySample {
  std::vector<double> gammas;
  std::vector<double> betas;
  double expectation = 0.0;
  bool detected = false;
};

struct PotencyEstimate {
  double fraction = 0.0;
  std::size_t samples = 0;
  std::size_t detected = 0;
  double std_error = 0.0;  // sqrt(f (1 - f) / n)
  std::uint64_t seed = 0;
  std::string family;      // "qaoa" or "haar"
  std::size_t depth = 0;   // QAOA layers, 0 for Haar
  std::string spec_hash;
  double bound = 0.0;
  std::vector<PotencySample> records;  // filled when keep_samples is set
};

/// Fraction of QAOA states with angles uniform on [0, 2pi)^{2p} that the
/// witness detects.
PotencyEstimate potency_qaoa(const WitnessSpec& spec, const ProblemHamiltonian& h, std::size_t depth,
                             std::size_t samples, std::uint64_t seed, const PotencyOptions& options = {});

/// Same over Haar-random states on the full 2^N-dimensional space.
PotencyEstimate potency_haar(const WitnessSpec& spec, std::size_t samples, std::uint64_t seed,
                             const PotencyOptions& options = {});

/// Fraction of the resolution x resolution grid {2 pi i / r} on [0, 2pi)^2
/// where the ring per-edge value cos^2 2g + sin 4g sin 4b / 2 exceeds 1.
double heaviside_ring_integral(std::size_t resolution);

/// Complete graph on n nodes with iid couplings drawn from {-1, +1}.
ProblemHamiltonian random_z2_hamiltonian(std::size_t n, std::uint64_t seed);

struct PotencySummary {
  double mean = 0.0;
  double max = 0.0;
  double min = 0.0;
  std::vector<double> fractions;  // one per Hamiltonian
};

/// W_XZ on a single N-tuple, QAOA potency for n_hams random Z2 Hamiltonians.
PotencySummary table_i_protocol(std::size_t n, std::size_t n_hams, std::size_t samples_per_ham,
                                std::size_t depth, std::uint64_t seed);

}  // namespace qwit
