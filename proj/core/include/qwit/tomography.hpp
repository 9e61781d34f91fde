#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwit/analytic.hpp"
#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

namespace qwit {

using Counts = std::map<std::string, std::uint64_t>;

/// Outcomes of measuring every qubit at once in the X, Y and Z bases.
/// Character i of a bitstring is qubit i's outcome, '0' for the +1 eigenstate.
struct MeasurementDataset {
  std::size_t n_qubits = 0;
  std::array<Counts, 3> bases;  // X, Y, Z
  nlohmann::json meta = nlohmann::json::object();

  Counts& counts(Pauli basis);
  const Counts& counts(Pauli basis) const;
  std::uint64_t shots(Pauli basis) const;
};

/// Throws SchemaError on a missing basis, malformed bitstring or bad count.
MeasurementDataset dataset_from_json(const nlohmann::json& doc);
nlohmann::json dataset_to_json(const MeasurementDataset& ds);
MeasurementDataset load_shots(const std::filesystem::path& path);
void save_shots(const MeasurementDataset& ds, const std::filesystem::path& path);

/// Outcome distribution of `state` measured in `basis` on every qubit.
std::vector<double> basis_probabilities(const StateVector& state, Pauli basis);

/// Draws `shots` samples per basis. With probability p_noise a shot is a
/// uniformly random bitstring (global depolarizing channel).
MeasurementDataset simulate_shots(const StateVector& state, std::size_t shots, std::uint64_t seed,
                                  double p_noise = 0.0);

/// (n0 - n1) / (n0 + n1) of qubit q's marginal in each basis.
BlochVector estimate_bloch(const MeasurementDataset& ds, std::size_t qubit);
/// Binomial 1-sigma error of each component, sqrt((1 - e^2) / n).
BlochVector bloch_std_error(const MeasurementDataset& ds, std::size_t qubit);

/// Bloch vectors outside the unit ball are rescaled onto the sphere.
DensityMatrix2 mle_project(const BlochVector& raw);

struct QubitCoherence {
  BlochVector raw;
  BlochVector raw_error;
  DensityMatrix2 mle;
  double coherence = 0.0;
  double coherence_error = 0.0;
  double fidelity = 0.0;
  double classical_fidelity = 0.0;
  double margin = 0.0;  // fidelity - classical_fidelity
};

struct CoherenceReport {
  std::vector<QubitCoherence> qubits;
  double max_coherence = 0.0;
};

/// degrees[q] is qubit q's degree in the problem graph.
CoherenceReport coherence_report(const MeasurementDataset& ds, const std::vector<std::size_t>& degrees,
                                 double gamma);

struct ShotEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Every term must be a single repeated letter so the X/Y/Z datasets cover
/// it. Term errors are combined as independent binomials.
ShotEstimate witness_expectation_from_shots(const MeasurementDataset& ds, const Observable& obs);
ShotEstimate witness_expectation_from_shots(const MeasurementDataset& ds, const WitnessSpec& spec);

struct NoiseFit {
  double p_noise = 0.0;
  double residual_rms = 0.0;
  std::size_t n_points = 0;
  double critical_threshold = 0.0;
};

/// Least-squares fit of value = (1 - p) model(gamma), p clamped to [0, 1].
NoiseFit fit_depolarizing(const std::vector<std::pair<double, double>>& observed,
                          const std::function<double(double)>& model, std::size_t n_qubits);

/// Largest p_noise that keeps the optimal linear-chain witness violated:
/// 1/2 for n = 2, else 1 - (n - 1) / (1.207 n - 1.019).
double critical_threshold(std::size_t n);

}  // namespace qwit
