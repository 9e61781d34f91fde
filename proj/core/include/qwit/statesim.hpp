#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qwit/graph.hpp"
#include "qwit/pauli.hpp"

namespace qwit {

using Amplitude = std::complex<double>;

/// Default ceiling on simulated register size (2^24 amplitudes, 256 MiB).
inline constexpr std::size_t kDefaultQubitCap = 24;

/// Normalized pure state on n qubits; amplitude b is <b|psi> with qubit q
/// stored in bit q of b.
class StateVector {
 public:
  StateVector() = default;
  /// Requires |norm - 1| <= 1e-10.
  StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);
  /// Rescales to unit norm; throws on a zero vector.
  static StateVector normalized(std::size_t n_qubits, std::vector<Amplitude> amplitudes);
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);
  static StateVector plus(std::size_t n_qubits);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t b) const { return amplitudes_[b]; }

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

/// Angles of a depth-p QAOA circuit, layer j applying exp(-i beta_j B) exp(-i gamma_j C).
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;
  std::size_t depth() const noexcept { return gammas.size(); }
};

/// C = sum_{<ij>} J_ij Z_i Z_j over a k = 2 graph; J_ij in {-1, +1}.
struct ProblemHamiltonian {
  GeneralizedGraph graph;
  std::vector<double> couplings;
};

ProblemHamiltonian maxcut_hamiltonian(const GeneralizedGraph& graph);
ProblemHamiltonian make_hamiltonian(const GeneralizedGraph& graph, std::vector<double> couplings);

/// Diagonal of C in the computational basis.
std::vector<double> cost_diagonal(const ProblemHamiltonian& h);

/// Reusable QAOA evolution for one Hamiltonian: the 2^N cost table is built
/// once and every call to state() applies the layers matrix-free.
class QaoaSimulator {
 public:
  explicit QaoaSimulator(const ProblemHamiltonian& h, std::size_t qubit_cap = kDefaultQubitCap);
  StateVector state(const QaoaParams& params) const;
  std::size_t num_qubits() const noexcept { return n_qubits_; }

 private:
  std::size_t n_qubits_;
  std::vector<double> cost_;
};

StateVector qaoa_state(const ProblemHamiltonian& h, const QaoaParams& params,
                       std::size_t qubit_cap = kDefaultQubitCap);

/// <psi|P|psi>, complex in general.
Amplitude pauli_expectation(const PauliString& p, std::span<const Amplitude> psi);
/// Real <psi|W|psi>; throws if the imaginary residue exceeds 1e-10.
double expectation(const Observable& obs, const StateVector& state);
/// out = W psi, accumulated term by term.
void apply_observable(const Observable& obs, std::span<const Amplitude> psi,
                      std::span<Amplitude> out);

/// (prod_{q in flips} X_q)(|0..0> + sign |1..1>)/sqrt(2).
StateVector ghz_state(std::size_t n, std::span<const std::size_t> flips = {}, int relative_sign = 1);

/// Bloch angles per qubit: cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct ProductStateParams {
  std::vector<double> thetas;
  std::vector<double> phis;
};
StateVector product_state(const ProductStateParams& params);

/// Hyperspherical parametrization of a 2^n-dimensional pure state:
/// |amplitude_i| = sin(t_{i-1}) prod_{j >= i} cos(t_j) with t_0 = pi/2, and
/// relative phase phi_{i-1} with phi_0 = 0. `mixing` holds t_1..t_{d-1} and
/// `phases` holds phi_1..phi_{d-1}.
struct DensePureParams {
  std::vector<double> mixing;
  std::vector<double> phases;
};
std::vector<Amplitude> dense_pure_amplitudes(const DensePureParams& params);
StateVector dense_pure_state(const DensePureParams& params);

using Partition = std::vector<std::vector<std::size_t>>;

/// Checks blocks are non-empty, disjoint and cover [0, n).
void validate_partition(std::size_t n, const Partition& partition);

/// Tensor product of block states; blocks[b] is a vector over 2^{|partition[b]|}
/// entries whose bit j refers to qubit partition[b][j].
StateVector block_product_state(std::size_t n, const Partition& partition,
                                std::span<const std::vector<Amplitude>> blocks);
StateVector ksep_state(std::size_t n, const Partition& partition,
                       std::span<const DensePureParams> blocks);

/// Unitarily invariant random state (normalized complex Gaussian vector).
StateVector haar_random(std::size_t n, std::uint64_t seed);

/// (1-p)<W> + p Tr(W)/2^N for global depolarizing noise of strength p.
double depolarized_expectation(const Observable& obs, const StateVector& state, double p_noise);

}  // namespace qwit
