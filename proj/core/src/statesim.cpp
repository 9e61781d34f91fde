#include "qwit/statesim.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "qwit/error.hpp"

namespace qwit {

namespace {

double squared_norm(std::span<const Amplitude> v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

void check_qubits(std::size_t n, std::size_t cap) {
  if (n == 0) throw PreconditionError("register must have at least one qubit");
  if (n > cap) {
    throw PreconditionError(std::to_string(n) + " qubits exceeds simulator cap of " +
                            std::to_string(cap));
  }
}

// i^k for k mod 4.
Amplitude i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits_ >= 64 || amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
    throw PreconditionError("amplitude count does not match 2^" + std::to_string(n_qubits_));
  }
  const double norm = std::sqrt(squared_norm(amplitudes_));
  if (std::abs(norm - 1.0) > 1e-10) {
    throw PreconditionError("state is not normalized (norm " + std::to_string(norm) + ")");
  }
}

StateVector StateVector::normalized(std::size_t n_qubits, std::vector<Amplitude> amplitudes) {
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw PreconditionError("cannot normalize a zero vector");
  for (auto& a : amplitudes) a /= norm;
  return StateVector(n_qubits, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  check_qubits(n_qubits, kDefaultQubitCap);
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  if (index >= amps.size()) throw PreconditionError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::plus(std::size_t n_qubits) {
  check_qubits(n_qubits, kDefaultQubitCap);
  const std::size_t dim = std::size_t{1} << n_qubits;
  return StateVector(n_qubits, std::vector<Amplitude>(dim, 1.0 / std::sqrt(double(dim))));
}

ProblemHamiltonian maxcut_hamiltonian(const GeneralizedGraph& graph) {
  return make_hamiltonian(graph, std::vector<double>(graph.num_edges(), 1.0));
}

ProblemHamiltonian make_hamiltonian(const GeneralizedGraph& graph, std::vector<double> couplings) {
  if (graph.arity() != 2) throw PreconditionError("problem Hamiltonian needs a k = 2 graph");
  if (couplings.size() != graph.num_edges()) {
    throw PreconditionError("need one coupling per edge");
  }
  for (double j : couplings) {
    if (j != 1.0 && j != -1.0) throw PreconditionError("couplings must be +1 or -1");
  }
  return {graph, std::move(couplings)};
}

std::vector<double> cost_diagonal(const ProblemHamiltonian& h) {
  const std::size_t n = h.graph.num_nodes();
  check_qubits(n, kMaxPauliQubits);
  std::vector<double> diag(std::size_t{1} << n, 0.0);
  const auto& edges = h.graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::uint64_t mask = (std::uint64_t{1} << edges[e][0]) | (std::uint64_t{1} << edges[e][1]);
    const double j = h.couplings[e];
    for (std::size_t b = 0; b < diag.size(); ++b) {
      diag[b] += (std::popcount(b & mask) & 1) ? -j : j;
    }
  }
  return diag;
}

QaoaSimulator::QaoaSimulator(const ProblemHamiltonian& h, std::size_t qubit_cap)
    : n_qubits_(h.graph.num_nodes()) {
  check_qubits(n_qubits_, qubit_cap);
  cost_ = cost_diagonal(h);
}

StateVector QaoaSimulator::state(const QaoaParams& params) const {
  if (params.gammas.empty() || params.gammas.size() != params.betas.size()) {
    throw PreconditionError("QAOA needs p >= 1 and equally many gammas and betas");
  }
  const std::size_t dim = cost_.size();
  std::vector<Amplitude> psi(dim, 1.0 / std::sqrt(double(dim)));
  for (std::size_t layer = 0; layer < params.depth(); ++layer) {
    const double gamma = params.gammas[layer];
    for (std::size_t b = 0; b < dim; ++b) {
      psi[b] *= std::polar(1.0, -gamma * cost_[b]);
    }
    // exp(-i beta X) on every qubit.
    const double c = std::cos(params.betas[layer]);
    const Amplitude s(0.0, -std::sin(params.betas[layer]));
    for (std::size_t q = 0; q < n_qubits_; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t b = 0; b < dim; ++b) {
        if (b & bit) continue;
        const Amplitude a0 = psi[b];
        const Amplitude a1 = psi[b | bit];
        psi[b] = c * a0 + s * a1;
        psi[b | bit] = s * a0 + c * a1;
      }
    }
  }
  return StateVector::normalized(n_qubits_, std::move(psi));
}

StateVector qaoa_state(const ProblemHamiltonian& h, const QaoaParams& params, std::size_t qubit_cap) {
  return QaoaSimulator(h, qubit_cap).state(params);
}

Amplitude pauli_expectation(const PauliString& p, std::span<const Amplitude> psi) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  Amplitude acc = 0.0;
  for (std::size_t b = 0; b < psi.size(); ++b) {
    const Amplitude v = std::conj(psi[b ^ x]) * psi[b];
    if (std::popcount(b & z) & 1) acc -= v;
    else acc += v;
  }
  return acc * i_power(p.y_count());
}

double expectation(const Observable& obs, const StateVector& state) {
  if (obs.num_qubits() != state.num_qubits()) {
    throw PreconditionError("observable acts on " + std::to_string(obs.num_qubits()) +
                            " qubits, state has " + std::to_string(state.num_qubits()));
  }
  Amplitude total = 0.0;
  for (const auto& t : obs.terms()) {
    total += t.coefficient * pauli_expectation(t.pauli, state.amplitudes());
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw Error("expectation has imaginary residue " + std::to_string(total.imag()));
  }
  return total.real();
}

void apply_observable(const Observable& obs, std::span<const Amplitude> psi, std::span<Amplitude> out) {
  if (psi.size() != (std::size_t{1} << obs.num_qubits()) || out.size() != psi.size()) {
    throw PreconditionError("vector length does not match observable");
  }
  std::fill(out.begin(), out.end(), Amplitude{0.0});
  for (const auto& t : obs.terms()) {
    const std::uint64_t x = t.pauli.x_mask();
    const std::uint64_t z = t.pauli.z_mask();
    const Amplitude phase = t.coefficient * i_power(t.pauli.y_count());
    for (std::size_t b = 0; b < psi.size(); ++b) {
      const Amplitude v = (std::popcount(b & z) & 1) ? -psi[b] : psi[b];
      out[b ^ x] += phase * v;
    }
  }
}

StateVector ghz_state(std::size_t n, std::span<const std::size_t> flips, int relative_sign) {
  check_qubits(n, kDefaultQubitCap);
  if (relative_sign != 1 && relative_sign != -1) throw PreconditionError("relative sign must be +1 or -1");
  std::uint64_t flip_mask = 0;
  for (std::size_t q : flips) {
    if (q >= n) throw PreconditionError("flip index out of range");
    flip_mask ^= std::uint64_t{1} << q;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  amps[flip_mask] = 1.0 / std::numbers::sqrt2;
  amps[all ^ flip_mask] = relative_sign / std::numbers::sqrt2;
  return StateVector(n, std::move(amps));
}

StateVector product_state(const ProductStateParams& params) {
  const std::size_t n = params.thetas.size();
  if (params.phis.size() != n) throw PreconditionError("need one azimuth per polar angle");
  check_qubits(n, kDefaultQubitCap);
  std::vector<Amplitude> amps(std::size_t{1} << n, 1.0);
  for (std::size_t q = 0; q < n; ++q) {
    const Amplitude zero = std::cos(params.thetas[q] / 2);
    const Amplitude one = std::polar(std::sin(params.thetas[q] / 2), params.phis[q]);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= (b & bit) ? one : zero;
  }
  return StateVector::normalized(n, std::move(amps));
}

std::vector<Amplitude> dense_pure_amplitudes(const DensePureParams& params) {
  const std::size_t d = params.mixing.size() + 1;
  if (params.phases.size() != params.mixing.size() || !std::has_single_bit(d)) {
    throw PreconditionError("dense parametrization needs 2^n - 1 mixing angles and phases");
  }
  // t_0 = pi/2, so sin(t_0) = 1; amplitude i (0-based) uses sin(t_i) prod_{j>i} cos(t_j).
  std::vector<Amplitude> amps(d);
  double tail = 1.0;  // prod_{j > i} cos(t_j)
  for (std::size_t i = d; i-- > 0;) {
    const double head = i == 0 ? 1.0 : std::sin(params.mixing[i - 1]);
    const double phase = i == 0 ? 0.0 : params.phases[i - 1];
    // Signed magnitudes keep the map smooth; the sign is a phase of pi.
    amps[i] = std::polar(head * tail, phase);
    if (i > 0) tail *= std::cos(params.mixing[i - 1]);
  }
  return amps;
}

StateVector dense_pure_state(const DensePureParams& params) {
  auto amps = dense_pure_amplitudes(params);
  const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
  return StateVector::normalized(n, std::move(amps));
}

void validate_partition(std::size_t n, const Partition& partition) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& block : partition) {
    if (block.empty()) throw PreconditionError("partition has an empty block");
    for (std::size_t q : block) {
      if (q >= n) throw PreconditionError("partition index out of range");
      if (seen[q]) throw PreconditionError("partition blocks overlap");
      seen[q] = true;
      ++covered;
    }
  }
  if (covered != n) throw PreconditionError("partition does not cover every qubit");
}

StateVector block_product_state(std::size_t n, const Partition& partition,
                                std::span<const std::vector<Amplitude>> blocks) {
  check_qubits(n, kDefaultQubitCap);
  validate_partition(n, partition);
  if (blocks.size() != partition.size()) throw PreconditionError("need one state per block");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() != (std::size_t{1} << partition[b].size())) {
      throw PreconditionError("block state has the wrong dimension");
    }
  }
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    Amplitude a = 1.0;
    for (std::size_t b = 0; b < partition.size(); ++b) {
      std::size_t local = 0;
      for (std::size_t j = 0; j < partition[b].size(); ++j) {
        local |= ((idx >> partition[b][j]) & 1U) << j;
      }
      a *= blocks[b][local];
    }
    amps[idx] = a;
  }
  return StateVector::normalized(n, std::move(amps));
}

StateVector ksep_state(std::size_t n, const Partition& partition,
                       std::span<const DensePureParams> blocks) {
  std::vector<std::vector<Amplitude>> amps;
  amps.reserve(blocks.size());
  for (const auto& p : blocks) amps.push_back(dense_pure_amplitudes(p));
  return block_product_state(n, partition, amps);
}

StateVector haar_random(std::size_t n, std::uint64_t seed) {
  check_qubits(n, kDefaultQubitCap);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) {
    const double re = gauss(rng);
    a = {re, gauss(rng)};
  }
  return StateVector::normalized(n, std::move(amps));
}

double depolarized_expectation(const Observable& obs, const StateVector& state, double p_noise) {
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw PreconditionError("p_noise must lie in [0, 1]");
  return (1.0 - p_noise) * expectation(obs, state) + p_noise * obs.normalized_trace();
}

}  // namespace qwit
