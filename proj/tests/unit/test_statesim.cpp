#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qwit/error.hpp"
#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

using namespace qwit;
using std::numbers::pi;

TEST(StateVector, Construction) {
  EXPECT_THROW(StateVector(1, {1.0, 1.0}), PreconditionError);
  EXPECT_THROW(StateVector(2, {1.0, 0.0}), PreconditionError);
  EXPECT_THROW(StateVector::normalized(1, {0.0, 0.0}), PreconditionError);
  const auto b = StateVector::basis(3, 5);
  EXPECT_EQ(b[5], Amplitude(1.0));
  EXPECT_THROW(StateVector::basis(2, 4), PreconditionError);
}

TEST(Qaoa, IdentityAnglesGiveUniformState) {
  const auto s = qaoa_state(maxcut_hamiltonian(ring_graph(5)), {{0.0}, {0.0}});
  for (std::size_t b = 0; b < s.dim(); ++b) EXPECT_NEAR(std::abs(s[b] - Amplitude(std::pow(2.0, -2.5))), 0.0, 1e-15);
}

TEST(Qaoa, RingMaximum) {
  const auto s = qaoa_state(maxcut_hamiltonian(ring_graph(4)), {{pi / 16}, {pi / 8}});
  EXPECT_NEAR(expectation(w_pq(ring_graph(4), Pauli::X, Pauli::Z), s) / 4, (1 + std::sqrt(2.0)) / 2, 1e-12);
}

TEST(Qaoa, MatchesMatrixExponentialOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t p = 1 + trial % 3;
    const auto g = complete_graph(n);
    std::vector<double> j(g.num_edges());
    for (auto& x : j) x = rng() & 1 ? 1.0 : -1.0;
    QaoaParams params;
    for (std::size_t l = 0; l < p; ++l) {
      params.gammas.push_back(angle(rng));
      params.betas.push_back(angle(rng));
    }
    const auto s = qaoa_state(make_hamiltonian(g, j), params);
    const auto ref = oracle::qaoa(g, j, params.gammas, params.betas);
    for (std::size_t b = 0; b < s.dim(); ++b) EXPECT_LT(std::abs(s[b] - ref(static_cast<Eigen::Index>(b))), 1e-11);
  }
}

TEST(Qaoa, Preconditions) {
  EXPECT_THROW(make_hamiltonian(ring_graph(3), {1, 1}), PreconditionError);
  EXPECT_THROW(make_hamiltonian(ring_graph(3), {1, 0.5, 1}), PreconditionError);
  EXPECT_THROW(maxcut_hamiltonian(single_tuple_graph(3)), PreconditionError);
  EXPECT_THROW(qaoa_state(maxcut_hamiltonian(ring_graph(3)), {{0.1}, {}}), PreconditionError);
  EXPECT_THROW(QaoaSimulator(maxcut_hamiltonian(ring_graph(6)), 5), PreconditionError);
}

TEST(Expectation, SeparableSaturation) {
  for (std::size_t n : {3u, 5u, 8u}) {
    EXPECT_NEAR(expectation(w_pq(line_graph(n), Pauli::X, Pauli::Z), StateVector::plus(n)), n - 1.0, 1e-12);
  }
}

TEST(Ghz, WitnessValues) {
  EXPECT_NEAR(expectation(w_pq(line_graph(2), Pauli::X, Pauli::Z), ghz_state(2)), 2.0, 1e-12);
  EXPECT_NEAR(expectation(w_xyz(single_tuple_graph(4)), ghz_state(4)), 3.0, 1e-12);
  const std::vector<std::size_t> flip{5};
  EXPECT_NEAR(expectation(w_xyz(single_tuple_graph(6)), ghz_state(6, flip, -1)), -3.0, 1e-12);
  EXPECT_THROW(ghz_state(3, {}, 0), PreconditionError);
}

TEST(ProductStates, Parametrizations) {
  ProductStateParams plus{std::vector<double>(4, pi / 2), std::vector<double>(4, 0.0)};
  const auto s = product_state(plus);
  for (std::size_t b = 0; b < s.dim(); ++b) EXPECT_NEAR(std::abs(s[b] - Amplitude(0.25)), 0.0, 1e-15);

  const auto zero = dense_pure_state({std::vector<double>(7, 0.0), std::vector<double>(7, 0.0)});
  EXPECT_NEAR(std::abs(zero[0]), 1.0, 1e-15);
  EXPECT_THROW(dense_pure_state({{0.1}, {0.1, 0.2}}), PreconditionError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(0, 2 * pi);
  DensePureParams p;
  for (int i = 0; i < 15; ++i) {
    p.mixing.push_back(a(rng));
    p.phases.push_back(a(rng));
  }
  EXPECT_EQ(dense_pure_state(p).num_qubits(), 4u);  // constructor enforces the norm
}

TEST(ProductStates, KsepStateFactorizes) {
  const Partition part{{0, 2}, {1}};
  const std::vector<Amplitude> a{0.6, 0.0, 0.0, 0.8};  // on qubits (0, 2)
  const std::vector<Amplitude> b{0.0, 1.0};            // qubit 1 in |1>
  const std::vector<std::vector<Amplitude>> blocks{a, b};
  const auto s = block_product_state(3, part, blocks);
  EXPECT_NEAR(std::abs(s[0b010]), 0.6, 1e-15);
  EXPECT_NEAR(std::abs(s[0b111]), 0.8, 1e-15);
  EXPECT_THROW(validate_partition(3, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(validate_partition(3, {{0, 1}}), PreconditionError);
  EXPECT_THROW(validate_partition(3, {{0, 1, 2}, {}}), PreconditionError);
}

TEST(Haar, NormalizedAndReproducible) {
  const auto a = haar_random(4, 99);
  const auto b = haar_random(4, 99);
  const auto c = haar_random(4, 100);
  for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_NE(a[0], c[0]);
}

TEST(Depolarizing, ScalesTracelessWitness) {
  const auto w = w_pq(ring_graph(4), Pauli::X, Pauli::Z);
  const auto s = qaoa_state(maxcut_hamiltonian(ring_graph(4)), {{pi / 16}, {pi / 8}});
  EXPECT_NEAR(depolarized_expectation(w, s, 0.0), expectation(w, s), 1e-15);
  EXPECT_NEAR(depolarized_expectation(w, s, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(depolarized_expectation(w, s, 0.5) / 4, (1 + std::sqrt(2.0)) / 4, 1e-12);
  EXPECT_THROW(depolarized_expectation(w, s, 1.5), PreconditionError);
}
