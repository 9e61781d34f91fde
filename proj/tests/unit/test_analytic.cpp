#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qwit/analytic.hpp"
#include "qwit/error.hpp"
#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

using namespace qwit;
using std::numbers::pi;

namespace {

double sim_pair(const StateVector& s, std::size_t n, std::size_t u, std::size_t v, Pauli p) {
  const std::vector<std::size_t> qs{u, v};
  const std::vector<Pauli> ls{p, p};
  return pauli_expectation(PauliString::on_qubits(n, qs, ls), s.amplitudes()).real();
}

}  // namespace

TEST(EdgeExpectations, RingPoint) {
  const auto e = edge_expectations({1, 1, 0}, pi / 16, pi / 8);
  EXPECT_NEAR(e.xx, std::pow(std::cos(pi / 8), 2), 1e-15);
  EXPECT_NEAR(e.zz, 0.5 * std::sin(pi / 4), 1e-15);
  EXPECT_NEAR(e.xx + e.zz, (1 + std::sqrt(2.0)) / 2, 1e-15);
  EXPECT_NEAR(ring_edge(pi / 16, pi / 8), (1 + std::sqrt(2.0)) / 2, 1e-15);
}

TEST(EdgeExpectations, ZeroGamma) {
  for (const EdgeContext ctx : {EdgeContext{0, 0, 0}, EdgeContext{3, 2, 1}, EdgeContext{4, 4, 4}}) {
    const auto e = edge_expectations(ctx, 0.0, 0.7);
    EXPECT_NEAR(e.xx, 1.0, 1e-15);
    EXPECT_NEAR(e.yy, 0.0, 1e-15);
    EXPECT_NEAR(e.zz, 0.0, 1e-15);
  }
  EXPECT_THROW(edge_expectations({1, 1, 2}, 0.1, 0.1), PreconditionError);
}

// Closed forms against full p = 1 simulation on random graphs.
TEST(EdgeExpectations, MatchSimulation) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const std::uint64_t pairs = n * (n - 1) / 2;
    const auto g = graph_from_pair_mask(n, 1 + rng() % ((std::uint64_t{1} << pairs) - 1));
    const double gamma = angle(rng);
    const double beta = angle(rng);
    const auto s = qaoa_state(maxcut_hamiltonian(g), {{gamma}, {beta}});
    for (const auto& e : g.edges()) {
      const auto ex = edge_expectations(edge_context(g, e[0], e[1]), gamma, beta);
      EXPECT_NEAR(ex.xx, sim_pair(s, n, e[0], e[1], Pauli::X), 1e-10);
      EXPECT_NEAR(ex.yy, sim_pair(s, n, e[0], e[1], Pauli::Y), 1e-10);
      EXPECT_NEAR(ex.zz, sim_pair(s, n, e[0], e[1], Pauli::Z), 1e-10);
    }
    EXPECT_NEAR(xz_witness_p1(g, gamma, beta), expectation(w_pq(g, Pauli::X, Pauli::Z), s), 1e-9);
  }
}

TEST(EdgeExpectations, TriangleFreeSymmetry) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int t = 0; t < 200; ++t) {
    const EdgeContext ctx{rng() % 5, rng() % 5, 0};
    const double g = angle(rng);
    const double b = angle(rng);
    const double zz = edge_expectations(ctx, g, b).zz;
    EXPECT_NEAR(zz, edge_expectations(ctx, g, -b).yy, 1e-12);
    EXPECT_NEAR(zz, edge_expectations(ctx, -g, b).yy, 1e-12);
  }
}

TEST(Families, AgreeWithGeneralFormula) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int t = 0; t < 100; ++t) {
    const double g = angle(rng);
    const double b = angle(rng);
    const std::size_t n = 4 + t % 6;
    EXPECT_NEAR(ring_edge(g, b) * n, xz_witness_p1(ring_graph(n), g, b), 1e-11);
    EXPECT_NEAR(linear_chain_total(n, g, b), xz_witness_p1(line_graph(n), g, b), 1e-11);
    EXPECT_NEAR(complete_edge(n, g, b) * n * (n - 1) / 2, xz_witness_p1(complete_graph(n), g, b), 1e-10);
    EXPECT_NEAR(regular_tf_edge(1, g, b), ring_edge(g, b), 1e-12);
    EXPECT_NEAR(ring_edge(g + 2 * pi, b - 2 * pi), ring_edge(g, b), 1e-12);
  }
  EXPECT_NEAR(linear_chain_total(2, pi / 4, pi / 8), 2.0, 1e-15);
  const auto e = edge_expectations({3, 3, 3}, 0.3, 1.1);
  EXPECT_NEAR(complete_edge(5, 0.3, 1.1), e.xx + e.zz, 1e-14);
  EXPECT_THROW(complete_edge(2, 0.1, 0.1), PreconditionError);
  EXPECT_THROW(linear_chain_total(1, 0.1, 0.1), PreconditionError);
}

TEST(Maximize, RingAndChain) {
  const auto r = maximize_angles(ring_edge);
  EXPECT_NEAR(r.value, (1 + std::sqrt(2.0)) / 2, 1e-10);
  EXPECT_NEAR(linear_chain_max(2).value, 2.0, 1e-10);
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_GT(linear_chain_max(n).value, n - 1.0);
}

TEST(Maximize, CompleteGraphDecays) {
  double prev = complete_edge_max(3).value;
  for (std::size_t n = 4; n <= 12; ++n) {
    const double v = complete_edge_max(n).value;
    EXPECT_LE(v, prev + 1e-9);
    EXPECT_GT(v, 1.0);
    prev = v;
  }
}

TEST(LinearFit, LeastSquares) {
  const auto f = least_squares_line({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_THROW(least_squares_line({1}, {1}), PreconditionError);
  EXPECT_THROW(fit_linear_chain(2, 5), PreconditionError);
}

TEST(Sqrdm, CoherenceValues) {
  EXPECT_NEAR(coherence(sqrdm_qaoa(0, 1.234)), 0.5, 1e-15);
  EXPECT_NEAR(coherence(sqrdm_qaoa(2, pi / 8)), 0.25, 1e-15);
  EXPECT_NEAR(coherence(sqrdm_qaoa(3, pi / 4)), 0.0, 1e-15);
}

// Reduced single-qubit state from a simulated p = 1 ring state.
TEST(Sqrdm, MatchesPartialTrace) {
  for (double gamma : {0.1, pi / 8, 0.9}) {
    const auto psi = oracle::qaoa(ring_graph(5), std::vector<double>(5, 1.0), {gamma}, {0.37});
    const auto r = oracle::bloch(psi, 5, 2);
    const auto b = sqrdm_qaoa(2, gamma).bloch();
    EXPECT_NEAR(r[0], b.x, 1e-12);
    EXPECT_NEAR(r[1], b.y, 1e-12);
    EXPECT_NEAR(r[2], b.z, 1e-12);
  }
}

TEST(Density, EigenvaluesAndBloch) {
  const auto rho = density_from_bloch({0.3, -0.2, 0.4});
  const auto ev = rho.eigenvalues();
  const double r = std::sqrt(0.09 + 0.04 + 0.16);
  EXPECT_NEAR(ev[0], (1 - r) / 2, 1e-15);
  EXPECT_NEAR(ev[1], (1 + r) / 2, 1e-15);
  EXPECT_NEAR(rho.bloch().y, -0.2, 1e-15);
}

TEST(Fidelity, Limits) {
  for (std::size_t d : {1u, 2u, 5u}) {
    for (double g : {0.0, 0.2, 1.0}) {
      EXPECT_NEAR(fidelity_qaoa(d, g, sqrdm_qaoa(d, g).bloch()), 1.0, 1e-12);
      EXPECT_LE(max_classical_fidelity(d, g), 1.0 + 1e-15);
    }
    EXPECT_NEAR(max_classical_fidelity(d, pi / 4), 1.0, 1e-15);
    EXPECT_NEAR(max_classical_fidelity(d, 0.0), 0.5, 1e-15);
  }
  EXPECT_THROW(fidelity_qaoa(1, 0.1, {1.1, 0, 0}), PreconditionError);
}
