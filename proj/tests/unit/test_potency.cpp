#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qwit/error.hpp"
#include "qwit/analytic.hpp"
#include "qwit/potency.hpp"

using namespace qwit;
using std::numbers::pi;

TEST(Potency, DeterministicAndConsistent) {
  const auto spec = pq_spec(ring_graph(6), Pauli::X, Pauli::Z);
  const auto h = maxcut_hamiltonian(ring_graph(6));
  const auto a = potency_qaoa(spec, h, 1, 500, 42);
  const auto b = potency_qaoa(spec, h, 1, 500, 42);
  EXPECT_EQ(a.detected, b.detected);
  EXPECT_EQ(a.fraction, static_cast<double>(a.detected) / 500.0);
  EXPECT_DOUBLE_EQ(a.std_error, std::sqrt(a.fraction * (1 - a.fraction) / 500.0));
  EXPECT_EQ(a.family, "qaoa");
  EXPECT_EQ(a.bound, 6.0);
  EXPECT_TRUE(a.records.empty());
  EXPECT_GT(a.fraction, 0.0);
  EXPECT_LT(a.fraction, 1.0);
}

TEST(Potency, RecordsAreOptIn) {
  PotencyOptions o;
  o.keep_samples = true;
  const auto e = potency_qaoa(pq_spec(line_graph(3), Pauli::X, Pauli::Z), maxcut_hamiltonian(line_graph(3)), 2, 20,
                              1, o);
  ASSERT_EQ(e.records.size(), 20u);
  EXPECT_EQ(e.records[0].gammas.size(), 2u);
  std::size_t detected = 0;
  for (const auto& r : e.records) {
    EXPECT_EQ(r.detected, r.expectation > 2.0 + kDetectionTolerance);
    for (double g : r.gammas) EXPECT_TRUE(g >= 0.0 && g < 2 * pi);
    detected += r.detected;
  }
  EXPECT_EQ(detected, e.detected);
}

TEST(Potency, TwoSidedCountsAtLeastAsMany) {
  const auto spec = xyz_spec(single_tuple_graph(4));
  PotencyOptions both;
  both.two_sided = true;
  const auto one = potency_haar(spec, 400, 9);
  const auto two = potency_haar(spec, 400, 9, both);
  EXPECT_GE(two.detected, one.detected);
}

TEST(Potency, Preconditions) {
  const auto spec = pq_spec(ring_graph(4), Pauli::X, Pauli::Z);
  EXPECT_THROW(potency_qaoa(spec, maxcut_hamiltonian(ring_graph(4)), 1, 0, 1), PreconditionError);
  EXPECT_THROW(potency_qaoa(spec, maxcut_hamiltonian(ring_graph(5)), 1, 10, 1), PreconditionError);
  EXPECT_THROW(potency_haar(spec, 0, 1), PreconditionError);
  EXPECT_THROW(heaviside_ring_integral(99), PreconditionError);
}

TEST(Potency, RingWitnessNeverFiresOnHaarStates) {
  EXPECT_EQ(potency_haar(pq_spec(ring_graph(6), Pauli::X, Pauli::Z), 2000, 5).detected, 0u);
}

TEST(Potency, OddSingleTupleIsNeverDetected) {
  const auto spec = pq_spec(single_tuple_graph(5), Pauli::X, Pauli::Z);
  for (std::uint64_t s = 0; s < 3; ++s) {
    EXPECT_EQ(potency_qaoa(spec, random_z2_hamiltonian(5, s), 1, 300, s).detected, 0u);
  }
}

TEST(Potency, DeeperCircuitsDetectLessOnCompleteGraph) {
  const auto spec = pq_spec(complete_graph(5), Pauli::X, Pauli::Z);
  const auto h = maxcut_hamiltonian(complete_graph(5));
  const auto p1 = potency_qaoa(spec, h, 1, 4000, 17);
  const auto p5 = potency_qaoa(spec, h, 5, 4000, 17);
  EXPECT_LE(p5.fraction, p1.fraction + 3 * std::hypot(p1.std_error, p5.std_error));
}

TEST(HeavisideIntegral, GridConventions) {
  // The origin sits on the grid with value exactly 1, so it is not counted.
  const double coarse = heaviside_ring_integral(100);
  EXPECT_GT(coarse, 0.0);
  EXPECT_LT(coarse, 0.5);
  EXPECT_GT(ring_edge(pi / 16, pi / 8), 1.0);
  EXPECT_NEAR(heaviside_ring_integral(400), heaviside_ring_integral(800), 2e-3);
}

TEST(RandomHamiltonian, CompleteWithUnitCouplings) {
  const auto h = random_z2_hamiltonian(6, 3);
  EXPECT_EQ(h.graph, complete_graph(6));
  for (double j : h.couplings) EXPECT_EQ(std::abs(j), 1.0);
  EXPECT_EQ(random_z2_hamiltonian(6, 3).couplings, h.couplings);
  EXPECT_THROW(random_z2_hamiltonian(1, 0), PreconditionError);
}

TEST(TableProtocol, SummaryStatistics) {
  const auto s = table_i_protocol(4, 6, 200, 1, 2);
  ASSERT_EQ(s.fractions.size(), 6u);
  EXPECT_LE(s.min, s.mean);
  EXPECT_LE(s.mean, s.max);
}
