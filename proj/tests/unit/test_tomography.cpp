#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qwit/error.hpp"
#include "qwit/tomography.hpp"

using namespace qwit;
using std::numbers::pi;

namespace {

// Integer counts proportional to the exact outcome distribution.
MeasurementDataset exact_dataset(const StateVector& s) {
  MeasurementDataset ds;
  ds.n_qubits = s.num_qubits();
  for (Pauli b : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const auto p = basis_probabilities(s, b);
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      std::string bits(ds.n_qubits, '0');
      for (std::size_t q = 0; q < ds.n_qubits; ++q) bits[q] = (idx >> q) & 1U ? '1' : '0';
      ds.counts(b)[bits] = static_cast<std::uint64_t>(std::llround(std::ldexp(p[idx], 50)));
    }
  }
  return ds;
}

}  // namespace

TEST(Shots, JsonRoundTrip) {
  const auto ds = simulate_shots(ghz_state(2), 100, 4);
  const auto path = std::filesystem::temp_directory_path() / "qwit_shots_roundtrip.json";
  save_shots(ds, path);
  const auto back = load_shots(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.n_qubits, 2u);
  EXPECT_EQ(back.bases, ds.bases);
  EXPECT_EQ(back.shots(Pauli::Y), 100u);
  EXPECT_EQ(dataset_to_json(back), dataset_to_json(ds));
}

TEST(Shots, SchemaErrors) {
  using nlohmann::json;
  const auto missing = json::parse(R"({"n_qubits":2,"bases":{"X":{"00":1},"Z":{"00":1}}})");
  try {
    dataset_from_json(missing);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("Y"), std::string::npos);
  }
  EXPECT_THROW(dataset_from_json(json::parse(R"({"n_qubits":2,"bases":{"X":{"0":1},"Y":{},"Z":{}}})")), SchemaError);
  EXPECT_THROW(dataset_from_json(json::parse(R"({"n_qubits":2,"bases":{"X":{"0a":1},"Y":{},"Z":{}}})")), SchemaError);
  EXPECT_THROW(dataset_from_json(json::parse(R"({"n_qubits":2,"bases":{"X":{"01":-1},"Y":{},"Z":{}}})")), SchemaError);
  EXPECT_THROW(dataset_from_json(json::parse(R"({"bases":{}})")), SchemaError);
  EXPECT_THROW(load_shots("/nonexistent/shots.json"), SchemaError);
}

TEST(Bloch, TrivialCounts) {
  MeasurementDataset ds;
  ds.n_qubits = 1;
  ds.counts(Pauli::Z)["0"] = 50;
  ds.counts(Pauli::X)["0"] = 25;
  ds.counts(Pauli::X)["1"] = 25;
  ds.counts(Pauli::Y)["1"] = 10;
  const auto b = estimate_bloch(ds, 0);
  EXPECT_EQ(b.z, 1.0);
  EXPECT_EQ(b.x, 0.0);
  EXPECT_EQ(b.y, -1.0);
  EXPECT_THROW(estimate_bloch(ds, 1), PreconditionError);
  ds.counts(Pauli::Y).clear();
  EXPECT_THROW(estimate_bloch(ds, 0), PreconditionError);
}

// Exact distributions reproduce partial-trace Bloch vectors.
TEST(Bloch, ExactDistributionsMatchPartialTrace) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto s = haar_random(3, seed);
    const auto ds = exact_dataset(s);
    for (std::size_t q = 0; q < 3; ++q) {
      const auto ref = oracle::bloch(oracle::to_vec(s), 3, q);
      const auto b = estimate_bloch(ds, q);
      EXPECT_NEAR(b.x, ref[0], 1e-12);
      EXPECT_NEAR(b.y, ref[1], 1e-12);
      EXPECT_NEAR(b.z, ref[2], 1e-12);
    }
  }
}

TEST(Bloch, SampledRingStateWithinShotNoise) {
  const auto s = qaoa_state(maxcut_hamiltonian(ring_graph(4)), {{0.3}, {0.5}});
  const auto ds = simulate_shots(s, 10000, 8);
  const auto ref = oracle::bloch(oracle::to_vec(s), 4, 1);
  const auto b = estimate_bloch(ds, 1);
  EXPECT_NEAR(b.x, ref[0], 5.0 / 100);
  EXPECT_NEAR(b.y, ref[1], 5.0 / 100);
  EXPECT_NEAR(b.z, ref[2], 5.0 / 100);
}

TEST(Mle, Projection) {
  const auto keep = mle_project({0.3, 0.0, 0.4});
  EXPECT_NEAR(keep.bloch().x, 0.3, 1e-15);
  EXPECT_NEAR(keep.bloch().z, 0.4, 1e-15);
  const auto clip = mle_project({1.2, 0.0, 0.0});
  EXPECT_NEAR(clip.bloch().x, 1.0, 1e-15);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 500; ++t) {
    const BlochVector raw{u(rng), u(rng), u(rng)};
    const auto rho = mle_project(raw);
    EXPECT_GE(rho.eigenvalues()[0], -1e-15);
    EXPECT_NEAR(std::real(rho.rho11() + rho.rho22()), 1.0, 1e-15);
    EXPECT_LE(rho.bloch().norm(), std::min(1.0, raw.norm()) + 1e-15);
    const auto again = mle_project(rho.bloch());
    EXPECT_NEAR(again.bloch().x, rho.bloch().x, 1e-15);
  }
}

TEST(Coherence, NoiselessAndDepolarized) {
  const auto ring = maxcut_hamiltonian(ring_graph(4));
  const std::vector<std::size_t> deg(4, 2);
  const auto s = qaoa_state(ring, {{pi / 8}, {pi / 8}});
  const auto clean = coherence_report(simulate_shots(s, 20000, 1), deg, pi / 8);
  for (const auto& q : clean.qubits) EXPECT_NEAR(q.coherence, 0.25, 4 * q.coherence_error + 1e-3);

  const auto plus = coherence_report(simulate_shots(StateVector::plus(2), 20000, 2), {1, 1}, 0.0);
  EXPECT_NEAR(plus.max_coherence, 0.5, 1e-3);
  EXPECT_GT(plus.qubits[0].margin, 0.0);

  const auto mixed = coherence_report(simulate_shots(s, 20000, 3, 1.0), deg, pi / 8);
  for (const auto& q : mixed.qubits) EXPECT_LT(q.coherence, 0.03);
  EXPECT_THROW(coherence_report(simulate_shots(s, 10, 3), {2, 2}, 0.1), PreconditionError);
}

TEST(WitnessFromShots, BellAndPlus) {
  const auto bell = simulate_shots(ghz_state(2), 20000, 5);
  const auto e = witness_expectation_from_shots(bell, pq_spec(line_graph(2), Pauli::X, Pauli::Z));
  EXPECT_NEAR(e.value, 2.0, 1e-12);  // both parities are deterministic
  EXPECT_EQ(e.std_error, 0.0);

  const auto plus = simulate_shots(StateVector::plus(5), 20000, 6);
  const auto w = witness_expectation_from_shots(plus, pq_spec(line_graph(5), Pauli::X, Pauli::Z));
  EXPECT_NEAR(w.value, 4.0, 3 * w.std_error + 1e-12);

  using enum Pauli;
  const WitnessSpec mixed{single_tuple_graph(6), {{true, {X, Y, Z, Z, Y, X}}}};
  EXPECT_THROW(witness_expectation_from_shots(simulate_shots(StateVector::plus(6), 10, 1), mixed),
               PreconditionError);
}

TEST(NoiseFit, ExactModelAndRecovery) {
  auto model = [](double g) { return linear_chain_total(4, g, pi / 8); };
  std::vector<std::pair<double, double>> exact;
  std::vector<std::pair<double, double>> noisy;
  for (int k = 0; k <= 20; ++k) {
    const double g = k * pi / 20;
    exact.emplace_back(g, model(g));
    noisy.emplace_back(g, 0.63 * model(g));
  }
  const auto f0 = fit_depolarizing(exact, model, 4);
  EXPECT_NEAR(f0.p_noise, 0.0, 1e-10);
  EXPECT_NEAR(f0.residual_rms, 0.0, 1e-12);
  EXPECT_NEAR(fit_depolarizing(noisy, model, 4).p_noise, 0.37, 1e-12);
  EXPECT_EQ(f0.n_points, 21u);
  EXPECT_THROW(fit_depolarizing({{0.1, 1.0}}, model, 4), PreconditionError);
  EXPECT_THROW(fit_depolarizing(exact, [](double) { return 0.0; }, 4), PreconditionError);
  // Values above the model clamp to p = 0.
  std::vector<std::pair<double, double>> boosted;
  for (const auto& [g, v] : exact) boosted.emplace_back(g, 1.5 * v);
  EXPECT_EQ(fit_depolarizing(boosted, model, 4).p_noise, 0.0);
}

TEST(NoiseFit, CriticalThreshold) {
  EXPECT_EQ(critical_threshold(2), 0.5);
  EXPECT_NEAR(critical_threshold(8), 0.190, 1e-3);
  EXPECT_NEAR(critical_threshold(16), 0.180, 1e-3);
  EXPECT_NEAR(critical_threshold(24), 0.177, 1e-3);
  EXPECT_THROW(critical_threshold(1), PreconditionError);
}
