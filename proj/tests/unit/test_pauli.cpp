#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qwit/error.hpp"
#include "qwit/pauli.hpp"
#include "qwit/statesim.hpp"

using namespace qwit;

TEST(PauliString, ParseAndMasks) {
  const auto p = PauliString::parse("XIZY");
  EXPECT_EQ(p.num_qubits(), 4u);
  EXPECT_EQ(p.x_mask(), 0b1001u);
  EXPECT_EQ(p.z_mask(), 0b1100u);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.str(), "XIZY");
  EXPECT_FALSE(p.is_uniform());
  EXPECT_TRUE(PauliString::parse("XIXX").is_uniform());
  EXPECT_TRUE(PauliString::parse("III").is_identity());
}

TEST(PauliString, RejectsBadLetters) {
  EXPECT_THROW(PauliString::parse("XQ"), SchemaError);
  EXPECT_THROW(pauli_from_char('q'), SchemaError);
}

TEST(PauliString, OnQubits) {
  const std::vector<std::size_t> qs{0, 3};
  const std::vector<Pauli> ls{Pauli::Y, Pauli::Z};
  EXPECT_EQ(PauliString::on_qubits(4, qs, ls).str(), "YIIZ");
  const std::vector<std::size_t> bad{4};
  const std::vector<Pauli> one{Pauli::X};
  EXPECT_THROW(PauliString::on_qubits(4, bad, one), PreconditionError);
}

TEST(Observable, ValidatesTerms) {
  EXPECT_THROW(Observable(3, {{1.0, PauliString::parse("XX")}}), PreconditionError);
  EXPECT_THROW(Observable(2, {{std::nan(""), PauliString::parse("XX")}}), PreconditionError);
  const Observable w(2, {{2.0, PauliString::parse("II")}, {-1.5, PauliString::parse("XZ")}});
  EXPECT_DOUBLE_EQ(w.normalized_trace(), 2.0);
  EXPECT_DOUBLE_EQ(w.coefficient_l1(), 3.5);
}

// Matrix-free application against explicit Kronecker products.
TEST(Observable, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<Term> terms;
    for (int t = 0; t < 4; ++t) {
      std::string s;
      for (std::size_t q = 0; q < n; ++q) s += letters[rng() % 4];
      terms.push_back({std::uniform_real_distribution<double>(-2, 2)(rng), PauliString::parse(s)});
    }
    const Observable w(n, terms);
    const auto psi = haar_random(n, rng());
    EXPECT_NEAR(expectation(w, psi), oracle::expect(oracle::observable_matrix(w), oracle::to_vec(psi)), 1e-12);

    std::vector<Amplitude> out(psi.dim());
    apply_observable(w, psi.amplitudes(), out);
    const oracle::Vec ref = oracle::observable_matrix(w) * oracle::to_vec(psi);
    for (std::size_t b = 0; b < psi.dim(); ++b) EXPECT_LT(std::abs(out[b] - ref(static_cast<Eigen::Index>(b))), 1e-12);
  }
}

TEST(Observable, ExpectationRejectsSizeMismatch) {
  const Observable w(2, {{1.0, PauliString::parse("ZZ")}});
  EXPECT_THROW(expectation(w, StateVector::plus(3)), PreconditionError);
}
