#pragma once

// Dense reference implementations built from explicit Kronecker products.
// They share no code with the library's bit-mask kernels.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qwit/graph.hpp"
#include "qwit/pauli.hpp"
#include "qwit/statesim.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Mat single(char letter) {
  Mat m(2, 2);
  switch (letter) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Qubit q is bit q of the index, so the highest qubit is the leftmost factor.
inline Mat pauli_matrix(const std::string& letters) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = letters.size(); q-- > 0;) m = kron(m, single(letters[q]));
  return m;
}

inline Mat observable_matrix(const qwit::Observable& obs) {
  const Eigen::Index dim = Eigen::Index{1} << obs.num_qubits();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : obs.terms()) m += t.coefficient * pauli_matrix(t.pauli.str());
  return m;
}

inline Vec to_vec(const qwit::StateVector& s) {
  Vec v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

inline Mat expm_hermitian(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXcd phases = (es.eigenvalues().cast<cd>() * cd(0, -t)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// exp(-i beta_j sum X) exp(-i gamma_j C) ... |+>^N via dense matrix exponentials.
inline Vec qaoa(const qwit::GeneralizedGraph& g, const std::vector<double>& couplings, const std::vector<double>& gammas,
                const std::vector<double>& betas) {
  const std::size_t n = g.num_nodes();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat c = Mat::Zero(dim, dim);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::string s(n, 'I');
    s[g.edges()[e][0]] = 'Z';
    s[g.edges()[e][1]] = 'Z';
    c += couplings[e] * pauli_matrix(s);
  }
  Mat b = Mat::Zero(dim, dim);
  for (std::size_t q = 0; q < n; ++q) {
    std::string s(n, 'I');
    s[q] = 'X';
    b += pauli_matrix(s);
  }
  Vec psi = Vec::Constant(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0));
  for (std::size_t j = 0; j < gammas.size(); ++j) psi = expm_hermitian(b, betas[j]) * (expm_hermitian(c, gammas[j]) * psi);
  return psi;
}

inline double expect(const Mat& m, const Vec& v) { return v.dot(m * v).real(); }

// Bloch vector of qubit q from the full state by explicit partial trace.
inline std::array<double, 3> bloch(const Vec& psi, std::size_t n, std::size_t q) {
  std::array<double, 3> r{};
  const char letters[3] = {'X', 'Y', 'Z'};
  for (int a = 0; a < 3; ++a) {
    std::string s(n, 'I');
    s[q] = letters[a];
    r[static_cast<std::size_t>(a)] = expect(pauli_matrix(s), psi);
  }
  return r;
}

}  // namespace oracle
