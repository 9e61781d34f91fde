#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qwit/graph.hpp"
#include "qwit/optimize.hpp"

namespace qwit {

/// Local structure of an edge <u,v> in a k = 2 graph.
struct EdgeContext {
  std::size_t du = 0;  // neighbours of u other than v
  std::size_t dv = 0;  // neighbours of v other than u
  std::size_t triangles = 0;
};

EdgeContext edge_context(const GeneralizedGraph& graph, std::size_t u, std::size_t v);

struct EdgeExpectations {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
};

/// <X_u X_v>, <Y_u Y_v>, <Z_u Z_v> in the p = 1 MaxCut QAOA state
/// exp(-i beta B) exp(-i gamma C)|+>^N, closed form.
EdgeExpectations edge_expectations(const EdgeContext& ctx, double gamma, double beta);

/// Sum over edges of <X_u X_v + Z_u Z_v> for any k = 2 graph at p = 1.
double xz_witness_p1(const GeneralizedGraph& graph, double gamma, double beta);

// Per-edge <XX + ZZ> for graph families, and the linear-chain total.
double ring_edge(double gamma, double beta);
double regular_tf_edge(std::size_t degree, double gamma, double beta);
double complete_edge(std::size_t n, double gamma, double beta);
/// Total <W_XZ> on the n-node open chain; n >= 2.
double linear_chain_total(std::size_t n, double gamma, double beta);

/// Maxima over [0, 2pi)^2 using a 201 x 201 grid plus simplex refinement.
/// x = {gamma, beta}.
OptimumResult maximize_angles(const std::function<double(double, double)>& f);
OptimumResult linear_chain_max(std::size_t n);
OptimumResult complete_edge_max(std::size_t n);
OptimumResult regular_tf_edge_max(std::size_t degree);

/// Fit range for the linear-chain maxima. Over n = 3..100 the least-squares
/// line reproduces the published 1.207 n - 1.019 to three decimals.
inline constexpr std::size_t kLinearFitFirst = 3;
inline constexpr std::size_t kLinearFitLast = 100;

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<std::size_t> ns;
  std::vector<double> maxima;
};

LinearFit fit_linear_chain(std::size_t first = kLinearFitFirst, std::size_t last = kLinearFitLast);

/// Ordinary least squares y = slope x + intercept.
LinearFit least_squares_line(const std::vector<std::size_t>& xs, const std::vector<double>& ys);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const noexcept;
};

/// 2x2 density matrix, row-major {rho11, rho12, rho21, rho22}.
struct DensityMatrix2 {
  std::array<std::complex<double>, 4> m{};

  std::complex<double> rho11() const noexcept { return m[0]; }
  std::complex<double> rho12() const noexcept { return m[1]; }
  std::complex<double> rho21() const noexcept { return m[2]; }
  std::complex<double> rho22() const noexcept { return m[3]; }
  std::array<double, 2> eigenvalues() const noexcept;
  BlochVector bloch() const noexcept;
};

/// (1 + P.sigma)/2.
DensityMatrix2 density_from_bloch(const BlochVector& p) noexcept;

/// Single-qubit reduced state of a degree-d node after p = 1 MaxCut QAOA.
DensityMatrix2 sqrdm_qaoa(std::size_t degree, double gamma);
/// |rho_12|.
double coherence(const DensityMatrix2& rho) noexcept;

/// Fidelity of the ideal degree-d reduced state with the state of Bloch
/// vector `bloch`. Throws PreconditionError when |bloch| > 1 + 1e-9.
double fidelity_qaoa(std::size_t degree, double gamma, const BlochVector& bloch);
/// Best fidelity any diagonal (classical-bit) state reaches against the ideal.
double max_classical_fidelity(std::size_t degree, double gamma);

}  // namespace qwit
