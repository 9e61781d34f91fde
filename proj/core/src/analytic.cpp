#include "qwit/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwit/error.hpp"

namespace qwit {

namespace {

// Integer power that keeps the sign of negative bases.
double ipow(double base, std::size_t exponent) {
  double r = 1.0;
  while (exponent) {
    if (exponent & 1U) r *= base;
    base *= base;
    exponent >>= 1U;
  }
  return r;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

EdgeContext edge_context(const GeneralizedGraph& graph, std::size_t u, std::size_t v) {
  if (graph.arity() != 2) throw PreconditionError("edge context needs a k = 2 graph");
  if (!graph.has_edge(u, v)) throw PreconditionError("not an edge of the graph");
  const auto nu = graph.neighbors(u);
  const auto nv = graph.neighbors(v);
  std::vector<std::size_t> common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
  return {nu.size() - 1, nv.size() - 1, common.size()};
}

EdgeExpectations edge_expectations(const EdgeContext& ctx, double gamma, double beta) {
  const std::size_t f = ctx.triangles;
  if (f > std::min(ctx.du, ctx.dv)) throw PreconditionError("triangle count exceeds neighbour count");
  const double c2 = std::cos(2 * gamma);
  const double c4f = ipow(std::cos(4 * gamma), f);
  const double open = ipow(c2, ctx.du + ctx.dv - 2 * f);
  const double cross = 0.5 * std::sin(4 * beta) * std::sin(2 * gamma) * (ipow(c2, ctx.du) + ipow(c2, ctx.dv));
  const double s2b = std::sin(2 * beta);
  const double c2b = std::cos(2 * beta);

  EdgeExpectations e;
  e.xx = 0.5 * open * (1 + c4f);
  e.yy = -cross + 0.5 * c2b * c2b * open * (1 - c4f);
  e.zz = cross + 0.5 * s2b * s2b * open * (1 - c4f);
  return e;
}

double xz_witness_p1(const GeneralizedGraph& graph, double gamma, double beta) {
  double total = 0.0;
  for (const auto& e : graph.edges()) {
    const auto r = edge_expectations(edge_context(graph, e[0], e[1]), gamma, beta);
    total += r.xx + r.zz;
  }
  return total;
}

double ring_edge(double gamma, double beta) {
  const double c = std::cos(2 * gamma);
  return c * c + 0.5 * std::sin(4 * gamma) * std::sin(4 * beta);
}

// `degree` here counts the neighbours of an endpoint other than its partner,
// so a ring is degree 1.
double regular_tf_edge(std::size_t degree, double gamma, double beta) {
  const double cd = ipow(std::cos(2 * gamma), degree);
  return cd * cd + std::sin(4 * beta) * std::sin(2 * gamma) * cd;
}

double complete_edge(std::size_t n, double gamma, double beta) {
  if (n < 3) throw PreconditionError("complete-graph formula needs n >= 3");
  const double c4 = ipow(std::cos(4 * gamma), n - 2);
  const double c2 = ipow(std::cos(2 * gamma), n - 2);
  const double s2b = std::sin(2 * beta);
  return 0.5 * (1 + c4) + std::sin(4 * beta) * std::sin(2 * gamma) * c2 + 0.5 * s2b * s2b * (1 - c4);
}

double linear_chain_total(std::size_t n, double gamma, double beta) {
  if (n < 2) throw PreconditionError("linear chain needs n >= 2");
  if (n == 2) return 1 + std::sin(4 * beta) * std::sin(2 * gamma);
  const double c2 = std::cos(2 * gamma);
  const double nn = static_cast<double>(n);
  return 0.5 * std::sin(4 * beta) * ((nn - 2) * std::sin(4 * gamma) + 2 * std::sin(2 * gamma)) +
         (nn - 3) * c2 * c2 + 2 * c2;
}

OptimumResult maximize_angles(const std::function<double(double, double)>& f) {
  GridRefineOptions o;
  o.lo0 = 0.0;
  o.hi0 = kTwoPi;
  o.lo1 = 0.0;
  o.hi1 = kTwoPi;
  o.steps = 201;
  o.refine_starts = 16;
  o.tolerance = 1e-13;
  auto r = grid_refine_maximize(f, o);
  for (auto& x : r.x) x = std::fmod(std::fmod(x, kTwoPi) + kTwoPi, kTwoPi);
  return r;
}

OptimumResult linear_chain_max(std::size_t n) {
  return maximize_angles([n](double g, double b) { return linear_chain_total(n, g, b); });
}

OptimumResult complete_edge_max(std::size_t n) {
  return maximize_angles([n](double g, double b) { return complete_edge(n, g, b); });
}

OptimumResult regular_tf_edge_max(std::size_t degree) {
  return maximize_angles([degree](double g, double b) { return regular_tf_edge(degree, g, b); });
}

LinearFit least_squares_line(const std::vector<std::size_t>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw PreconditionError("need at least two points to fit a line");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = static_cast<double>(xs[i]);
    sx += x;
    sy += ys[i];
    sxx += x * x;
    sxy += x * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw PreconditionError("degenerate abscissae");
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.ns = xs;
  fit.maxima = ys;
  return fit;
}

LinearFit fit_linear_chain(std::size_t first, std::size_t last) {
  if (first < 3 || last <= first) throw PreconditionError("fit range must start at n >= 3 and span two points");
  std::vector<std::size_t> ns;
  std::vector<double> maxima;
  for (std::size_t n = first; n <= last; ++n) {
    ns.push_back(n);
    maxima.push_back(linear_chain_max(n).value);
  }
  return least_squares_line(ns, maxima);
}

double BlochVector::norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

std::array<double, 2> DensityMatrix2::eigenvalues() const noexcept {
  const double tr = (m[0] + m[3]).real();
  const double det = (m[0] * m[3] - m[1] * m[2]).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return {tr / 2 - disc, tr / 2 + disc};
}

BlochVector DensityMatrix2::bloch() const noexcept {
  // rho = (1 + xX + yY + zZ)/2  =>  rho12 = (x - iy)/2, rho11 - rho22 = z.
  return {2 * m[1].real(), -2 * m[1].imag(), (m[0] - m[3]).real()};
}

DensityMatrix2 density_from_bloch(const BlochVector& p) noexcept {
  using C = std::complex<double>;
  return {{C(0.5 * (1 + p.z), 0), C(0.5 * p.x, -0.5 * p.y), C(0.5 * p.x, 0.5 * p.y), C(0.5 * (1 - p.z), 0)}};
}

DensityMatrix2 sqrdm_qaoa(std::size_t degree, double gamma) {
  return density_from_bloch({ipow(std::cos(2 * gamma), degree), 0.0, 0.0});
}

double coherence(const DensityMatrix2& rho) noexcept { return std::abs(rho.rho12()); }

double fidelity_qaoa(std::size_t degree, double gamma, const BlochVector& bloch) {
  const double r2 = bloch.x * bloch.x + bloch.y * bloch.y + bloch.z * bloch.z;
  if (r2 > (1 + 1e-9) * (1 + 1e-9)) throw PreconditionError("Bloch vector lies outside the unit ball");
  const double cd = ipow(std::cos(2 * gamma), degree);
  return 0.5 * (1 + bloch.x * cd) + 0.5 * std::sqrt(std::max(0.0, 1 - cd * cd)) * std::sqrt(std::max(0.0, 1 - r2));
}

double max_classical_fidelity(std::size_t degree, double gamma) {
  const double cd = ipow(std::cos(2 * gamma), degree);
  return 0.5 + 0.5 * std::sqrt(std::max(0.0, 1 - cd * cd));
}

}  // namespace qwit
