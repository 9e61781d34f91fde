#include "qwit/certify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "qwit/error.hpp"
#include "qwit/parallel.hpp"

namespace qwit {

namespace {

using Complex = std::complex<double>;

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

Eigen::MatrixXcd dense_matrix(const Observable& obs) {
  const std::size_t dim = std::size_t{1} << obs.num_qubits();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : obs.terms()) {
    const Complex phase = t.coefficient * i_power(t.pauli.y_count());
    for (std::size_t b = 0; b < dim; ++b) {
      const Complex v = (std::popcount(b & t.pauli.z_mask()) & 1) ? -phase : phase;
      h(static_cast<Eigen::Index>(b ^ t.pauli.x_mask()), static_cast<Eigen::Index>(b)) += v;
    }
  }
  return h;
}

// Restarted Lanczos with full reorthogonalization for the top eigenvalue of
// sign * W.
EigenResult lanczos_top(const Observable& obs, double sign, const EigenOptions& o) {
  const std::size_t n = obs.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::size_t m = std::min<std::size_t>(o.krylov_dim, dim);
  if (dim >= (std::size_t{1} << 20)) m = std::min<std::size_t>(m, 24);

  // |+>^N plus a small seeded perturbation, so that a top eigenvector outside
  // the symmetry sector of |+>^N is still reachable.
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd start(static_cast<Eigen::Index>(dim));
  for (auto& a : start) a = Complex(1.0 + 1e-2 * gauss(rng), 1e-2 * gauss(rng));
  start.normalize();

  auto apply = [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    apply_observable(obs, std::span<const Complex>(in.data(), dim), std::span<Complex>(out.data(), dim));
    if (sign < 0) out = -out;
  };

  EigenResult result;
  result.method = EigenMethod::Iterative;
  result.converged = false;
  const double scale = std::max(1.0, obs.coefficient_l1());
  Eigen::MatrixXcd basis(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(m));
  Eigen::VectorXcd w(static_cast<Eigen::Index>(dim));

  for (std::size_t restart = 0; restart <= o.max_restarts; ++restart) {
    std::vector<double> alpha, beta;
    basis.col(0) = start;
    std::size_t steps = 0;
    double last_beta = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      apply(basis.col(static_cast<Eigen::Index>(j)), w);
      ++result.iterations;
      const double a = basis.col(static_cast<Eigen::Index>(j)).dot(w).real();
      alpha.push_back(a);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        const auto cols = static_cast<Eigen::Index>(j + 1);
        const Eigen::VectorXcd coeffs = basis.leftCols(cols).adjoint() * w;
        w -= basis.leftCols(cols) * coeffs;
      }
      last_beta = w.norm();
      steps = j + 1;
      if (j + 1 == m || last_beta < 1e-13 * scale) break;
      beta.push_back(last_beta);
      basis.col(static_cast<Eigen::Index>(j + 1)) = w / last_beta;
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(steps), static_cast<Eigen::Index>(steps));
    for (std::size_t i = 0; i < steps; ++i) {
      t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = alpha[i];
      if (i + 1 < steps) {
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = beta[i];
        t(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = beta[i];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const auto top = static_cast<Eigen::Index>(steps - 1);
    const double theta = es.eigenvalues()(top);
    const Eigen::VectorXd y = es.eigenvectors().col(top);
    result.value = sign * theta;
    result.residual = std::abs(last_beta * y(top));

    start = basis.leftCols(static_cast<Eigen::Index>(steps)) * y.cast<Complex>();
    start.normalize();
    if (result.residual <= o.relative_tolerance * std::max(1.0, std::abs(theta))) {
      result.converged = true;
      break;
    }
  }
  return result;
}

EigenResult extremal(const Observable& obs, double sign, const EigenOptions& o) {
  if (obs.num_qubits() == 0) throw PreconditionError("observable has no qubits");
  if (obs.num_qubits() > kDefaultQubitCap) {
    throw PreconditionError("observable exceeds the " + std::to_string(kDefaultQubitCap) + "-qubit cap");
  }
  if (obs.num_qubits() <= o.dense_limit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_matrix(obs), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {sign > 0 ? ev(ev.size() - 1) : ev(0), EigenMethod::Exact, 0.0, 0, true};
  }
  return lanczos_top(obs, sign, o);
}

}  // namespace

double separable_bound(const WitnessSpec& spec) {
  validate(spec);
  return static_cast<double>(spec.graph.num_edges());
}

double weyl_upper(const WitnessSpec& spec) {
  validate(spec);
  return static_cast<double>(spec.num_active_terms() * spec.graph.num_edges());
}

double moment_lower_bound(const WitnessSpec& spec) {
  validate(spec);
  if (!as_pq_form(spec)) throw PreconditionError("moment bound applies to W_PQ witnesses only");
  const double t = static_cast<double>(spec.graph.num_edges());
  const double n1 = t;              // <+|W|+>
  const double n2 = t * t + t;      // <+|W^2|+>
  const double n3 = t * t * t + 3 * t * t;  // lower bound on <+|W^3|+>
  const double lambda0_sq = t * t * std::ldexp(1.0, static_cast<int>(spec.graph.num_nodes()));
  return n1 + 2.0 * (n3 / 2 - n1 * n2 + n1 * n1 * n1 / 2) / lambda0_sq;
}

std::string to_string(EigenMethod m) { return m == EigenMethod::Exact ? "exact" : "iterative"; }

EigenResult max_eigenvalue(const Observable& obs, const EigenOptions& options) {
  return extremal(obs, +1.0, options);
}

EigenResult min_eigenvalue(const Observable& obs, const EigenOptions& options) {
  return extremal(obs, -1.0, options);
}

BoundReport bound_report(const WitnessSpec& spec, bool with_spectrum, const EigenOptions& options) {
  BoundReport r;
  r.separable_bound = separable_bound(spec);
  r.weyl_upper = weyl_upper(spec);
  if (as_pq_form(spec)) r.moment_lower = moment_lower_bound(spec);
  if (with_spectrum) {
    const auto obs = build_witness(spec);
    const auto hi = max_eigenvalue(obs, options);
    const auto lo = min_eigenvalue(obs, options);
    r.lambda_max = hi.value;
    r.lambda_min = lo.value;
    r.method = hi.method;
  }
  return r;
}

Verdict verdict(double bound, double expectation, double tolerance) {
  if (!(tolerance >= 0.0)) throw PreconditionError("tolerance must be nonnegative");
  Verdict v;
  v.expectation = expectation;
  v.bound = bound;
  v.upper_violated = expectation > bound + tolerance;
  v.lower_violated = expectation < -bound - tolerance;
  v.margin = std::max(expectation - bound, -bound - expectation);
  return v;
}

Verdict verdict(const WitnessSpec& spec, double expectation, double tolerance) {
  return verdict(separable_bound(spec), expectation, tolerance);
}

double bisep_structural_bound(const WitnessSpec& spec, const Partition& partition) {
  validate(spec);
  const std::size_t n = spec.graph.num_nodes();
  validate_partition(n, partition);
  if (partition.size() < 2) throw PreconditionError("structural bound needs at least two blocks");
  std::vector<std::size_t> block_of(n);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (std::size_t q : partition[b]) block_of[q] = b;
  }
  const double m = static_cast<double>(spec.num_active_terms());
  double bound = 0.0;
  for (const auto& tuple : spec.graph.edges()) {
    std::set<std::size_t> blocks;
    for (std::size_t q : tuple) blocks.insert(block_of[q]);
    // A tuple with every member in its own block factorizes into single-qubit
    // Bloch components and contributes at most 1; anything else is bounded by M.
    bound += blocks.size() == tuple.size() ? 1.0 : m;
  }
  return bound;
}

std::vector<Partition> set_partitions(std::size_t n, std::size_t k) {
  std::vector<Partition> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> label(n, 0);
  // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
  auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (n - i < k - used) return;
    if (i == n) {
      if (used != k) return;
      Partition p(k);
      for (std::size_t q = 0; q < n; ++q) p[label[q]].push_back(q);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t l = 0; l <= used && l < k; ++l) {
      label[i] = l;
      self(self, i + 1, std::max(used, l + 1));
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

namespace {

// Pauli string restricted to one block, in the block's local bit order.
struct LocalPauli {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int y = 0;
  bool identity() const { return x == 0 && z == 0; }
};

class BlockAscent {
 public:
  BlockAscent(const Observable& obs, Partition partition) : obs_(obs), partition_(std::move(partition)) {
    local_.resize(obs.size());
    for (std::size_t t = 0; t < obs.size(); ++t) {
      const auto& p = obs.terms()[t].pauli;
      for (const auto& block : partition_) {
        LocalPauli lp;
        for (std::size_t j = 0; j < block.size(); ++j) {
          const Pauli letter = p[block[j]];
          const std::uint64_t bit = std::uint64_t{1} << j;
          if (letter == Pauli::X || letter == Pauli::Y) lp.x |= bit;
          if (letter == Pauli::Z || letter == Pauli::Y) lp.z |= bit;
          if (letter == Pauli::Y) ++lp.y;
        }
        local_[t].push_back(lp);
      }
    }
  }

  const Partition& partition() const { return partition_; }

  // Runs ascent from `states` in place; returns final <W>.
  double run(std::vector<std::vector<Complex>>& states, std::size_t max_sweeps, double tol, bool& converged) const {
    const std::size_t blocks = partition_.size();
    std::vector<std::vector<double>> factor(obs_.size(), std::vector<double>(blocks, 1.0));
    for (std::size_t t = 0; t < obs_.size(); ++t) {
      for (std::size_t b = 0; b < blocks; ++b) factor[t][b] = block_expectation(local_[t][b], states[b]);
    }
    double value = -std::numeric_limits<double>::infinity();
    converged = false;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
      const double before = value;
      for (std::size_t b = 0; b < blocks; ++b) {
        const auto dim = static_cast<Eigen::Index>(states[b].size());
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::size_t t = 0; t < obs_.size(); ++t) {
          double weight = obs_.terms()[t].coefficient;
          for (std::size_t c = 0; c < blocks; ++c) {
            if (c != b) weight *= factor[t][c];
          }
          if (weight == 0.0) continue;
          const LocalPauli& lp = local_[t][b];
          const Complex phase = weight * i_power(lp.y);
          for (Eigen::Index l = 0; l < dim; ++l) {
            const auto ul = static_cast<std::uint64_t>(l);
            h(static_cast<Eigen::Index>(ul ^ lp.x), l) += (std::popcount(ul & lp.z) & 1) ? -phase : phase;
          }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        value = es.eigenvalues()(dim - 1);
        const auto v = es.eigenvectors().col(dim - 1);
        for (Eigen::Index l = 0; l < dim; ++l) states[b][static_cast<std::size_t>(l)] = v(l);
        for (std::size_t t = 0; t < obs_.size(); ++t) factor[t][b] = block_expectation(local_[t][b], states[b]);
      }
      if (value - before <= tol) {
        converged = true;
        break;
      }
    }
    return value;
  }

 private:
  static double block_expectation(const LocalPauli& lp, const std::vector<Complex>& phi) {
    if (lp.identity()) return 1.0;
    Complex acc = 0.0;
    for (std::size_t l = 0; l < phi.size(); ++l) {
      const Complex v = std::conj(phi[l ^ lp.x]) * phi[l];
      acc += (std::popcount(l & lp.z) & 1) ? -v : v;
    }
    return (acc * i_power(lp.y)).real();
  }

  const Observable& obs_;
  Partition partition_;
  std::vector<std::vector<LocalPauli>> local_;
};

std::vector<Complex> random_block(std::size_t qubits, std::mt19937_64& rng) {
  const std::size_t dim = std::size_t{1} << qubits;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  DensePureParams p;
  for (std::size_t i = 1; i < dim; ++i) {
    p.mixing.push_back(angle(rng));
    p.phases.push_back(angle(rng));
  }
  return dense_pure_amplitudes(p);
}

// Sorts each block's qubits, permuting the local amplitude bits to match.
void canonicalize(Partition& partition, std::vector<std::vector<Complex>>& states) {
  for (std::size_t b = 0; b < partition.size(); ++b) {
    auto& block = partition[b];
    std::vector<std::size_t> order(block.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return block[x] < block[y]; });
    std::vector<Complex> permuted(states[b].size());
    for (std::size_t l = 0; l < permuted.size(); ++l) {
      std::size_t nl = 0;
      for (std::size_t j = 0; j < order.size(); ++j) nl |= ((l >> order[j]) & 1U) << j;
      permuted[nl] = states[b][l];
    }
    std::vector<std::size_t> sorted(block.size());
    for (std::size_t j = 0; j < order.size(); ++j) sorted[j] = block[order[j]];
    block = std::move(sorted);
    states[b] = std::move(permuted);
  }
  // Order blocks by their smallest qubit.
  std::vector<std::size_t> idx(partition.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return partition[x].front() < partition[y].front(); });
  Partition p2;
  std::vector<std::vector<Complex>> s2;
  for (auto i : idx) {
    p2.push_back(partition[i]);
    s2.push_back(states[i]);
  }
  partition = std::move(p2);
  states = std::move(s2);
}

Partition random_partition(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> qubits(n);
  for (std::size_t i = 0; i < n; ++i) qubits[i] = i;
  std::shuffle(qubits.begin(), qubits.end(), rng);
  Partition p(k);
  for (std::size_t i = 0; i < k; ++i) p[i].push_back(qubits[i]);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t i = k; i < n; ++i) p[pick(rng)].push_back(qubits[i]);
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Partition> candidate_partitions(std::size_t n, std::size_t k, const KsepOptions& o) {
  if (n <= o.exhaustive_limit) return set_partitions(n, k);
  std::set<Partition> chosen;
  // Contiguous blocks first: the natural cut for chain-like graphs.
  std::vector<std::size_t> cuts;
  auto contiguous = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    if (chosen.size() >= 4 * o.sampled_partitions) return;
    if (left == 1) {
      Partition p;
      std::size_t prev = 0;
      for (std::size_t c : cuts) {
        p.emplace_back();
        for (std::size_t q = prev; q < c; ++q) p.back().push_back(q);
        prev = c;
      }
      p.emplace_back();
      for (std::size_t q = prev; q < n; ++q) p.back().push_back(q);
      chosen.insert(p);
      return;
    }
    for (std::size_t c = start + 1; c + left - 1 <= n; ++c) {
      cuts.push_back(c);
      self(self, c, left - 1);
      cuts.pop_back();
    }
  };
  contiguous(contiguous, 0, k);
  std::mt19937_64 rng(derive_seed(o.seed, 0xA11CE));
  for (std::size_t i = 0; i < o.sampled_partitions; ++i) chosen.insert(random_partition(n, k, rng));
  return {chosen.begin(), chosen.end()};
}

struct Attempt {
  double value = -std::numeric_limits<double>::infinity();
  Partition partition;
  std::vector<std::vector<Complex>> states;
  bool converged = false;
};

void keep_best(Attempt& best, double value, const Partition& p, std::vector<std::vector<Complex>> states, bool conv) {
  if (value > best.value) {
    best.value = value;
    best.partition = p;
    best.states = std::move(states);
    best.converged = conv;
  }
}

}  // namespace

SeparabilityReport ksep_max(const Observable& obs, std::size_t k, const KsepOptions& o,
                            const SeparabilityReport* warm_start) {
  const std::size_t n = obs.num_qubits();
  if (k < 1 || k > n) throw PreconditionError("k must lie in [1, N]");
  if (n > 16) throw PreconditionError("k-separable search is limited to 16 qubits");

  SeparabilityReport report;
  report.k = k;
  if (k == 1) {
    Partition all(1);
    for (std::size_t q = 0; q < n; ++q) all[0].push_back(q);
    const auto top = max_eigenvalue(obs);
    report.partition = all;
    report.max_expectation = top.value;
    report.converged = top.converged;
    report.heuristic = false;
    report.partitions_tried = 1;
    return report;
  }

  const auto partitions = candidate_partitions(n, k, o);
  std::vector<Attempt> per_partition(partitions.size());
  parallel_for(partitions.size(), [&](std::size_t pi) {
    const BlockAscent ascent(obs, partitions[pi]);
    std::mt19937_64 rng(derive_seed(o.seed, pi));
    for (std::size_t r = 0; r < o.restarts; ++r) {
      std::vector<std::vector<Complex>> states;
      for (const auto& block : partitions[pi]) states.push_back(random_block(block.size(), rng));
      bool conv = false;
      const double v = ascent.run(states, o.max_sweeps, o.tolerance, conv);
      keep_best(per_partition[pi], v, partitions[pi], std::move(states), conv);
    }
  });

  Attempt best;
  for (auto& a : per_partition) keep_best(best, a.value, a.partition, std::move(a.states), a.converged);
  std::size_t restarts = partitions.size() * o.restarts;

  // Merge each pair of blocks of a (k+1)-block solution and ascend from there.
  if (warm_start && warm_start->partition.size() == k + 1 && warm_start->block_states.size() == k + 1) {
    const auto& wp = warm_start->partition;
    for (std::size_t a = 0; a < wp.size(); ++a) {
      for (std::size_t b = a + 1; b < wp.size(); ++b) {
        Partition merged;
        std::vector<std::vector<Complex>> states;
        for (std::size_t c = 0; c < wp.size(); ++c) {
          if (c == a || c == b) continue;
          merged.push_back(wp[c]);
          states.push_back(warm_start->block_states[c]);
        }
        std::vector<std::size_t> joined = wp[a];
        joined.insert(joined.end(), wp[b].begin(), wp[b].end());
        const auto& sa = warm_start->block_states[a];
        const auto& sb = warm_start->block_states[b];
        std::vector<Complex> joint(sa.size() * sb.size());
        for (std::size_t lb = 0; lb < sb.size(); ++lb) {
          for (std::size_t la = 0; la < sa.size(); ++la) joint[la + sa.size() * lb] = sa[la] * sb[lb];
        }
        merged.push_back(joined);
        states.push_back(std::move(joint));
        const BlockAscent ascent(obs, merged);
        bool conv = false;
        const double v = ascent.run(states, o.max_sweeps, o.tolerance, conv);
        ++restarts;
        keep_best(best, v, merged, std::move(states), conv);
      }
    }
  }

  canonicalize(best.partition, best.states);
  report.partition = best.partition;
  report.block_states = best.states;
  report.max_expectation = best.value;
  report.converged = best.converged;
  report.optimizer_restarts = restarts;
  report.partitions_tried = partitions.size();
  return report;
}

std::vector<SeparabilityReport> ksep_hierarchy(const Observable& obs, const KsepOptions& options) {
  std::vector<SeparabilityReport> out;
  const std::size_t n = obs.num_qubits();
  for (std::size_t k = n; k >= 1; --k) {
    const SeparabilityReport* warm = out.empty() ? nullptr : &out.back();
    out.push_back(ksep_max(obs, k, options, warm));
    if (k == 1) break;
  }
  return out;
}

}  // namespace qwit
