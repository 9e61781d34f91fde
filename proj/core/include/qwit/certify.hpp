#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

namespace qwit {

/// |E_k|: the largest |<W>| any fully separable state reaches.
double separable_bound(const WitnessSpec& spec);
/// M |E_k| from Weyl's inequality, M = number of active terms.
double weyl_upper(const WitnessSpec& spec);

/// Moment-based lower bound on lambda_max for W_PQ specs, evaluated with the
/// analytic |+>^N moments N1/m = t, N2/m = t^2 + t, N3/m >= t^3 + 3t^2 and
/// lambda_0 = t sqrt(2^N), t = |E_k|. Throws PreconditionError otherwise.
double moment_lower_bound(const WitnessSpec& spec);

enum class EigenMethod { Exact, Iterative };
std::string to_string(EigenMethod m);

struct EigenOptions {
  std::size_t dense_limit = 8;   // largest N solved by dense diagonalization
  double relative_tolerance = 1e-8;
  std::size_t krylov_dim = 64;
  std::size_t max_restarts = 200;
  std::uint64_t seed = 0x51D3C0DEULL;
};

struct EigenResult {
  double value = 0.0;
  EigenMethod method = EigenMethod::Exact;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// Largest eigenvalue. Dense Hermitian solve up to dense_limit qubits,
/// otherwise restarted Lanczos seeded near |+>^N. Non-convergence is
/// reported through `converged` and `residual`.
EigenResult max_eigenvalue(const Observable& obs, const EigenOptions& options = {});
EigenResult min_eigenvalue(const Observable& obs, const EigenOptions& options = {});

struct BoundReport {
  double separable_bound = 0.0;  // Lambda_max = +|E_k|, Lambda_min = -|E_k|
  double weyl_upper = 0.0;
  std::optional<double> moment_lower;
  std::optional<double> lambda_max;
  std::optional<double> lambda_min;
  EigenMethod method = EigenMethod::Exact;
};

BoundReport bound_report(const WitnessSpec& spec, bool with_spectrum, const EigenOptions& options = {});

struct Verdict {
  double expectation = 0.0;
  double bound = 0.0;
  bool upper_violated = false;
  bool lower_violated = false;
  /// Distance past the nearer threshold; positive exactly when a side is violated
  /// before tolerance is applied.
  double margin = 0.0;
  bool entangled() const noexcept { return upper_violated || lower_violated; }
};

inline constexpr double kAnalyticTolerance = 1e-6;

/// Compares against +/- bound. Values within `tolerance` of a threshold are
/// inconclusive.
Verdict verdict(double separable_bound, double expectation, double tolerance = kAnalyticTolerance);
Verdict verdict(const WitnessSpec& spec, double expectation, double tolerance = kAnalyticTolerance);

/// M (sum of within-block tuples) + (tuples touching more than one block): an
/// upper bound on <W> over states separable across `partition`.
double bisep_structural_bound(const WitnessSpec& spec, const Partition& partition);

struct KsepOptions {
  std::size_t restarts = 8;
  std::uint64_t seed = 1;
  std::size_t exhaustive_limit = 6;      // enumerate every partition up to this N
  std::size_t sampled_partitions = 24;   // random partitions tried above the limit
  std::size_t max_sweeps = 400;
  double tolerance = 1e-12;
};

struct SeparabilityReport {
  std::size_t k = 0;
  Partition partition;  // blocks of the best state found
  double max_expectation = 0.0;
  std::size_t optimizer_restarts = 0;
  std::size_t partitions_tried = 0;
  bool converged = false;
  bool heuristic = true;  // best found, a lower bound on the true maximum
  std::vector<std::vector<Amplitude>> block_states;
};

/// Largest <W> found over pure states that factor into k blocks, maximizing
/// over partitions and block states (block coordinate ascent: each block is
/// replaced by the top eigenvector of its effective operator). k = 1 returns
/// lambda_max.
SeparabilityReport ksep_max(const Observable& obs, std::size_t k, const KsepOptions& options = {},
                            const SeparabilityReport* warm_start = nullptr);

/// Reports for k = N down to 1, each warm-started from the merged k+1 optimum
/// so the maxima are nonincreasing in k.
std::vector<SeparabilityReport> ksep_hierarchy(const Observable& obs, const KsepOptions& options = {});

/// All partitions of [0, n) into exactly k non-empty blocks.
std::vector<Partition> set_partitions(std::size_t n, std::size_t k);

}  // namespace qwit
