#include "qwit/potency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qwit/analytic.hpp"
#include "qwit/error.hpp"
#include "qwit/parallel.hpp"
#include "qwit/spec_io.hpp"

namespace qwit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool detects(double value, double bound, const PotencyOptions& o) {
  return value > bound + o.tolerance || (o.two_sided && value < -bound - o.tolerance);
}

void finish(PotencyEstimate& e, const std::vector<PotencySample>& samples, bool keep) {
  e.samples = samples.size();
  e.detected = static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const auto& s) { return s.detected; }));
  e.fraction = static_cast<double>(e.detected) / static_cast<double>(e.samples);
  e.std_error = std::sqrt(e.fraction * (1.0 - e.fraction) / static_cast<double>(e.samples));
  if (keep) e.records = samples;
}

}  // namespace

PotencyEstimate potency_qaoa(const WitnessSpec& spec, const ProblemHamiltonian& h, std::size_t depth,
                             std::size_t samples, std::uint64_t seed, const PotencyOptions& options) {
  if (samples == 0) throw PreconditionError("samples must be at least 1");
  if (depth == 0) throw PreconditionError("QAOA depth must be at least 1");
  if (spec.graph.num_nodes() != h.graph.num_nodes()) {
    throw PreconditionError("witness and Hamiltonian act on different qubit counts");
  }
  const Observable w = build_witness(spec);
  const QaoaSimulator sim(h);

  PotencyEstimate e;
  e.seed = seed;
  e.family = "qaoa";
  e.depth = depth;
  e.spec_hash = spec_hash(spec);
  e.bound = static_cast<double>(spec.graph.num_edges());

  std::vector<PotencySample> out(samples);
  parallel_for(samples, [&](std::size_t i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    QaoaParams params;
    for (std::size_t j = 0; j < depth; ++j) params.gammas.push_back(angle(rng));
    for (std::size_t j = 0; j < depth; ++j) params.betas.push_back(angle(rng));
    const double v = expectation(w, sim.state(params));
    out[i] = {std::move(params.gammas), std::move(params.betas), v, detects(v, e.bound, options)};
  });
  finish(e, out, options.keep_samples);
  return e;
}

PotencyEstimate potency_haar(const WitnessSpec& spec, std::size_t samples, std::uint64_t seed,
                             const PotencyOptions& options) {
  if (samples == 0) throw PreconditionError("samples must be at least 1");
  const Observable w = build_witness(spec);
  PotencyEstimate e;
  e.seed = seed;
  e.family = "haar";
  e.spec_hash = spec_hash(spec);
  e.bound = static_cast<double>(spec.graph.num_edges());

  std::vector<PotencySample> out(samples);
  parallel_for(samples, [&](std::size_t i) {
    const double v = expectation(w, haar_random(spec.graph.num_nodes(), derive_seed(seed, i)));
    out[i].expectation = v;
    out[i].detected = detects(v, e.bound, options);
  });
  finish(e, out, options.keep_samples);
  return e;
}

double heaviside_ring_integral(std::size_t resolution) {
  if (resolution < 100) throw PreconditionError("resolution must be at least 100 per axis");
  const double step = kTwoPi / static_cast<double>(resolution);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < resolution; ++i) {
    const double gamma = step * static_cast<double>(i);
    for (std::size_t j = 0; j < resolution; ++j) {
      if (ring_edge(gamma, step * static_cast<double>(j)) > 1.0) ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(resolution * resolution);
}

ProblemHamiltonian random_z2_hamiltonian(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n > kDefaultQubitCap) throw PreconditionError("n must lie in [2, 24]");
  auto graph = complete_graph(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> couplings(graph.num_edges());
  for (auto& j : couplings) j = coin(rng) ? 1.0 : -1.0;
  return make_hamiltonian(graph, std::move(couplings));
}

PotencySummary table_i_protocol(std::size_t n, std::size_t n_hams, std::size_t samples_per_ham,
                                std::size_t depth, std::uint64_t seed) {
  if (n_hams == 0) throw PreconditionError("need at least one Hamiltonian");
  const auto spec = pq_spec(single_tuple_graph(n), Pauli::X, Pauli::Z);
  PotencySummary s;
  for (std::size_t h = 0; h < n_hams; ++h) {
    const auto ham = random_z2_hamiltonian(n, derive_seed(seed, 2 * h));
    s.fractions.push_back(potency_qaoa(spec, ham, depth, samples_per_ham, derive_seed(seed, 2 * h + 1)).fraction);
  }
  s.mean = std::accumulate(s.fractions.begin(), s.fractions.end(), 0.0) / static_cast<double>(n_hams);
  s.max = *std::max_element(s.fractions.begin(), s.fractions.end());
  s.min = *std::min_element(s.fractions.begin(), s.fractions.end());
  return s;
}

}  // namespace qwit
