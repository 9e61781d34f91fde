#include "qwit/qaoa.hpp"

#include <numbers>
#include <random>

#include "qwit/error.hpp"
#include "qwit/optimize.hpp"
#include "qwit/parallel.hpp"

namespace qwit {

QaoaOptimum maximize_qaoa(const ProblemHamiltonian& h, const Observable& obs, std::size_t depth,
                          std::size_t starts, std::uint64_t seed) {
  if (depth == 0 || starts == 0) throw PreconditionError("depth and starts must be at least 1");
  if (obs.num_qubits() != h.graph.num_nodes()) throw PreconditionError("observable size does not match graph");
  const QaoaSimulator sim(h);
  auto unpack = [depth](std::span<const double> x) {
    return QaoaParams{{x.begin(), x.begin() + static_cast<std::ptrdiff_t>(depth)},
                      {x.begin() + static_cast<std::ptrdiff_t>(depth), x.end()}};
  };
  const Objective f = [&](std::span<const double> x) { return expectation(obs, sim.state(unpack(x))); };

  std::vector<OptimumResult> runs(starts);
  parallel_for(starts, [&](std::size_t i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::vector<double> x0(2 * depth);
    for (auto& v : x0) v = angle(rng);
    runs[i] = nelder_mead_maximize(f, x0, 0.3, 1e-12, 4000 * depth);
  });

  QaoaOptimum best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const auto& r : runs) {
    best.evaluations += r.evaluations;
    if (r.value > best.value) {
      best.value = r.value;
      best.params = unpack(r.x);
    }
  }
  return best;
}

std::vector<double> linspace(double start, double stop, std::size_t steps) {
  if (steps == 0) throw PreconditionError("steps must be at least 1");
  if (steps == 1) return {start};
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return out;
}

}  // namespace qwit
