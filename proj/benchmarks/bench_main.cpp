#include <benchmark/benchmark.h>

#include <cmath>

#include "qwit/analytic.hpp"
#include "qwit/certify.hpp"
#include "qwit/potency.hpp"
#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

namespace {

qwit::QaoaParams p1(double gamma, double beta) { return {{gamma}, {beta}}; }

void BM_QaoaState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const qwit::QaoaSimulator sim(qwit::maxcut_hamiltonian(qwit::ring_graph(n)));
  for (auto _ : state) benchmark::DoNotOptimize(sim.state(p1(0.3, 0.4)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QaoaState)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_WitnessExpectation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graph = qwit::ring_graph(n);
  const auto w = qwit::w_pq(graph, qwit::Pauli::X, qwit::Pauli::Z);
  const auto psi = qwit::qaoa_state(qwit::maxcut_hamiltonian(graph), p1(0.3, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(qwit::expectation(w, psi));
}
BENCHMARK(BM_WitnessExpectation)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedFormChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qwit::linear_chain_total(n, 0.3, 0.4));
}
BENCHMARK(BM_ClosedFormChain)->Arg(10)->Arg(1000);

void BM_MaxEigenvalue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = qwit::w_pq(qwit::line_graph(n), qwit::Pauli::X, qwit::Pauli::Z);
  for (auto _ : state) benchmark::DoNotOptimize(qwit::max_eigenvalue(w));
}
BENCHMARK(BM_MaxEigenvalue)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_KsepHierarchy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = qwit::w_pq(qwit::line_graph(n), qwit::Pauli::X, qwit::Pauli::Z);
  for (auto _ : state) benchmark::DoNotOptimize(qwit::ksep_hierarchy(w));
}
BENCHMARK(BM_KsepHierarchy)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PotencyQaoa(benchmark::State& state) {
  const auto graph = qwit::ring_graph(8);
  const auto spec = qwit::pq_spec(graph, qwit::Pauli::X, qwit::Pauli::Z);
  const auto h = qwit::maxcut_hamiltonian(graph);
  for (auto _ : state) benchmark::DoNotOptimize(qwit::potency_qaoa(spec, h, 1, 1000, 1));
}
BENCHMARK(BM_PotencyQaoa)->Unit(benchmark::kMillisecond);

void BM_RingIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwit::heaviside_ring_integral(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_RingIntegral)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
