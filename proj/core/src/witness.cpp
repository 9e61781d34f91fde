#include "qwit/witness.hpp"

#include <cmath>

#include "qwit/error.hpp"

namespace qwit {

std::size_t WitnessSpec::num_active_terms() const noexcept {
  std::size_t m = 0;
  for (const auto& t : terms) m += t.active ? 1 : 0;
  return m;
}

void validate(const WitnessSpec& spec) {
  const std::size_t k = spec.graph.arity();
  if (spec.graph.num_edges() == 0) throw PreconditionError("witness graph has no edges");
  // With k = 1 a single qubit reaches sqrt(M) per tuple, so |E_k| is no bound.
  if (k < 2) throw PreconditionError("witness tuples need k >= 2");
  if (spec.terms.empty() || spec.terms.size() > 3) {
    throw PreconditionError("witness needs between 1 and 3 terms per edge");
  }
  for (const auto& t : spec.terms) {
    if (t.letters.size() != k) {
      throw PreconditionError("term has " + std::to_string(t.letters.size()) +
                              " letters but tuples have " + std::to_string(k) + " members");
    }
    for (Pauli p : t.letters) {
      if (p == Pauli::I) throw PreconditionError("witness terms may not contain identity letters");
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t a = 0; a < spec.terms.size(); ++a) {
      if (!spec.terms[a].active) continue;
      for (std::size_t b = a + 1; b < spec.terms.size(); ++b) {
        if (!spec.terms[b].active) continue;
        if (spec.terms[a].letters[j] == spec.terms[b].letters[j]) {
          throw PreconditionError("terms " + std::to_string(a) + " and " + std::to_string(b) +
                                  " share letter " + to_char(spec.terms[a].letters[j]) +
                                  " at tuple position " + std::to_string(j));
        }
      }
    }
  }
}

Observable build_witness(const WitnessSpec& spec) {
  validate(spec);
  const std::size_t n = spec.graph.num_nodes();
  std::vector<Term> terms;
  terms.reserve(spec.graph.num_edges() * spec.num_active_terms());
  for (const auto& edge : spec.graph.edges()) {
    for (const auto& t : spec.terms) {
      if (!t.active) continue;
      terms.push_back({1.0, PauliString::on_qubits(n, edge, t.letters)});
    }
  }
  return Observable(n, std::move(terms));
}

WitnessSpec pq_spec(const GeneralizedGraph& graph, Pauli p, Pauli q) {
  if (p == q) throw PreconditionError("W_PQ requires P != Q");
  if (p == Pauli::I || q == Pauli::I) throw PreconditionError("W_PQ letters must be X, Y or Z");
  const std::size_t k = graph.arity();
  return {graph, {{true, std::vector<Pauli>(k, p)}, {true, std::vector<Pauli>(k, q)}}};
}

WitnessSpec xyz_spec(const GeneralizedGraph& graph) {
  const std::size_t k = graph.arity();
  return {graph,
          {{true, std::vector<Pauli>(k, Pauli::X)},
           {true, std::vector<Pauli>(k, Pauli::Y)},
           {true, std::vector<Pauli>(k, Pauli::Z)}}};
}

Observable w_pq(const GeneralizedGraph& graph, Pauli p, Pauli q) {
  return build_witness(pq_spec(graph, p, q));
}

Observable w_xyz(const GeneralizedGraph& graph) { return build_witness(xyz_spec(graph)); }

Observable bell_observable() {
  const double s = std::sqrt(2.0);
  return Observable(2, {{s, PauliString::parse("XX")}, {s, PauliString::parse("ZZ")}});
}

std::optional<std::pair<Pauli, Pauli>> as_pq_form(const WitnessSpec& spec) {
  std::vector<Pauli> uniform;
  for (const auto& t : spec.terms) {
    if (!t.active) continue;
    if (t.letters.empty()) return std::nullopt;
    for (Pauli p : t.letters) {
      if (p != t.letters.front()) return std::nullopt;
    }
    uniform.push_back(t.letters.front());
  }
  if (uniform.size() != 2 || uniform[0] == uniform[1]) return std::nullopt;
  return std::pair{uniform[0], uniform[1]};
}

GcsResult gcs_check(std::span<const std::vector<double>> vectors) {
  if (vectors.empty()) throw PreconditionError("generalized Cauchy-Schwarz needs at least one vector");
  const std::size_t len = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != len) throw PreconditionError("vectors differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    double prod = 1.0;
    for (const auto& v : vectors) prod *= v[i];
    sum += prod;
  }
  double rhs = 1.0;
  for (const auto& v : vectors) {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    rhs *= std::sqrt(sq);
  }
  return {std::abs(sum), rhs};
}

}  // namespace qwit
