#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qwit/graph.hpp"
#include "qwit/pauli.hpp"

namespace qwit {

/// One of the (at most three) Pauli products placed on every generalized
/// edge. `letters[j]` is the Pauli on the j-th member of each tuple.
struct WitnessTerm {
  bool active = true;  // alpha_m in {0, 1}
  std::vector<Pauli> letters;
};

/// Witness family member: for every edge <i_1..i_k> and every active term m,
/// the product of letters[j] on qubit i_j. Unit coefficients throughout.
struct WitnessSpec {
  GeneralizedGraph graph;
  std::vector<WitnessTerm> terms;

  std::size_t num_active_terms() const noexcept;
};

/// Checks k >= 2, M <= 3, letter counts, non-identity letters, and that at every
/// position the active terms use pairwise distinct letters.
void validate(const WitnessSpec& spec);

Observable build_witness(const WitnessSpec& spec);

WitnessSpec pq_spec(const GeneralizedGraph& graph, Pauli p, Pauli q);
WitnessSpec xyz_spec(const GeneralizedGraph& graph);

Observable w_pq(const GeneralizedGraph& graph, Pauli p, Pauli q);
Observable w_xyz(const GeneralizedGraph& graph);
/// sqrt(2) (X(x)X + Z(x)Z) on two qubits.
Observable bell_observable();

/// When the spec is W_PQ (two active terms, each a uniform letter, P != Q),
/// returns the pair; otherwise nullopt.
std::optional<std::pair<Pauli, Pauli>> as_pq_form(const WitnessSpec& spec);

struct GcsResult {
  double lhs = 0.0;  // |sum_i prod_j x^(j)_i|
  double rhs = 0.0;  // prod_j ||x^(j)||
};

/// Both sides of the generalized Cauchy-Schwarz inequality for a family of
/// equal-length real vectors. lhs <= rhs holds for every input.
GcsResult gcs_check(std::span<const std::vector<double>> vectors);

}  // namespace qwit
