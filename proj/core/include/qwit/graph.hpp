#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qwit {

using Tuple = std::vector<std::size_t>;

/// Simple k-uniform hypergraph on nodes [0, n). Every edge is a strictly
/// increasing k-tuple and edges are stored in lexicographic order without
/// duplicates, so two graphs with the same edge set compare equal.
class GeneralizedGraph {
 public:
  GeneralizedGraph() = default;

  std::size_t num_nodes() const noexcept { return n_nodes_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Tuple>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Nodes sharing at least one edge with `node` (k = 2 graphs only).
  std::vector<std::size_t> neighbors(std::size_t node) const;
  bool has_edge(std::size_t u, std::size_t v) const;

  friend bool operator==(const GeneralizedGraph&, const GeneralizedGraph&) = default;

 private:
  friend GeneralizedGraph build_graph(std::size_t, std::size_t, std::vector<Tuple>);
  std::size_t n_nodes_ = 0;
  std::size_t arity_ = 0;
  std::vector<Tuple> edges_;
};

/// Canonicalizes and validates an edge list. Throws PreconditionError on an
/// out-of-range index, a repeated index inside a tuple, a tuple of the wrong
/// length, or an empty edge set. Duplicate tuples (in any order) collapse.
GeneralizedGraph build_graph(std::size_t n, std::size_t k, std::vector<Tuple> tuples);

// Common families. All are k = 2 except single_tuple_graph.
GeneralizedGraph line_graph(std::size_t n);
GeneralizedGraph ring_graph(std::size_t n);
GeneralizedGraph complete_graph(std::size_t n);
GeneralizedGraph disjoint_pairs_graph(std::size_t n);
/// One generalized edge covering all n nodes (k = n).
GeneralizedGraph single_tuple_graph(std::size_t n);
/// Edge i of the lexicographic list of all C(n,2) pairs is present when bit i
/// of `mask` is set. Used to enumerate every graph on a small vertex set.
GeneralizedGraph graph_from_pair_mask(std::size_t n, std::uint64_t mask);

}  // namespace qwit
