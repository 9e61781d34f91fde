#include <algorithm>
#include <numeric>

#include "qwit/error.hpp"
#include "qwit/graph.hpp"

namespace qwit {

GeneralizedGraph build_graph(std::size_t n, std::size_t k, std::vector<Tuple> tuples) {
  if (k == 0) throw PreconditionError("tuple arity must be at least 1");
  if (k > n) throw PreconditionError("tuple arity exceeds node count");
  if (tuples.empty()) throw PreconditionError("graph has no edges");
  for (auto& t : tuples) {
    if (t.size() != k) {
      throw PreconditionError("tuple has " + std::to_string(t.size()) + " indices, expected " +
                              std::to_string(k));
    }
    for (std::size_t i : t) {
      if (i >= n) {
        throw PreconditionError("index " + std::to_string(i) + " out of range for " +
                                std::to_string(n) + " nodes");
      }
    }
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
      throw PreconditionError("duplicate index within a tuple");
    }
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

  GeneralizedGraph g;
  g.n_nodes_ = n;
  g.arity_ = k;
  g.edges_ = std::move(tuples);
  return g;
}

std::vector<std::size_t> GeneralizedGraph::neighbors(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) {
    if (std::find(e.begin(), e.end(), node) == e.end()) continue;
    for (std::size_t v : e) {
      if (v != node) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GeneralizedGraph::has_edge(std::size_t u, std::size_t v) const {
  Tuple key{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

GeneralizedGraph line_graph(std::size_t n) {
  if (n < 2) throw PreconditionError("line graph needs at least 2 nodes");
  std::vector<Tuple> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, 2, std::move(e));
}

GeneralizedGraph ring_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("ring graph needs at least 3 nodes");
  std::vector<Tuple> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, 2, std::move(e));
}

GeneralizedGraph complete_graph(std::size_t n) {
  if (n < 2) throw PreconditionError("complete graph needs at least 2 nodes");
  std::vector<Tuple> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return build_graph(n, 2, std::move(e));
}

GeneralizedGraph disjoint_pairs_graph(std::size_t n) {
  if (n < 2) throw PreconditionError("disjoint pairs need at least 2 nodes");
  std::vector<Tuple> e;
  for (std::size_t i = 0; i + 1 < n; i += 2) e.push_back({i, i + 1});
  return build_graph(n, 2, std::move(e));
}

GeneralizedGraph single_tuple_graph(std::size_t n) {
  Tuple all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return build_graph(n, n, {std::move(all)});
}

GeneralizedGraph graph_from_pair_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Tuple> e;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (bit < 64 && ((mask >> bit) & 1U)) e.push_back({i, j});
    }
  }
  return build_graph(n, 2, std::move(e));
}

}  // namespace qwit
