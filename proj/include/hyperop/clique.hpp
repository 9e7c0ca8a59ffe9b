#pragma once

#include <cstdint>
#include <vector>

#include "hyperop/hypergraph.hpp"
#include "hyperop/rng.hpp"

namespace hyperop {

/// Simple undirected graph on vertices 0..n-1, adjacency as sorted lists.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n) {}
  std::size_t vertexCount() const { return adj_.size(); }
  std::size_t edgeCount() const { return edges_; }
  void addEdge(std::uint32_t a, std::uint32_t b);
  bool adjacent(std::uint32_t a, std::uint32_t b) const;
  const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const { return adj_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
  std::size_t edges_ = 0;
};

/// G(n, p): one draw per pair in lexicographic pair order.
Graph sampleGnp(std::size_t n, double p, BernoulliSource& coin);

struct CliqueSummary {
  /// counts[k] = number of (k+1)-cliques, i.e. k-faces of X_G, for k <= maxDim.
  std::vector<std::uint64_t> counts;
  /// dim X_G, capped at maxDim (so "> maxDim - 1" is detectable).
  int dimension = -1;
};

/// Counts faces of the clique complex X_G up to dimension maxDim.
CliqueSummary cliqueSummary(const Graph& g, int maxDim);

/// X_G for a graph given as a hypergraph of 0- and 1-edges all of whose
/// endpoints are 0-edges. The result lives in the full simplex on the
/// ambient's vertices (at most 20 vertices). Throws ContractViolation on a
/// non-graph input.
Complex cliqueComplex(const Hypergraph& g);
/// X_{G,L} = X_G ∩ L, inside G's own ambient L.
Complex cliqueComplexInL(const Hypergraph& g);

}  // namespace hyperop
