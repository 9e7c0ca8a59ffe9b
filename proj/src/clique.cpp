#include "hyperop/clique.hpp"

#include <algorithm>

#include "hyperop/errors.hpp"

namespace hyperop {

void Graph::addEdge(std::uint32_t a, std::uint32_t b) {
  if (a == b || adjacent(a, b)) return;
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  ++edges_;
}

bool Graph::adjacent(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

Graph sampleGnp(std::size_t n, double p, BernoulliSource& coin) {
  Graph g(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (coin.draw(p)) g.addEdge(a, b);
  return g;
}

CliqueSummary cliqueSummary(const Graph& g, int maxDim) {
  CliqueSummary s;
  s.counts.assign(static_cast<std::size_t>(std::max(maxDim, 0)) + 1, 0);
  const auto n = static_cast<std::uint32_t>(g.vertexCount());
  if (n == 0 || maxDim < 0) return s;
  // Extend cliques by higher-numbered common neighbours only, so each
  // clique is produced once.
  std::vector<std::uint32_t> cand;
  auto extend = [&](auto&& self, int dim, const std::vector<std::uint32_t>& candidates) -> void {
    ++s.counts[static_cast<std::size_t>(dim)];
    s.dimension = std::max(s.dimension, dim);
    if (dim == maxDim) return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto v = candidates[i];
      std::vector<std::uint32_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      self(self, dim + 1, next);
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    cand.clear();
    for (auto u : g.neighbours(v))
      if (u > v) cand.push_back(u);
    extend(extend, 0, cand);
  }
  return s;
}

namespace {

void requireGraph(const Hypergraph& g) {
  for (const auto& s : g.simplices())
    if (s.dimension() > 1) throw ContractViolation("clique complex input has a face of dimension > 1");
  if (!g.hasAllVertexEdges())
    throw ContractViolation("clique complex input has an edge endpoint that is not a vertex");
}

bool isClique(const Hypergraph& g, const Simplex& s) {
  const auto v = s.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!g.contains(Simplex{v[i]})) return false;
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!g.contains(Simplex{v[i], v[j]})) return false;
  }
  return true;
}

}  // namespace

Complex cliqueComplex(const Hypergraph& g) {
  requireGraph(g);
  const auto verts = g.complex().vertices();
  if (verts.size() > 20) throw ExactModeUnavailable(verts.size(), 20);
  const Simplex top(std::vector<Vertex>(verts.begin(), verts.end()));
  const Ambient full = AmbientComplex::fromGenerators({top});
  BitSet edges(full->faceCount());
  for (FaceId id = 0; id < full->faceCount(); ++id)
    if (isClique(g, full->face(id))) edges.set(id);
  return Complex::trusted(Hypergraph(full, std::move(edges)));
}

Complex cliqueComplexInL(const Hypergraph& g) {
  requireGraph(g);
  const auto& L = g.complex();
  BitSet edges(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id)
    if (isClique(g, L.face(id))) edges.set(id);
  return Complex::trusted(Hypergraph(g.ambient(), std::move(edges)));
}

}  // namespace hyperop
