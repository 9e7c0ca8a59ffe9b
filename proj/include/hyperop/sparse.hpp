#pragma once

#include <span>
#include <vector>

#include "hyperop/hypergraph.hpp"
#include "hyperop/rng.hpp"

namespace hyperop {

/// Per-dimension parameters on Δ_n (n vertices): the base vector p with
/// p_0 = 1 and the derived p' (closure) and p'' (interior) vectors.
struct DerivedDims {
  int n = 0;
  std::vector<double> p;
  std::vector<double> pPrime;
  std::vector<double> pDoublePrime;
};

/// p may be shorter than n; missing dimensions are 0. Throws
/// ContractViolation unless p_0 = 1, std::invalid_argument on values
/// outside [0,1] or on more than n entries.
DerivedDims derivedDims(int n, std::span<const double> p);

/// A complex or hypergraph on vertices 1..n stored by dimension, each level
/// in lexicographic order. Used where Δ_n is too large to materialise.
struct SparseFaces {
  int n = 0;
  std::vector<std::vector<Simplex>> byDimension;

  std::size_t count(int dim) const;
  std::size_t size() const;
  int dimension() const;  // -1 when empty
  /// Rebuilds as a hypergraph of L; throws NotAFace for faces outside L.
  Hypergraph toHypergraph(const Ambient& L) const;
};

struct Algorithm1Output {
  SparseFaces hypergraph;  // H(n, p) restricted to dimension <= r
  SparseFaces complex;     // Y(n, p') restricted to dimension <= r
};

/// H: each k-subset of [n], k <= r+1, independently with p_{k-1}. Y:
/// clique filling with p' up to dimension r. Both use `coin` in that order.
Algorithm1Output algorithm1Truncated(int n, std::span<const double> p, int r,
                                     BernoulliSource& coin);

/// δ(H) where H is drawn only up to dimension r.
SparseFaces algorithm2Truncated(int n, std::span<const double> p, int r, BernoulliSource& coin);

/// Faces of H(n, p) up to dimension r, streamed in (dim, lex) order.
SparseFaces sampleHypergraphTruncated(int n, std::span<const double> p, int r,
                                      BernoulliSource& coin);
/// Y(n, q) up to dimension r by clique filling.
SparseFaces sampleComplexTruncated(int n, std::span<const double> q, int r, BernoulliSource& coin);
/// δ restricted to the stored faces.
SparseFaces interiorOf(const SparseFaces& h);

/// Prob[dim ΔH(n, p) <= r] = Π_{k > r} (1 - p_k)^{C(n, k+1)}, in log space.
double deltaDimensionProbability(int n, std::span<const double> p, int r);

/// C(n, k(r+1)) (1 - p1)^{C(n,2) - C(k(r+1),2)}: upper bound on the
/// probability that X_{G(n,p1)} has at most k r-faces.
double countingBound(int n, int k, int r, double p1);

}  // namespace hyperop
