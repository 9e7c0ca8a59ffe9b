#pragma once

#include <optional>
#include <vector>

#include "hyperop/hypergraph.hpp"

namespace hyperop {

/// A sequence of faces of L with nonempty consecutive intersections.
struct SimplexPath {
  std::vector<FaceId> faces;

  std::size_t length() const { return faces.size(); }
  bool isValid(const AmbientComplex& L) const;
  /// Every face is a maximal face of L.
  bool isBroad(const AmbientComplex& L) const;
};

// Distances count simplices, not hops: d(σ, σ) = 1 and a path σ, τ with
// σ ∩ τ ≠ ∅ has length 2. diam L >= 1.

/// std::nullopt when a and b lie in different components.
std::optional<int> distance(const AmbientComplex& L, FaceId a, FaceId b);
std::optional<int> distance(const AmbientComplex& L, const Simplex& a, const Simplex& b);
/// One shortest path from a to b (BFS witness); nullopt if unreachable.
std::optional<SimplexPath> geodesic(const AmbientComplex& L, FaceId a, FaceId b);
/// All distances from a; -1 marks unreachable faces.
std::vector<int> distancesFrom(const AmbientComplex& L, FaceId a);
/// Throws Unreachable when L is disconnected or empty.
int diameter(const AmbientComplex& L);
/// A pair realising the diameter (first in canonical order).
std::pair<FaceId, FaceId> diametralPair(const AmbientComplex& L);

/// Δ{σ ∈ L | v ∈ σ}.
Complex closedStar(const Ambient& L, Vertex v);
/// ∪_{τ ∈ H} ∪_{v ∈ τ} St(v) = Δ{σ | σ ∩ τ ≠ ∅ for some τ ∈ H}.
Complex nbd(const Hypergraph& h);
/// {τ ∈ L | Nbd(τ) ⊆ H}: the union of all H' with Nbd(H') ⊆ H.
Hypergraph nbdInv(const Hypergraph& h);
/// The literal union over every H' ⊆ L with Nbd(H') ⊆ H; exponential, |L| <= 20.
Hypergraph nbdInvByUnion(const Hypergraph& h);

/// k-fold composition, k >= 0 (k = 0 is the identity).
Hypergraph extPower(const Hypergraph& h, int k);
Hypergraph intPower(const Hypergraph& h, int k);

/// Ext^k via broad paths of maximal faces starting on a face containing an edge of H.
Hypergraph extPowerByPaths(const Hypergraph& h, int k);
/// Int^k as γ of the endpoints of paths of length k starting next to γH.
Hypergraph intPowerByPaths(const Hypergraph& h, int k);

/// r: least k with Ext^k(γH) = L. t: least k with Int^k(H) = ∅.
/// An index that never reaches its target (H = L, or disconnected L) is
/// reported as 0 with its `defined` flag cleared.
struct PowerIndexPair {
  int r = 0;
  int t = 0;
  bool rDefined = true;
  bool tDefined = true;
};

PowerIndexPair minimalPowers(const Hypergraph& h);

}  // namespace hyperop
