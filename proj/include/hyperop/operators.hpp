#pragma once

#include "hyperop/hypergraph.hpp"

namespace hyperop {

// The three generators. For H ⊆ L:
//   Δ H = {σ ∈ L | σ ⊆ τ for some τ ∈ H}          (smallest complex containing H)
//   δ H = {σ ∈ L | every nonempty τ ⊆ σ is in H}  (largest complex inside H)
//   γ H = L \ H
Complex closureDelta(const Hypergraph& h);
Complex interiorDelta(const Hypergraph& h);
Hypergraph complementGamma(const Hypergraph& h);

/// Ext = Δγδγ, computed as the closure of the maximal faces containing an edge of H.
Complex ext(const Hypergraph& h);
/// Int = δγΔγ, computed as the faces disjoint from every edge of γH.
Complex interior(const Hypergraph& h);

/// Literal four-fold compositions; used to cross-check ext() and interior().
Complex extByComposition(const Hypergraph& h);
Complex interiorByComposition(const Hypergraph& h);

/// Throw AmbientMismatch on different ambients.
Hypergraph unionH(const Hypergraph& a, const Hypergraph& b);
Hypergraph intersectH(const Hypergraph& a, const Hypergraph& b);
inline Hypergraph operator|(const Hypergraph& a, const Hypergraph& b) { return unionH(a, b); }
inline Hypergraph operator&(const Hypergraph& a, const Hypergraph& b) { return intersectH(a, b); }

/// max(L) ∩ H.
Hypergraph maximalPart(const Hypergraph& h);

/// E(Y): faces not in Y whose every proper nonempty face lies in Y.
Hypergraph externalFaces(const Hypergraph& y);

/// d-simplices of L whose proper nonempty faces all lie in K.
Hypergraph cliques(const Hypergraph& k, int d);

/// The complex spanned by the 0-hyperedges of H (equals δγδγ H).
Complex spannedByVertices(const Hypergraph& h);

}  // namespace hyperop
