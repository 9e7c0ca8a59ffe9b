#pragma once

#include "hyperop/hypergraph.hpp"
#include "hyperop/probability.hpp"
#include "hyperop/rng.hpp"

namespace hyperop {

// p is resolved per face (FaceValues of length |L|).

/// P̄_{L,p}: each face of L independently, canonical order, one draw per face.
Hypergraph sampleHypergraph(const Ambient& L, const FaceValues& p, BernoulliSource& coin);
double pmfHypergraph(const Hypergraph& h, const FaceValues& p);

/// P_{L,p}: vertices first, then every clique of the current complex one
/// dimension at a time. A face is drawn only once all its facets are in.
Complex sampleComplex(const Ambient& L, const FaceValues& p, BernoulliSource& coin);
/// Product of p over Y times product of 1 - p over E(Y).
/// Throws InvalidComplex when y is not downward closed.
double pmfComplex(const Hypergraph& y, const FaceValues& p);

/// Throws std::invalid_argument if p has the wrong length for L.
void requireFaceValues(const AmbientComplex& L, const FaceValues& p);

}  // namespace hyperop
