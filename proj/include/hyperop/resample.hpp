#pragma once

#include "hyperop/distribution.hpp"
#include "hyperop/hypergraph.hpp"
#include "hyperop/probability.hpp"
#include "hyperop/rng.hpp"

namespace hyperop {

/// How a face that is external to the growing union is treated.
///   Corrected: external to K1 only -> draw with p2; to K2 only -> p1;
///              to neither -> 1 − (1 − p1)(1 − p2); to both -> never added.
///   Literal:   only faces external to neither are drawn, with 1 − (1 − p1)(1 − p2).
/// Only Corrected turns independent draws from P_{L,p1}, P_{L,p2} into a draw
/// from P_{L, 1 − (1 − p1)(1 − p2)}.
enum class ResampleRule { Corrected, Literal };

Complex complexUnionResample(const Complex& k1, const Complex& k2, const FaceValues& p1,
                             const FaceValues& p2, BernoulliSource& coin,
                             ResampleRule rule = ResampleRule::Corrected);

/// Exact law of the resampler's output when K1 ~ P_{L,p1}, K2 ~ P_{L,p2}.
ExactDistribution resampleLaw(const Ambient& L, const FaceValues& p1, const FaceValues& p2,
                              ResampleRule rule = ResampleRule::Corrected);

}  // namespace hyperop
