#pragma once

#include <string>
#include <vector>

#include "hyperop/distribution.hpp"
#include "hyperop/probability.hpp"

namespace hyperop {

/// p'(τ) = 1 − Π_{σ ⊇ τ} (1 − p(σ)): the probability that τ ∈ ΔH under P̄_{L,p}.
FaceValues transformDeltaUpper(const AmbientComplex& L, const FaceValues& p);
/// p''(τ) = Π_{σ ⊆ τ} p(σ): the probability that τ ∈ δH under P̄_{L,p}.
FaceValues transformDeltaLower(const AmbientComplex& L, const FaceValues& p);
FaceValues transformGamma(const FaceValues& p);
FaceValues transformCap(const FaceValues& a, const FaceValues& b);
FaceValues transformCup(const FaceValues& a, const FaceValues& b);

struct Theorem2Claim {
  std::string name;
  double tv = 0.0;             // TV between the pushforward and the closed-form family
  double marginalError = 0.0;  // max |P[σ ∈ output] − closed-form parameter(σ)|
  bool supportOk = true;       // complexes only, where the claim maps into 𝒦(L)
};

struct Theorem2Report {
  std::vector<Theorem2Claim> claims;  // gamma, Delta, delta, cap, cup
  /// Informational: TV(Dδ P̄_{L,p}, P_{L,p}) and TV(D∩(P_{L,p}, P_{L,q}), P_{L,pq}).
  double tvDeltaLowerVsSameP = 0.0;
  double tvComplexCap = 0.0;
  double maxTv() const;
  const Theorem2Claim& claim(const std::string& name) const;
};

/// Exact check of the five pushforward transforms on P̄_{L,p} (and the pair
/// (P̄_{L,p}, P̄_{L,q}) for ∩ and ∪).
Theorem2Report verifyTheorem2(const Ambient& L, const FaceValues& p, const FaceValues& q);

}  // namespace hyperop
