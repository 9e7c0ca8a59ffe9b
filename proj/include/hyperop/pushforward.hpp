#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hyperop/distribution.hpp"
#include "hyperop/word.hpp"

namespace hyperop {

using HypergraphMap = std::function<Hypergraph(const Hypergraph&)>;

/// DT(f)(H) = Σ_{T H' = H} f(H').
ExactDistribution pushUnary(const ExactDistribution& f, const HypergraphMap& t);
/// As above for a map into sub-hypergraphs of another ambient.
ExactDistribution pushUnary(const ExactDistribution& f, const Ambient& target,
                            const HypergraphMap& t);
ExactDistribution pushUnary(const ExactDistribution& f, const OperatorWord& w);
EmpiricalDistribution pushUnary(const EmpiricalDistribution& f, const OperatorWord& w);

/// DF(f1, f2)(H) = Σ_{F(H1, H2) = H} f1(H1) f2(H2); F must have arity 2.
ExactDistribution pushBinary(const ExactDistribution& f1, const ExactDistribution& f2,
                             const OperatorWord& F);
/// Pairs sample i of e1 with sample i of e2; both must hold the same count.
EmpiricalDistribution pushBinary(const EmpiricalDistribution& e1, const EmpiricalDistribution& e2,
                                 const OperatorWord& F);

/// DW(f1, ..., ft) for a word of arity t = fs.size(). Sums over the product
/// of the supports.
ExactDistribution pushWord(const OperatorWord& w, std::span<const ExactDistribution> fs);
/// Σ_H DW(f1, ..., ft)(H).
double totalMassCheck(const OperatorWord& w, std::span<const ExactDistribution> fs);

ExactDistribution dExtPower(const ExactDistribution& f, int k);
ExactDistribution dIntPower(const ExactDistribution& f, int k);

/// f(∅) φ_∅ + (1 − f(∅)) φ_L.
ExactDistribution extLimit(const ExactDistribution& f);
/// (1 − f(L)) φ_∅ + f(L) φ_L.
ExactDistribution intLimit(const ExactDistribution& f);

struct ContainmentReport {
  int k = 1;
  std::size_t support = 0;
  // Support elements violating each probability-one containment.
  std::size_t extLowerViolations = 0;  // Ext^{k-1}(γH) ⊆ γ Int^k(H)
  std::size_t extUpperViolations = 0;  // γ Int^k(H) ⊆ Ext^{k+1}(γH)
  std::size_t extIntViolations = 0;    // Ext∘Int(H) ⊆ δH
  double extIntViolationMass = 0.0;
  double probDeltaInIntExt = 0.0;  // P[ΔH ⊆ Int∘Ext(H)]
  double vertexBound = 0.0;        // Σ f(H) over H whose vertices are all 0-edges
  bool inequalityHolds() const { return probDeltaInIntExt >= vertexBound - 1e-12; }
};

ContainmentReport containmentProbabilities(const ExactDistribution& f, int k);

/// f, DT f, (DT)^2 f, ..., (DT)^steps f.
std::vector<ExactDistribution> orbit(const ExactDistribution& f, const HypergraphMap& t, int steps);
/// Number of pairwise-distinct members (TV > tol).
std::size_t countDistinct(std::span<const ExactDistribution> fs, double tol = 1e-12);

struct ChainWitness {
  Hypergraph start;
  std::size_t distinct = 0;  // members of H, T H, T^2 H, ... before the first repeat
};

/// Exhaustive search for the H with the longest strictly changing orbit
/// under Ext (resp. Int); |L| within the exact bound.
ChainWitness longestExtChain(const Ambient& L);
ChainWitness longestIntChain(const Ambient& L);

}  // namespace hyperop
