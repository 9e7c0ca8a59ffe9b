#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "hyperop/enumerate.hpp"
#include "hyperop/hypergraph.hpp"
#include "hyperop/probability.hpp"
#include "hyperop/rng.hpp"

namespace hyperop {

enum class Domain { Hypergraphs, Complexes };

/// A probability function on the 2^|L| sub-hypergraphs, as a dense vector
/// over the canonical index. Complex-valued laws reuse the same index and
/// carry zero mass off the sub-complex lattice.
class ExactDistribution {
 public:
  /// `mass` must have 2^|L| entries. The exact-mode bound is enforced by
  /// the factories, not here.
  ExactDistribution(Ambient L, Eigen::VectorXd mass, Domain domain = Domain::Hypergraphs);

  static ExactDistribution pointMass(const Hypergraph& h, std::size_t bound = kDefaultExactBound);
  static ExactDistribution uniform(const Ambient& L, std::size_t bound = kDefaultExactBound);
  /// P̄_{L,p}.
  static ExactDistribution productLaw(const Ambient& L, const FaceValues& p,
                                      std::size_t bound = kDefaultExactBound);
  /// P_{L,p}, supported on sub-complexes.
  static ExactDistribution complexLaw(const Ambient& L, const FaceValues& p,
                                      std::size_t bound = kDefaultExactBound);
  /// Flat Dirichlet draw over all sub-hypergraphs.
  static ExactDistribution random(const Ambient& L, CounterRng& rng,
                                  std::size_t bound = kDefaultExactBound);

  const Ambient& ambient() const { return ambient_; }
  Domain domain() const { return domain_; }
  const Eigen::VectorXd& mass() const { return mass_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(mass_.size()); }

  double operator()(const Hypergraph& h) const;
  double at(std::uint64_t index) const { return mass_[static_cast<Eigen::Index>(index)]; }
  double total() const { return mass_.sum(); }

  /// Mass carried by hypergraphs that are not complexes.
  double massOffComplexes() const;
  /// Same vector re-tagged; throws ContractViolation if more than `tol`
  /// mass sits off the complex lattice.
  ExactDistribution asComplexes(double tol = 1e-12) const;

  template <typename Pred>
  double probabilityOf(Pred&& pred) const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < mass_.size(); ++i)
      if (mass_[i] != 0.0 && pred(Hypergraph::fromIndex(ambient_, static_cast<std::uint64_t>(i))))
        s += mass_[i];
    return s;
  }

 private:
  Ambient ambient_;
  Eigen::VectorXd mass_;
  Domain domain_;
};

/// A sample list with its multiset of counts. Sample order is kept so that
/// binary pushforwards can pair independent streams index by index.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(Ambient L, Domain domain = Domain::Hypergraphs);

  void add(const Hypergraph& h);

  const Ambient& ambient() const { return ambient_; }
  Domain domain() const { return domain_; }
  std::uint64_t sampleCount() const { return samples_.size(); }
  const std::vector<BitSet>& samples() const { return samples_; }
  Hypergraph sample(std::size_t i) const { return {ambient_, samples_[i]}; }
  const std::map<BitSet, std::uint64_t>& counts() const { return counts_; }
  double frequency(const Hypergraph& h) const;
  /// Per-face inclusion frequency, indexed by FaceId.
  Eigen::VectorXd marginals() const;

  ExactDistribution toExact(std::size_t bound = kDefaultExactBound) const;

 private:
  Ambient ambient_;
  Domain domain_;
  std::vector<BitSet> samples_;
  std::map<BitSet, std::uint64_t> counts_;
};

/// ½ Σ|f − g|. Throws AmbientMismatch on different ambients and
/// std::invalid_argument on different domains.
double totalVariation(const ExactDistribution& f, const ExactDistribution& g);
double totalVariation(const EmpiricalDistribution& f, const ExactDistribution& g);

/// Per-face marginals P[σ ∈ H] of an exact law.
Eigen::VectorXd marginals(const ExactDistribution& f);

}  // namespace hyperop
