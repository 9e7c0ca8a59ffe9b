#include "hyperop/resample.hpp"

#include "hyperop/enumerate.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/models.hpp"

namespace hyperop {

namespace {

bool facetsIn(const AmbientComplex& L, FaceId id, const BitSet& s) {
  for (FaceId f : L.facets(id))
    if (!s.test(f)) return false;
  return true;
}

}  // namespace

Complex complexUnionResample(const Complex& k1, const Complex& k2, const FaceValues& p1,
                             const FaceValues& p2, BernoulliSource& coin, ResampleRule rule) {
  requireSameAmbient(k1, k2);
  const auto& L = k1.complex();
  requireFaceValues(L, p1);
  requireFaceValues(L, p2);
  BitSet y = k1.edges() | k2.edges();
  const BitSet& a = k1.edges();
  const BitSet& b = k2.edges();
  // Canonical order is by dimension, so a face's facets are final when it is reached.
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    if (L.dimensionOf(id) == 0 || y.test(id) || !facetsIn(L, id, y)) continue;
    const auto i = static_cast<Eigen::Index>(id);
    const bool ext1 = facetsIn(L, id, a);  // id ∉ K1 since id ∉ y
    const bool ext2 = facetsIn(L, id, b);
    double q;
    if (ext1 && ext2) continue;
    if (rule == ResampleRule::Literal) {
      if (ext1 || ext2) continue;
      q = 1.0 - (1.0 - p1[i]) * (1.0 - p2[i]);
    } else if (ext1) {
      q = p2[i];
    } else if (ext2) {
      q = p1[i];
    } else {
      q = 1.0 - (1.0 - p1[i]) * (1.0 - p2[i]);
    }
    if (coin.draw(q)) y.set(id);
  }
  return Complex::trusted(Hypergraph(k1.ambient(), std::move(y)));
}

ExactDistribution resampleLaw(const Ambient& L, const FaceValues& p1, const FaceValues& p2,
                              ResampleRule rule) {
  const auto law1 = ExactDistribution::complexLaw(L, p1);
  const auto law2 = ExactDistribution::complexLaw(L, p2);
  const auto complexes = subComplexPatterns(*L);
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(law1.size()));
  for (auto i : complexes) {
    if (law1.at(i) == 0.0) continue;
    const Complex k1 = Complex::trusted(Hypergraph::fromIndex(L, i));
    for (auto j : complexes) {
      const double w = law1.at(i) * law2.at(j);
      if (w == 0.0) continue;
      const Complex k2 = Complex::trusted(Hypergraph::fromIndex(L, j));
      const auto outcomes = enumerateOutcomes([&](BernoulliSource& coin) {
        return complexUnionResample(k1, k2, p1, p2, coin, rule).index();
      });
      for (const auto& [idx, pr] : outcomes) m[static_cast<Eigen::Index>(idx)] += w * pr;
    }
  }
  return {L, std::move(m), Domain::Complexes};
}

}  // namespace hyperop
