#include "hyperop/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperop/models.hpp"
#include "hyperop/operators.hpp"
#include "hyperop/pushforward.hpp"

namespace hyperop {

namespace {

Eigen::Index at(FaceId id) { return static_cast<Eigen::Index>(id); }

void sameLength(const FaceValues& a, const FaceValues& b) {
  if (a.size() != b.size()) throw std::invalid_argument("probability vectors differ in length");
}

}  // namespace

FaceValues transformDeltaUpper(const AmbientComplex& L, const FaceValues& p) {
  requireFaceValues(L, p);
  FaceValues out(p.size());
  for (FaceId t = 0; t < L.faceCount(); ++t) {
    double miss = 1.0;
    for (FaceId s : L.superfaces(t)) miss *= 1.0 - p[at(s)];
    out[at(t)] = 1.0 - miss;
  }
  return out;
}

FaceValues transformDeltaLower(const AmbientComplex& L, const FaceValues& p) {
  requireFaceValues(L, p);
  FaceValues out(p.size());
  for (FaceId t = 0; t < L.faceCount(); ++t) {
    double hit = 1.0;
    for (FaceId s : L.subfaces(t)) hit *= p[at(s)];
    out[at(t)] = hit;
  }
  return out;
}

FaceValues transformGamma(const FaceValues& p) { return FaceValues::Ones(p.size()) - p; }

FaceValues transformCap(const FaceValues& a, const FaceValues& b) {
  sameLength(a, b);
  return a.cwiseProduct(b);
}

FaceValues transformCup(const FaceValues& a, const FaceValues& b) {
  sameLength(a, b);
  return FaceValues::Ones(a.size()) -
         (FaceValues::Ones(a.size()) - a).cwiseProduct(FaceValues::Ones(a.size()) - b);
}

double Theorem2Report::maxTv() const {
  double m = 0.0;
  for (const auto& c : claims) m = std::max(m, c.tv);
  return m;
}

const Theorem2Claim& Theorem2Report::claim(const std::string& name) const {
  for (const auto& c : claims)
    if (c.name == name) return c;
  throw std::out_of_range("no claim named " + name);
}

Theorem2Report verifyTheorem2(const Ambient& L, const FaceValues& p, const FaceValues& q) {
  const auto barP = ExactDistribution::productLaw(L, p);
  const auto barQ = ExactDistribution::productLaw(L, q);
  Theorem2Report rep;

  auto record = [&](std::string name, const ExactDistribution& pushed,
                    const ExactDistribution& target, const FaceValues& param) {
    Theorem2Claim c;
    c.name = std::move(name);
    c.marginalError = (marginals(pushed) - param).cwiseAbs().maxCoeff();
    if (target.domain() == Domain::Complexes) {
      c.supportOk = pushed.massOffComplexes() <= 1e-12;
      ExactDistribution tagged(pushed.ambient(), pushed.mass(), Domain::Complexes);
      c.tv = totalVariation(tagged, target);
    } else {
      c.tv = totalVariation(pushed, target);
    }
    rep.claims.push_back(std::move(c));
  };

  const FaceValues pGamma = transformGamma(p);
  record("gamma", pushUnary(barP, [](const Hypergraph& h) { return complementGamma(h); }),
         ExactDistribution::productLaw(L, pGamma), pGamma);

  const FaceValues pUp = transformDeltaUpper(*L, p);
  const auto pushedDelta =
      pushUnary(barP, [](const Hypergraph& h) { return Hypergraph(closureDelta(h)); });
  record("Delta", pushedDelta, ExactDistribution::complexLaw(L, pUp), pUp);

  const FaceValues pLow = transformDeltaLower(*L, p);
  const auto pushedLower =
      pushUnary(barP, [](const Hypergraph& h) { return Hypergraph(interiorDelta(h)); });
  record("delta", pushedLower, ExactDistribution::complexLaw(L, pLow), pLow);

  const FaceValues pCap = transformCap(p, q);
  const OperatorWord meet = OperatorWord::meet(OperatorWord::identity(), OperatorWord::identity());
  record("cap", pushBinary(barP, barQ, meet), ExactDistribution::productLaw(L, pCap), pCap);

  const FaceValues pCup = transformCup(p, q);
  const OperatorWord join = OperatorWord::join(OperatorWord::identity(), OperatorWord::identity());
  record("cup", pushBinary(barP, barQ, join), ExactDistribution::productLaw(L, pCup), pCup);

  rep.tvDeltaLowerVsSameP =
      totalVariation(ExactDistribution(L, pushedLower.mass(), Domain::Complexes),
                     ExactDistribution::complexLaw(L, p));
  const auto capComplex = pushBinary(ExactDistribution::complexLaw(L, p),
                                     ExactDistribution::complexLaw(L, q), meet);
  rep.tvComplexCap = totalVariation(ExactDistribution(L, capComplex.mass(), Domain::Complexes),
                                    ExactDistribution::complexLaw(L, pCap));
  return rep;
}

}  // namespace hyperop
