#include "hyperop/models.hpp"

#include <stdexcept>
#include <string>

#include "hyperop/errors.hpp"
#include "hyperop/operators.hpp"

namespace hyperop {

void requireFaceValues(const AmbientComplex& L, const FaceValues& p) {
  if (static_cast<std::size_t>(p.size()) != L.faceCount())
    throw std::invalid_argument("probability vector has " + std::to_string(p.size()) +
                                " entries for " + std::to_string(L.faceCount()) + " faces");
}

Hypergraph sampleHypergraph(const Ambient& L, const FaceValues& p, BernoulliSource& coin) {
  requireFaceValues(*L, p);
  BitSet edges(L->faceCount());
  for (FaceId id = 0; id < L->faceCount(); ++id)
    if (coin.draw(p[static_cast<Eigen::Index>(id)])) edges.set(id);
  return {L, std::move(edges)};
}

double pmfHypergraph(const Hypergraph& h, const FaceValues& p) {
  const auto& L = h.complex();
  requireFaceValues(L, p);
  double out = 1.0;
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    const double q = p[static_cast<Eigen::Index>(id)];
    out *= h.contains(id) ? q : 1.0 - q;
  }
  return out;
}

Complex sampleComplex(const Ambient& L, const FaceValues& p, BernoulliSource& coin) {
  requireFaceValues(*L, p);
  BitSet edges(L->faceCount());
  // Canonical order is by dimension, so all facets are decided before a face.
  for (FaceId id = 0; id < L->faceCount(); ++id) {
    bool clique = true;
    for (FaceId f : L->facets(id)) clique = clique && edges.test(f);
    if (clique && coin.draw(p[static_cast<Eigen::Index>(id)])) edges.set(id);
  }
  return Complex::trusted(Hypergraph(L, std::move(edges)));
}

double pmfComplex(const Hypergraph& y, const FaceValues& p) {
  if (!y.isComplex()) throw InvalidComplex("pmfComplex needs a downward-closed input");
  const auto& L = y.complex();
  requireFaceValues(L, p);
  double out = 1.0;
  y.edges().forEach([&](std::size_t id) { out *= p[static_cast<Eigen::Index>(id)]; });
  externalFaces(y).edges().forEach(
      [&](std::size_t id) { out *= 1.0 - p[static_cast<Eigen::Index>(id)]; });
  return out;
}

}  // namespace hyperop
