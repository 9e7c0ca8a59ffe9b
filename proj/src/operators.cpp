#include "hyperop/operators.hpp"

namespace hyperop {

Complex closureDelta(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet out(L.faceCount());
  h.edges().forEach([&](std::size_t id) {
    for (FaceId s : L.subfaces(id)) out.set(s);
  });
  return Complex::trusted(Hypergraph(h.ambient(), std::move(out)));
}

Complex interiorDelta(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet out(L.faceCount());
  // Faces come in canonical order, so checking facets against the partial
  // result is equivalent to checking every subface against H.
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    if (!h.contains(id)) continue;
    bool ok = true;
    for (FaceId f : L.facets(id)) ok = ok && out.test(f);
    if (ok) out.set(id);
  }
  return Complex::trusted(Hypergraph(h.ambient(), std::move(out)));
}

Hypergraph complementGamma(const Hypergraph& h) { return Hypergraph(h.ambient(), ~h.edges()); }

Complex ext(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet tops(L.faceCount());
  h.edges().forEach([&](std::size_t id) {
    for (FaceId s : L.superfaces(id))
      if (L.isMaximal(s)) tops.set(s);
  });
  return closureDelta(Hypergraph(h.ambient(), std::move(tops)));
}

Complex interior(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet touched(L.vertexCount());
  for (FaceId id = 0; id < L.faceCount(); ++id)
    if (!h.contains(id)) touched |= L.vertexMask(id);
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id)
    if (!L.vertexMask(id).intersects(touched)) out.set(id);
  return Complex::trusted(Hypergraph(h.ambient(), std::move(out)));
}

Complex extByComposition(const Hypergraph& h) {
  return closureDelta(complementGamma(interiorDelta(complementGamma(h))));
}

Complex interiorByComposition(const Hypergraph& h) {
  return interiorDelta(complementGamma(closureDelta(complementGamma(h))));
}

Hypergraph unionH(const Hypergraph& a, const Hypergraph& b) {
  requireSameAmbient(a, b);
  return Hypergraph(a.ambient(), a.edges() | b.edges());
}

Hypergraph intersectH(const Hypergraph& a, const Hypergraph& b) {
  requireSameAmbient(a, b);
  return Hypergraph(a.ambient(), a.edges() & b.edges());
}

Hypergraph maximalPart(const Hypergraph& h) {
  return Hypergraph(h.ambient(), h.edges() & h.complex().maximalFaces());
}

Hypergraph externalFaces(const Hypergraph& y) {
  const auto& L = y.complex();
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    if (y.contains(id)) continue;
    bool boundaryIn = true;
    for (FaceId f : L.subfaces(id)) boundaryIn = boundaryIn && (f == id || y.contains(f));
    if (boundaryIn) out.set(id);
  }
  return Hypergraph(y.ambient(), std::move(out));
}

Hypergraph cliques(const Hypergraph& k, int d) {
  const auto& L = k.complex();
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    if (L.dimensionOf(id) != d) continue;
    bool ok = true;
    for (FaceId s : L.subfaces(id))
      if (s != id && !k.contains(s)) ok = false;
    if (ok) out.set(id);
  }
  return Hypergraph(k.ambient(), std::move(out));
}

Complex spannedByVertices(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet present(L.vertexCount());
  for (std::size_t i = 0; i < L.vertexCount(); ++i)
    if (h.contains(L.vertexFace(L.vertices()[i]))) present.set(i);
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id)
    if (L.vertexMask(id).isSubsetOf(present)) out.set(id);
  return Complex::trusted(Hypergraph(h.ambient(), std::move(out)));
}

}  // namespace hyperop
