#include "hyperop/triangulated.hpp"

#include <stdexcept>

namespace hyperop {

TriangulatedTriangle::TriangulatedTriangle(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("triangulated triangle needs m >= 1");
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i + j <= m; ++i) coords_.emplace_back(i, j);
  std::vector<Simplex> triangles;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i + j < m; ++i) {
      triangles.push_back(Simplex{vertex(i, j), vertex(i + 1, j), vertex(i, j + 1)});
      if (i + j + 2 <= m)
        triangles.push_back(Simplex{vertex(i + 1, j), vertex(i, j + 1), vertex(i + 1, j + 1)});
    }
  ambient_ = AmbientComplex::fromGenerators(triangles);
}

Vertex TriangulatedTriangle::vertex(int i, int j) const {
  if (i < 0 || j < 0 || i + j > m_) throw std::out_of_range("lattice point outside triangle");
  // Rows j' < j hold (m+1) + m + ... + (m-j+2) points.
  const int before = j * (m_ + 1) - j * (j - 1) / 2;
  return static_cast<Vertex>(before + i + 1);
}

bool TriangulatedTriangle::inRegion(Vertex v, int i0, int j0, int s) const {
  const auto [i, j] = coords_[v - 1];
  return i >= i0 && j >= j0 && (i - i0) + (j - j0) <= s;
}

Complex TriangulatedTriangle::closedRegion(int i0, int j0, int s) const {
  const auto& L = *ambient_;
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    bool inside = true;
    for (Vertex v : L.face(id).vertices()) inside = inside && inRegion(v, i0, j0, s);
    if (inside) out.set(id);
  }
  return Complex(Hypergraph(ambient_, std::move(out)));
}

Hypergraph TriangulatedTriangle::regionBoundary(int i0, int j0, int s) const {
  const auto& L = *ambient_;
  auto onSide = [&](Vertex v, int side) {
    const auto [i, j] = coords_[v - 1];
    if (!inRegion(v, i0, j0, s)) return false;
    switch (side) {
      case 0:
        return i == i0;
      case 1:
        return j == j0;
      default:
        return (i - i0) + (j - j0) == s;
    }
  };
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    if (L.dimensionOf(id) > 1) continue;
    for (int side = 0; side < 3; ++side) {
      bool all = true;
      for (Vertex v : L.face(id).vertices()) all = all && onSide(v, side);
      if (all) out.set(id);
    }
  }
  return Hypergraph(ambient_, std::move(out));
}

Hypergraph TriangulatedTriangle::openRegion(int i0, int j0, int s) const {
  return Hypergraph(ambient_, closedRegion(i0, j0, s).edges() - regionBoundary(i0, j0, s).edges());
}

Ambient buildTriangulatedTriangle(int m) { return TriangulatedTriangle(m).ambient(); }

}  // namespace hyperop
