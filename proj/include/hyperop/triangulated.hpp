#pragma once

#include "hyperop/hypergraph.hpp"

namespace hyperop {

/// The standard triangulation of a triangle with lattice vertices v(i,j),
/// i, j >= 0, i + j <= m. Upward triangles {(i,j),(i+1,j),(i,j+1)} and
/// downward triangles {(i+1,j),(i,j+1),(i+1,j+1)}. m = 6 is the figure
/// example used throughout the tests.
class TriangulatedTriangle {
 public:
  explicit TriangulatedTriangle(int m);

  int side() const { return m_; }
  const Ambient& ambient() const { return ambient_; }
  /// Vertex id of lattice point (i, j): rows by j, 1-based.
  Vertex vertex(int i, int j) const;

  /// All faces of L lying in the closed sub-triangle with corners
  /// (i0,j0), (i0+s,j0), (i0,j0+s).
  Complex closedRegion(int i0, int j0, int s) const;
  /// The faces of that sub-triangle's boundary cycle: vertices on its sides
  /// and edges with both endpoints on the same side.
  Hypergraph regionBoundary(int i0, int j0, int s) const;
  /// closedRegion minus regionBoundary.
  Hypergraph openRegion(int i0, int j0, int s) const;

 private:
  bool inRegion(Vertex v, int i0, int j0, int s) const;
  int m_;
  Ambient ambient_;
  std::vector<std::pair<int, int>> coords_;  // by vertex id - 1
};

Ambient buildTriangulatedTriangle(int m);

}  // namespace hyperop
