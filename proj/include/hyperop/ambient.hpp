#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperop/bitset.hpp"
#include "hyperop/simplex.hpp"

namespace hyperop {

using FaceId = std::size_t;

class AmbientComplex;
using Ambient = std::shared_ptr<const AmbientComplex>;

/// The fixed finite simplicial complex L that every hypergraph lives in.
///
/// Faces are indexed 0..|L|-1 in canonical (dimension, lexicographic) order.
/// Per face we keep its vertex mask, its nonempty subfaces, its superfaces and
/// its facets; all operators are phrased in terms of these index lists.
class AmbientComplex {
 public:
  /// Closes `generators` downward. The empty set is never a face.
  static Ambient fromGenerators(std::span<const Simplex> generators);
  static Ambient fromGenerators(std::initializer_list<Simplex> generators);
  /// The full simplex on vertices 1..n (n >= 1), i.e. Δ with n vertices.
  static Ambient fullSimplex(std::size_t vertices);

  std::size_t faceCount() const { return faces_.size(); }
  std::size_t vertexCount() const { return vertices_.size(); }
  int dimension() const { return dimension_; }

  const Simplex& face(FaceId id) const { return faces_[id]; }
  std::span<const Simplex> faces() const { return faces_; }
  std::optional<FaceId> find(const Simplex& s) const;
  /// Throws NotAFace when `s` is not in L.
  FaceId idOf(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  std::span<const Vertex> vertices() const { return vertices_; }
  /// Face id of the 0-simplex {v}; throws NotAFace if v is not a vertex.
  FaceId vertexFace(Vertex v) const;

  const BitSet& vertexMask(FaceId id) const { return masks_[id]; }
  std::span<const FaceId> subfaces(FaceId id) const { return subfaces_[id]; }
  std::span<const FaceId> superfaces(FaceId id) const { return superfaces_[id]; }
  std::span<const FaceId> facets(FaceId id) const { return facets_[id]; }
  int dimensionOf(FaceId id) const { return faces_[id].dimension(); }

  bool isMaximal(FaceId id) const { return maximal_.test(id); }
  const BitSet& maximalFaces() const { return maximal_; }
  /// Maximal faces in canonical order (the generators of canonical .cx output).
  std::vector<Simplex> maximalSimplices() const;

  bool meets(FaceId a, FaceId b) const { return masks_[a].intersects(masks_[b]); }

  /// Faces of dimension <= r, as a new ambient complex.
  Ambient skeleton(int r) const;

  bool operator==(const AmbientComplex& other) const { return faces_ == other.faces_; }

 private:
  explicit AmbientComplex(std::vector<Simplex> closedSortedFaces);

  std::vector<Simplex> faces_;
  std::vector<Vertex> vertices_;
  std::unordered_map<Simplex, FaceId, SimplexHash> index_;
  std::vector<BitSet> masks_;
  std::vector<std::vector<FaceId>> subfaces_;
  std::vector<std::vector<FaceId>> superfaces_;
  std::vector<std::vector<FaceId>> facets_;
  BitSet maximal_;
  int dimension_ = -1;
};

/// Same object or structurally equal face lists.
bool sameAmbient(const Ambient& a, const Ambient& b);

}  // namespace hyperop
