#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperop/ambient.hpp"
#include "hyperop/bitset.hpp"

namespace hyperop {

/// A sub-hypergraph H ⊆ L: an arbitrary subset of the ambient's faces,
/// stored as a bitset over canonical face indices.
class Hypergraph {
 public:
  Hypergraph(Ambient ambient, BitSet edges);
  /// Throws NotAFace for any simplex outside L.
  Hypergraph(Ambient ambient, std::span<const Simplex> edges);
  Hypergraph(Ambient ambient, std::initializer_list<Simplex> edges)
      : Hypergraph(std::move(ambient), std::span<const Simplex>(edges.begin(), edges.size())) {}

  static Hypergraph empty(Ambient ambient);
  static Hypergraph full(Ambient ambient);
  /// Sub-hypergraph with index `pattern` (bit i = face i); requires |L| <= 64.
  static Hypergraph fromIndex(Ambient ambient, std::uint64_t pattern);

  const Ambient& ambient() const { return ambient_; }
  const AmbientComplex& complex() const { return *ambient_; }
  const BitSet& edges() const { return edges_; }

  bool contains(FaceId id) const { return edges_.test(id); }
  bool contains(const Simplex& s) const;
  std::size_t size() const { return edges_.count(); }
  bool isEmpty() const { return edges_.none(); }
  bool isFull() const { return edges_.all(); }

  /// Edges in canonical order.
  std::vector<Simplex> simplices() const;
  /// Union of all edges' vertices, ascending.
  std::vector<Vertex> vertexSet() const;
  /// Every vertex of every edge is itself a 0-dimensional edge.
  bool hasAllVertexEdges() const;
  bool isComplex() const;
  bool isSubsetOf(const Hypergraph& other) const;

  /// Index in the canonical exact-mode enumeration; requires |L| <= 64.
  std::uint64_t index() const { return edges_.pattern(); }

  std::string toString() const;

  bool operator==(const Hypergraph& other) const;

 private:
  Ambient ambient_;
  BitSet edges_;
};

/// A hypergraph that is downward closed within its ambient.
class Complex : public Hypergraph {
 public:
  /// Throws InvalidComplex if `h` is not downward closed.
  explicit Complex(const Hypergraph& h);
  static Complex empty(Ambient ambient);
  static Complex full(Ambient ambient);
  /// No closure check; for operators whose output is a complex by construction.
  static Complex trusted(Hypergraph h);

 private:
  struct Trusted {};
  Complex(Trusted, Hypergraph h) : Hypergraph(std::move(h)) {}
};

void requireSameAmbient(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperop
