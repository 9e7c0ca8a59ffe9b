#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hyperop {

using Vertex = std::uint32_t;

/// A nonempty finite vertex set, kept strictly ascending.
///
/// Ordering is canonical: by dimension first, then lexicographically by the
/// vertex sequence. This is the face order used everywhere (enumeration
/// indices, file output, sampling order).
class Simplex {
 public:
  /// Sorts the input; throws std::invalid_argument on empty input or duplicates.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  bool contains(Vertex v) const;
  bool isFaceOf(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  /// All codimension-one faces (empty for a vertex).
  std::vector<Simplex> facets() const;

  std::string toString() const;

  bool operator==(const Simplex&) const = default;
  std::strong_ordering operator<=>(const Simplex& other) const;

 private:
  struct Unchecked {};
  Simplex(Unchecked, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}
  friend Simplex makeSimplexUnchecked(std::vector<Vertex> sorted);

  std::vector<Vertex> vertices_;
};

/// Caller guarantees `sorted` is strictly ascending and nonempty.
Simplex makeSimplexUnchecked(std::vector<Vertex> sorted);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace hyperop
