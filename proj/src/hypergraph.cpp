#include "hyperop/hypergraph.hpp"

#include <algorithm>

#include "hyperop/errors.hpp"

namespace hyperop {

Hypergraph::Hypergraph(Ambient ambient, BitSet edges)
    : ambient_(std::move(ambient)), edges_(std::move(edges)) {
  if (edges_.size() != ambient_->faceCount())
    throw std::invalid_argument("edge bitset width does not match ambient face count");
}

Hypergraph::Hypergraph(Ambient ambient, std::span<const Simplex> edges)
    : ambient_(std::move(ambient)), edges_(ambient_->faceCount()) {
  for (const auto& s : edges) edges_.set(ambient_->idOf(s));
}

Hypergraph Hypergraph::empty(Ambient ambient) {
  const std::size_t m = ambient->faceCount();
  return Hypergraph(std::move(ambient), BitSet(m));
}

Hypergraph Hypergraph::full(Ambient ambient) {
  const std::size_t m = ambient->faceCount();
  return Hypergraph(std::move(ambient), BitSet::full(m));
}

Hypergraph Hypergraph::fromIndex(Ambient ambient, std::uint64_t pattern) {
  const std::size_t m = ambient->faceCount();
  if (m > 64) throw ExactModeUnavailable(m, 64);
  return Hypergraph(std::move(ambient), BitSet::fromPattern(m, pattern));
}

bool Hypergraph::contains(const Simplex& s) const {
  auto id = ambient_->find(s);
  return id && edges_.test(*id);
}

std::vector<Simplex> Hypergraph::simplices() const {
  std::vector<Simplex> out;
  edges_.forEach([&](std::size_t id) { out.push_back(ambient_->face(id)); });
  return out;
}

std::vector<Vertex> Hypergraph::vertexSet() const {
  BitSet mask(ambient_->vertexCount());
  edges_.forEach([&](std::size_t id) { mask |= ambient_->vertexMask(id); });
  std::vector<Vertex> out;
  mask.forEach([&](std::size_t i) { out.push_back(ambient_->vertices()[i]); });
  return out;
}

bool Hypergraph::hasAllVertexEdges() const {
  for (Vertex v : vertexSet())
    if (!edges_.test(ambient_->vertexFace(v))) return false;
  return true;
}

bool Hypergraph::isComplex() const {
  bool closed = true;
  edges_.forEach([&](std::size_t id) {
    for (FaceId f : ambient_->facets(id))
      if (!edges_.test(f)) closed = false;
  });
  return closed;
}

bool Hypergraph::isSubsetOf(const Hypergraph& other) const {
  requireSameAmbient(*this, other);
  return edges_.isSubsetOf(other.edges_);
}

std::string Hypergraph::toString() const {
  std::string s = "{";
  bool first = true;
  edges_.forEach([&](std::size_t id) {
    if (!first) s += ',';
    first = false;
    s += ambient_->face(id).toString();
  });
  return s + "}";
}

bool Hypergraph::operator==(const Hypergraph& other) const {
  return sameAmbient(ambient_, other.ambient_) && edges_ == other.edges_;
}

Complex::Complex(const Hypergraph& h) : Hypergraph(h) {
  if (!h.isComplex()) throw InvalidComplex("hypergraph is not downward closed: " + h.toString());
}

Complex Complex::empty(Ambient ambient) { return trusted(Hypergraph::empty(std::move(ambient))); }
Complex Complex::full(Ambient ambient) { return trusted(Hypergraph::full(std::move(ambient))); }
Complex Complex::trusted(Hypergraph h) { return Complex(Trusted{}, std::move(h)); }

void requireSameAmbient(const Hypergraph& a, const Hypergraph& b) {
  if (!sameAmbient(a.ambient(), b.ambient())) throw AmbientMismatch();
}

}  // namespace hyperop
