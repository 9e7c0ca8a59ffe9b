#include "hyperop/ambient.hpp"

#include <algorithm>
#include <set>

#include "hyperop/errors.hpp"

namespace hyperop {

namespace {

void addAllSubsets(const Simplex& s, std::set<Simplex>& out) {
  const auto v = s.vertices();
  const std::size_t k = v.size();
  // Faces of dimension > 20 would make the closure astronomically large anyway.
  if (k > 24) throw std::invalid_argument("generator dimension too large to close downward");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) sub.push_back(v[i]);
    out.insert(makeSimplexUnchecked(std::move(sub)));
  }
}

}  // namespace

Ambient AmbientComplex::fromGenerators(std::span<const Simplex> generators) {
  std::set<Simplex> closed;
  for (const auto& g : generators) {
    if (closed.contains(g)) continue;
    addAllSubsets(g, closed);
  }
  return Ambient(new AmbientComplex(std::vector<Simplex>(closed.begin(), closed.end())));
}

Ambient AmbientComplex::fromGenerators(std::initializer_list<Simplex> generators) {
  return fromGenerators(std::span<const Simplex>(generators.begin(), generators.size()));
}

Ambient AmbientComplex::fullSimplex(std::size_t vertices) {
  if (vertices == 0) throw std::invalid_argument("full simplex needs at least one vertex");
  std::vector<Vertex> v(vertices);
  for (std::size_t i = 0; i < vertices; ++i) v[i] = static_cast<Vertex>(i + 1);
  const Simplex top(std::move(v));
  return fromGenerators(std::span<const Simplex>(&top, 1));
}

AmbientComplex::AmbientComplex(std::vector<Simplex> faces) : faces_(std::move(faces)) {
  const std::size_t m = faces_.size();
  for (const auto& f : faces_) {
    if (f.size() == 1) vertices_.push_back(f.front());
    dimension_ = std::max(dimension_, f.dimension());
  }
  std::sort(vertices_.begin(), vertices_.end());

  std::unordered_map<Vertex, std::size_t> local;
  for (std::size_t i = 0; i < vertices_.size(); ++i) local.emplace(vertices_[i], i);

  index_.reserve(m);
  masks_.reserve(m);
  for (FaceId id = 0; id < m; ++id) {
    index_.emplace(faces_[id], id);
    BitSet mask(vertices_.size());
    for (Vertex v : faces_[id].vertices()) mask.set(local.at(v));
    masks_.push_back(std::move(mask));
  }

  subfaces_.resize(m);
  superfaces_.resize(m);
  facets_.resize(m);
  for (FaceId id = 0; id < m; ++id) {
    const auto v = faces_[id].vertices();
    const std::size_t k = v.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) sub.push_back(v[i]);
      const FaceId sid = index_.at(makeSimplexUnchecked(std::move(sub)));
      subfaces_[id].push_back(sid);
      superfaces_[sid].push_back(id);
      if (std::popcount(mask) + 1 == static_cast<int>(k)) facets_[id].push_back(sid);
    }
    std::sort(subfaces_[id].begin(), subfaces_[id].end());
    std::sort(facets_[id].begin(), facets_[id].end());
  }
  maximal_ = BitSet(m);
  for (FaceId id = 0; id < m; ++id) {
    std::sort(superfaces_[id].begin(), superfaces_[id].end());
    if (superfaces_[id].size() == 1) maximal_.set(id);
  }
}

std::optional<FaceId> AmbientComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FaceId AmbientComplex::idOf(const Simplex& s) const {
  if (auto id = find(s)) return *id;
  throw NotAFace("simplex " + s.toString() + " is not a face of the ambient complex");
}

FaceId AmbientComplex::vertexFace(Vertex v) const { return idOf(Simplex{v}); }

std::vector<Simplex> AmbientComplex::maximalSimplices() const {
  std::vector<Simplex> out;
  maximal_.forEach([&](std::size_t id) { out.push_back(faces_[id]); });
  return out;
}

Ambient AmbientComplex::skeleton(int r) const {
  std::vector<Simplex> kept;
  for (const auto& f : faces_)
    if (f.dimension() <= r) kept.push_back(f);
  return Ambient(new AmbientComplex(std::move(kept)));
}

bool sameAmbient(const Ambient& a, const Ambient& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace hyperop
