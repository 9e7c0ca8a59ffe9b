#include "hyperop/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperop {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("simplex has duplicate vertices");
}

Simplex makeSimplexUnchecked(std::vector<Vertex> sorted) {
  return Simplex(Simplex::Unchecked{}, std::move(sorted));
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::isFaceOf(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    *a < *b ? ++a : ++b;
  }
  return false;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = vertices_.size(); skip-- > 0;) {
    std::vector<Vertex> v;
    v.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) v.push_back(vertices_[i]);
    out.push_back(makeSimplexUnchecked(std::move(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Simplex::toString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(vertices_.begin(), vertices_.end(),
                                                other.vertices_.begin(), other.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hyperop
