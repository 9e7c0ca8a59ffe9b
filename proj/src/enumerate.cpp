#include "hyperop/enumerate.hpp"

#include <algorithm>

#include "hyperop/errors.hpp"

namespace hyperop {

void requireExactMode(const AmbientComplex& L, std::size_t bound) {
  bound = std::min<std::size_t>(bound, 62);
  if (L.faceCount() > bound) throw ExactModeUnavailable(L.faceCount(), bound);
}

std::uint64_t subHypergraphCount(const AmbientComplex& L, std::size_t bound) {
  requireExactMode(L, bound);
  return std::uint64_t{1} << L.faceCount();
}

std::vector<Hypergraph> enumerateSubHypergraphs(const Ambient& L, std::size_t bound) {
  std::vector<Hypergraph> out;
  out.reserve(subHypergraphCount(*L, bound));
  forEachSubHypergraph(L, [&](Hypergraph h) { out.push_back(std::move(h)); }, bound);
  return out;
}

std::vector<std::uint64_t> facetPatterns(const AmbientComplex& L) {
  std::vector<std::uint64_t> out(L.faceCount(), 0);
  for (FaceId id = 0; id < L.faceCount(); ++id)
    for (FaceId f : L.facets(id)) out[id] |= std::uint64_t{1} << f;
  return out;
}

std::vector<std::uint64_t> subComplexPatterns(const AmbientComplex& L, std::size_t bound) {
  requireExactMode(L, bound);
  const auto facets = facetPatterns(L);
  const std::size_t n = L.faceCount();
  std::vector<std::uint64_t> out;
  // Faces in canonical order; a face may be added only once its facets are in.
  auto grow = [&](auto&& self, std::size_t next, std::uint64_t pattern) -> void {
    if (next == n) {
      out.push_back(pattern);
      return;
    }
    self(self, next + 1, pattern);
    if ((facets[next] & pattern) == facets[next])
      self(self, next + 1, pattern | (std::uint64_t{1} << next));
  };
  grow(grow, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Complex> enumerateSubComplexes(const Ambient& L, std::size_t bound) {
  std::vector<Complex> out;
  for (auto pattern : subComplexPatterns(*L, bound))
    out.push_back(Complex::trusted(Hypergraph::fromIndex(L, pattern)));
  return out;
}

}  // namespace hyperop
