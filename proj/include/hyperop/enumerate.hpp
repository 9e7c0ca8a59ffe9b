#pragma once

#include <cstdint>
#include <vector>

#include "hyperop/hypergraph.hpp"

namespace hyperop {

inline constexpr std::size_t kDefaultExactBound = 20;

/// Throws ExactModeUnavailable when |L| > bound (bound itself capped at 62).
void requireExactMode(const AmbientComplex& L, std::size_t bound = kDefaultExactBound);

/// 2^|L|, after the bound check.
std::uint64_t subHypergraphCount(const AmbientComplex& L, std::size_t bound = kDefaultExactBound);

/// f(H) for every H ⊆ L in index order 0 .. 2^|L| - 1.
template <typename F>
void forEachSubHypergraph(const Ambient& L, F&& f, std::size_t bound = kDefaultExactBound) {
  const std::uint64_t n = subHypergraphCount(*L, bound);
  for (std::uint64_t i = 0; i < n; ++i) f(Hypergraph::fromIndex(L, i));
}

std::vector<Hypergraph> enumerateSubHypergraphs(const Ambient& L,
                                                std::size_t bound = kDefaultExactBound);

/// Index patterns of all downward-closed subsets, ascending.
std::vector<std::uint64_t> subComplexPatterns(const AmbientComplex& L,
                                              std::size_t bound = kDefaultExactBound);
std::vector<Complex> enumerateSubComplexes(const Ambient& L,
                                           std::size_t bound = kDefaultExactBound);

/// Bit i holds the facet pattern of face i.
std::vector<std::uint64_t> facetPatterns(const AmbientComplex& L);

}  // namespace hyperop
