#pragma once

#include <vector>

#include "hyperop/word.hpp"

namespace hyperop {

/// Rewrites a chain (outermost atom first) with
///   γγ → id, Δδ → δ, δΔ → Δ, ΔΔ → Δ, δδ → δ,
///   (ΔγΔγ)² → ΔγΔγ, (δγδγ)² → δγδγ,
/// always at the leftmost match, rules tried in that order, until none applies.
std::vector<Atom> normalizeChain(std::vector<Atom> atoms);

/// Applies normalizeChain to every maximal unary chain of the word.
/// The result is extensionally equal to w but not claimed canonical.
OperatorWord normalizeWord(const OperatorWord& w);

}  // namespace hyperop
