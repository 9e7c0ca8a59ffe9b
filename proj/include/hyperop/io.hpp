#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperop/hypergraph.hpp"
#include "hyperop/probability.hpp"
#include "hyperop/sparse.hpp"

namespace hyperop {

// Text formats. One face per line as space-separated non-negative integers,
// '#' starts a comment, blank lines are ignored. A .cx file is closed
// downward on load; a .hg file is taken literally and must lie in --ambient.
// Malformed input throws ParseError whose position is the 1-based line.

Ambient parseComplex(std::string_view text);
/// Maximal faces only, canonical order; parseComplex(formatComplex(L)) == L.
std::string formatComplex(const AmbientComplex& L);

Hypergraph parseHypergraph(std::string_view text, const Ambient& L);
/// Every edge, canonical order.
std::string formatHypergraph(const Hypergraph& h);
std::string formatFaces(const SparseFaces& faces);

/// {"mode":"per-dim","p":[...]} or
/// {"mode":"per-simplex","default":x,"entries":[{"simplex":[...],"p":y}]}.
ProbabilityAssignment parseProbability(std::string_view json);
std::string formatProbability(const ProbabilityAssignment& p);

std::string readTextFile(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over `path`.
void writeFileAtomic(const std::filesystem::path& path, std::string_view content);

Ambient readComplexFile(const std::filesystem::path& path);
Hypergraph readHypergraphFile(const std::filesystem::path& path, const Ambient& L);
ProbabilityAssignment readProbabilityFile(const std::filesystem::path& path);

}  // namespace hyperop
