#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperop/hypergraph.hpp"
#include "hyperop/probability.hpp"

namespace hyperop {

/// Small named complexes: "delta1".."delta3" (full simplex on 2..4 vertices),
/// "p3" (path 1-2-3), "sk1delta3" (1-skeleton of delta3).
/// Throws std::invalid_argument on an unknown name.
Ambient fixture(const std::string& name);

/// The image of h under the face inclusion of `sub` into h's ambient:
/// faces of h that are faces of sub. Throws NotAFace if sub ⊄ L.
Hypergraph restrictTo(const Hypergraph& h, const Ambient& sub);

struct SuiteOptions {
  Ambient ambient;  // null selects the suite's default fixtures
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  std::optional<ProbabilityAssignment> probability;
};

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::vector<std::string> failures;  // first few, for the report

  bool pass() const { return passed == total; }
  void check(bool ok, const std::string& what);
};

/// "SUITE <name> PASS|FAIL <passed>/<total>".
std::string summaryLine(const SuiteResult& r);

const std::vector<std::string>& suiteNames();
/// Throws std::invalid_argument on an unknown suite.
SuiteResult runSuite(const std::string& name, const SuiteOptions& options);

}  // namespace hyperop
