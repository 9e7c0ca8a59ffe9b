#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two hypergraphs (or a hypergraph and a distribution) live on different ambients.
struct AmbientMismatch : Error {
  AmbientMismatch() : Error("incompatible ambient complexes") {}
};

struct NotAFace : Error {
  using Error::Error;
};

struct InvalidComplex : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("word arity " + std::to_string(expected) + " but " + std::to_string(got) +
              " arguments given") {}
};

/// Exact (dense) mode needs 2^|L| entries; refused beyond the configured bound.
struct ExactModeUnavailable : Error {
  ExactModeUnavailable(std::size_t faces, std::size_t bound)
      : Error("exact mode unavailable: |L| = " + std::to_string(faces) + " exceeds bound " +
              std::to_string(bound)) {}
};

struct Unreachable : Error {
  using Error::Error;
};

struct ContractViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

}  // namespace hyperop
