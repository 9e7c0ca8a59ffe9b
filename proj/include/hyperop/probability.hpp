#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hyperop/ambient.hpp"
#include "hyperop/simplex.hpp"

namespace hyperop {

/// One value per face of an ambient, indexed by FaceId.
using FaceValues = Eigen::VectorXd;

/// p : L -> [0,1], given per dimension or per simplex with a default.
/// Values outside [0,1] are rejected at construction.
class ProbabilityAssignment {
 public:
  enum class Mode { PerDimension, PerSimplex };

  static ProbabilityAssignment perDimension(std::vector<double> p);
  static ProbabilityAssignment perSimplex(double fallback,
                                          std::vector<std::pair<Simplex, double>> entries);
  static ProbabilityAssignment constant(double p);

  Mode mode() const { return mode_; }
  const std::vector<double>& byDimension() const { return byDimension_; }
  double fallback() const { return default_; }
  const std::vector<std::pair<Simplex, double>>& entries() const { return entries_; }

  /// Throws std::invalid_argument if a per-dimension vector is too short.
  double at(const Simplex& s) const;
  /// Throws NotAFace if a per-simplex entry names a non-face of L.
  FaceValues resolve(const AmbientComplex& L) const;

 private:
  ProbabilityAssignment() = default;
  Mode mode_ = Mode::PerSimplex;
  std::vector<double> byDimension_;
  double default_ = 0.0;
  std::vector<std::pair<Simplex, double>> entries_;
};

FaceValues constantValues(const AmbientComplex& L, double p);
FaceValues perDimensionValues(const AmbientComplex& L, std::span<const double> byDimension);

}  // namespace hyperop
