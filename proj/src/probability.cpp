#include "hyperop/probability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperop/errors.hpp"

namespace hyperop {

namespace {

void checkUnit(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("probability " + std::to_string(p) + " outside [0,1]");
}

}  // namespace

ProbabilityAssignment ProbabilityAssignment::perDimension(std::vector<double> p) {
  for (double v : p) checkUnit(v);
  ProbabilityAssignment a;
  a.mode_ = Mode::PerDimension;
  a.byDimension_ = std::move(p);
  return a;
}

ProbabilityAssignment ProbabilityAssignment::perSimplex(
    double fallback, std::vector<std::pair<Simplex, double>> entries) {
  checkUnit(fallback);
  ProbabilityAssignment a;
  a.mode_ = Mode::PerSimplex;
  a.default_ = fallback;
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    checkUnit(entries[i].second);
    if (i && entries[i].first == entries[i - 1].first)
      throw std::invalid_argument("duplicate simplex " + entries[i].first.toString());
  }
  a.entries_ = std::move(entries);
  return a;
}

ProbabilityAssignment ProbabilityAssignment::constant(double p) {
  return perSimplex(p, {});
}

double ProbabilityAssignment::at(const Simplex& s) const {
  if (mode_ == Mode::PerDimension) {
    const auto d = static_cast<std::size_t>(s.dimension());
    if (d >= byDimension_.size())
      throw std::invalid_argument("no probability given for dimension " + std::to_string(d));
    return byDimension_[d];
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const auto& e, const Simplex& x) { return e.first < x; });
  if (it != entries_.end() && it->first == s) return it->second;
  return default_;
}

FaceValues ProbabilityAssignment::resolve(const AmbientComplex& L) const {
  for (const auto& [s, p] : entries_)
    if (!L.contains(s)) throw NotAFace("probability given for non-face " + s.toString());
  FaceValues out(static_cast<Eigen::Index>(L.faceCount()));
  for (FaceId id = 0; id < L.faceCount(); ++id) out[static_cast<Eigen::Index>(id)] = at(L.face(id));
  return out;
}

FaceValues constantValues(const AmbientComplex& L, double p) {
  return FaceValues::Constant(static_cast<Eigen::Index>(L.faceCount()), p);
}

FaceValues perDimensionValues(const AmbientComplex& L, std::span<const double> byDimension) {
  return ProbabilityAssignment::perDimension({byDimension.begin(), byDimension.end()}).resolve(L);
}

}  // namespace hyperop
