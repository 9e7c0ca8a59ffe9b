#include "hyperop/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperop/errors.hpp"
#include "hyperop/models.hpp"

namespace hyperop {

ExactDistribution::ExactDistribution(Ambient L, Eigen::VectorXd mass, Domain domain)
    : ambient_(std::move(L)), mass_(std::move(mass)), domain_(domain) {
  if (static_cast<std::uint64_t>(mass_.size()) != subHypergraphCount(*ambient_, 62))
    throw std::invalid_argument("distribution vector length is not 2^|L|");
}

ExactDistribution ExactDistribution::pointMass(const Hypergraph& h, std::size_t bound) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(
      static_cast<Eigen::Index>(subHypergraphCount(h.complex(), bound)));
  m[static_cast<Eigen::Index>(h.index())] = 1.0;
  return {h.ambient(), std::move(m), Domain::Hypergraphs};
}

ExactDistribution ExactDistribution::uniform(const Ambient& L, std::size_t bound) {
  const auto n = static_cast<Eigen::Index>(subHypergraphCount(*L, bound));
  return {L, Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)), Domain::Hypergraphs};
}

ExactDistribution ExactDistribution::productLaw(const Ambient& L, const FaceValues& p,
                                                std::size_t bound) {
  requireFaceValues(*L, p);
  const std::size_t faces = L->faceCount();
  const auto n = static_cast<Eigen::Index>(subHypergraphCount(*L, bound));
  // Built face by face: entries with bit i set get p_i, the rest 1 - p_i.
  Eigen::VectorXd m(n);
  m[0] = 1.0;
  for (std::size_t i = 0; i < faces; ++i) {
    const Eigen::Index half = Eigen::Index{1} << i;
    const double q = p[static_cast<Eigen::Index>(i)];
    m.segment(half, half) = m.head(half) * q;
    m.head(half) *= 1.0 - q;
  }
  return {L, std::move(m), Domain::Hypergraphs};
}

ExactDistribution ExactDistribution::complexLaw(const Ambient& L, const FaceValues& p,
                                                std::size_t bound) {
  requireFaceValues(*L, p);
  Eigen::VectorXd m =
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(subHypergraphCount(*L, bound)));
  for (auto pattern : subComplexPatterns(*L, bound))
    m[static_cast<Eigen::Index>(pattern)] = pmfComplex(Hypergraph::fromIndex(L, pattern), p);
  return {L, std::move(m), Domain::Complexes};
}

ExactDistribution ExactDistribution::random(const Ambient& L, CounterRng& rng, std::size_t bound) {
  const auto n = static_cast<Eigen::Index>(subHypergraphCount(*L, bound));
  Eigen::VectorXd m(n);
  for (Eigen::Index i = 0; i < n; ++i) m[i] = -std::log1p(-rng.uniform());
  m /= m.sum();
  return {L, std::move(m), Domain::Hypergraphs};
}

double ExactDistribution::operator()(const Hypergraph& h) const {
  if (!sameAmbient(h.ambient(), ambient_)) throw AmbientMismatch();
  return at(h.index());
}

double ExactDistribution::massOffComplexes() const {
  const auto facets = facetPatterns(*ambient_);
  double off = 0.0;
  for (Eigen::Index i = 0; i < mass_.size(); ++i) {
    if (mass_[i] == 0.0) continue;
    const auto pattern = static_cast<std::uint64_t>(i);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if ((pattern >> f & 1u) && (facets[f] & pattern) != facets[f]) {
        off += mass_[i];
        break;
      }
    }
  }
  return off;
}

ExactDistribution ExactDistribution::asComplexes(double tol) const {
  if (massOffComplexes() > tol)
    throw ContractViolation("distribution has mass outside the sub-complex lattice");
  ExactDistribution out = *this;
  out.domain_ = Domain::Complexes;
  return out;
}

EmpiricalDistribution::EmpiricalDistribution(Ambient L, Domain domain)
    : ambient_(std::move(L)), domain_(domain) {}

void EmpiricalDistribution::add(const Hypergraph& h) {
  if (!sameAmbient(h.ambient(), ambient_)) throw AmbientMismatch();
  samples_.push_back(h.edges());
  ++counts_[h.edges()];
}

double EmpiricalDistribution::frequency(const Hypergraph& h) const {
  if (samples_.empty()) return 0.0;
  auto it = counts_.find(h.edges());
  return it == counts_.end() ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(samples_.size());
}

Eigen::VectorXd EmpiricalDistribution::marginals() const {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ambient_->faceCount()));
  for (const auto& [edges, c] : counts_)
    edges.forEach([&](std::size_t id) { m[static_cast<Eigen::Index>(id)] += static_cast<double>(c); });
  if (!samples_.empty()) m /= static_cast<double>(samples_.size());
  return m;
}

ExactDistribution EmpiricalDistribution::toExact(std::size_t bound) const {
  Eigen::VectorXd m =
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(subHypergraphCount(*ambient_, bound)));
  for (const auto& [edges, c] : counts_)
    m[static_cast<Eigen::Index>(edges.pattern())] =
        static_cast<double>(c) / static_cast<double>(samples_.size());
  return {ambient_, std::move(m), domain_};
}

double totalVariation(const ExactDistribution& f, const ExactDistribution& g) {
  if (!sameAmbient(f.ambient(), g.ambient())) throw AmbientMismatch();
  if (f.domain() != g.domain()) throw std::invalid_argument("distributions on different domains");
  return 0.5 * (f.mass() - g.mass()).lpNorm<1>();
}

double totalVariation(const EmpiricalDistribution& f, const ExactDistribution& g) {
  return totalVariation(f.toExact(std::max<std::size_t>(g.ambient()->faceCount(), kDefaultExactBound)), g);
}

Eigen::VectorXd marginals(const ExactDistribution& f) {
  const std::size_t faces = f.ambient()->faceCount();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(faces));
  for (Eigen::Index i = 0; i < f.mass().size(); ++i) {
    const double w = f.mass()[i];
    if (w == 0.0) continue;
    for (std::size_t b = 0; b < faces; ++b)
      if (static_cast<std::uint64_t>(i) >> b & 1u) m[static_cast<Eigen::Index>(b)] += w;
  }
  return m;
}

}  // namespace hyperop
