#include "hyperop/pushforward.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "hyperop/errors.hpp"
#include "hyperop/metric.hpp"
#include "hyperop/operators.hpp"

namespace hyperop {

namespace {

constexpr std::uint64_t kParallelThreshold = 1u << 12;

// Images are computed in parallel; mass is then accumulated sequentially in
// index order so the floating-point sums do not depend on the thread count.
std::vector<std::uint64_t> images(const ExactDistribution& f, const Ambient& target,
                                  const HypergraphMap& t) {
  const std::uint64_t n = f.size();
  std::vector<std::uint64_t> out(n, 0);
  const auto& L = f.ambient();
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i)
      if (f.at(i) != 0.0) {
        const Hypergraph img = t(Hypergraph::fromIndex(L, i));
        if (!sameAmbient(img.ambient(), target)) throw AmbientMismatch();
        out[i] = img.index();
      }
  };
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (n < kParallelThreshold || threads == 1) {
    work(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(std::min(n, w * chunk), std::min(n, (w + 1) * chunk));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ExactDistribution emptyLike(const ExactDistribution& f) {
  return {f.ambient(), Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f.size()))};
}

}  // namespace

ExactDistribution pushUnary(const ExactDistribution& f, const Ambient& target,
                            const HypergraphMap& t) {
  const auto img = images(f, target, t);
  Eigen::VectorXd m =
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(subHypergraphCount(*target, 62)));
  for (std::uint64_t i = 0; i < f.size(); ++i)
    if (f.at(i) != 0.0) m[static_cast<Eigen::Index>(img[i])] += f.at(i);
  return {target, std::move(m)};
}

ExactDistribution pushUnary(const ExactDistribution& f, const HypergraphMap& t) {
  return pushUnary(f, f.ambient(), t);
}

ExactDistribution pushUnary(const ExactDistribution& f, const OperatorWord& w) {
  if (w.arity() != 1) throw ArityMismatch(w.arity(), 1);
  return pushUnary(f, [&w](const Hypergraph& h) { return evalWord(w, h); });
}

EmpiricalDistribution pushUnary(const EmpiricalDistribution& f, const OperatorWord& w) {
  if (w.arity() != 1) throw ArityMismatch(w.arity(), 1);
  EmpiricalDistribution out(f.ambient());
  for (std::size_t i = 0; i < f.sampleCount(); ++i) out.add(evalWord(w, f.sample(i)));
  return out;
}

ExactDistribution pushBinary(const ExactDistribution& f1, const ExactDistribution& f2,
                             const OperatorWord& F) {
  const ExactDistribution fs[] = {f1, f2};
  return pushWord(F, fs);
}

EmpiricalDistribution pushBinary(const EmpiricalDistribution& e1, const EmpiricalDistribution& e2,
                                 const OperatorWord& F) {
  if (F.arity() != 2) throw ArityMismatch(F.arity(), 2);
  if (!sameAmbient(e1.ambient(), e2.ambient())) throw AmbientMismatch();
  if (e1.sampleCount() != e2.sampleCount())
    throw std::invalid_argument("paired empirical pushforward needs equal sample counts");
  EmpiricalDistribution out(e1.ambient());
  for (std::size_t i = 0; i < e1.sampleCount(); ++i) {
    const Hypergraph args[] = {e1.sample(i), e2.sample(i)};
    out.add(evalWord(F, args));
  }
  return out;
}

ExactDistribution pushWord(const OperatorWord& w, std::span<const ExactDistribution> fs) {
  if (w.arity() != fs.size()) throw ArityMismatch(w.arity(), fs.size());
  if (fs.empty()) throw std::invalid_argument("pushWord needs at least one distribution");
  for (const auto& f : fs)
    if (!sameAmbient(f.ambient(), fs[0].ambient())) throw AmbientMismatch();
  if (fs.size() == 1) return pushUnary(fs[0], w);

  const auto& L = fs[0].ambient();
  std::vector<std::vector<std::uint64_t>> support(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (std::uint64_t i = 0; i < fs[j].size(); ++i)
      if (fs[j].at(i) != 0.0) support[j].push_back(i);

  ExactDistribution out = emptyLike(fs[0]);
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(fs[0].size()));
  std::vector<std::size_t> pos(fs.size(), 0);
  std::vector<Hypergraph> args;
  for (const auto& s : support)
    if (s.empty()) return out;
  while (true) {
    args.clear();
    double weight = 1.0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const auto idx = support[j][pos[j]];
      args.push_back(Hypergraph::fromIndex(L, idx));
      weight *= fs[j].at(idx);
    }
    m[static_cast<Eigen::Index>(evalWord(w, args).index())] += weight;
    std::size_t j = fs.size();
    while (j > 0) {
      --j;
      if (++pos[j] < support[j].size()) break;
      pos[j] = 0;
      if (j == 0) return {L, std::move(m)};
    }
  }
}

double totalMassCheck(const OperatorWord& w, std::span<const ExactDistribution> fs) {
  return pushWord(w, fs).total();
}

ExactDistribution dExtPower(const ExactDistribution& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  ExactDistribution g = f;
  for (int i = 0; i < k; ++i) g = pushUnary(g, [](const Hypergraph& h) { return Hypergraph(ext(h)); });
  return g;
}

ExactDistribution dIntPower(const ExactDistribution& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  ExactDistribution g = f;
  for (int i = 0; i < k; ++i)
    g = pushUnary(g, [](const Hypergraph& h) { return Hypergraph(interior(h)); });
  return g;
}

ExactDistribution extLimit(const ExactDistribution& f) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f.size()));
  m[0] += f.at(0);
  m[m.size() - 1] += 1.0 - f.at(0);
  return {f.ambient(), std::move(m)};
}

ExactDistribution intLimit(const ExactDistribution& f) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f.size()));
  const double full = f.at(f.size() - 1);
  m[0] += 1.0 - full;
  m[m.size() - 1] += full;
  return {f.ambient(), std::move(m)};
}

ContainmentReport containmentProbabilities(const ExactDistribution& f, int k) {
  if (k < 1) throw std::invalid_argument("containment check needs k >= 1");
  ContainmentReport rep;
  rep.k = k;
  const auto& L = f.ambient();
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const double w = f.at(i);
    if (w == 0.0) continue;
    ++rep.support;
    const Hypergraph h = Hypergraph::fromIndex(L, i);
    const Hypergraph g = complementGamma(h);
    const Hypergraph gInt = complementGamma(intPower(h, k));
    if (!extPower(g, k - 1).isSubsetOf(gInt)) ++rep.extLowerViolations;
    if (!gInt.isSubsetOf(extPower(g, k + 1))) ++rep.extUpperViolations;
    if (!Hypergraph(ext(interior(h))).isSubsetOf(interiorDelta(h))) {
      ++rep.extIntViolations;
      rep.extIntViolationMass += w;
    }
    if (Hypergraph(closureDelta(h)).isSubsetOf(interior(ext(h)))) rep.probDeltaInIntExt += w;
    if (h.hasAllVertexEdges()) rep.vertexBound += w;
  }
  return rep;
}

std::vector<ExactDistribution> orbit(const ExactDistribution& f, const HypergraphMap& t,
                                     int steps) {
  std::vector<ExactDistribution> out{f};
  for (int i = 0; i < steps; ++i) out.push_back(pushUnary(out.back(), t));
  return out;
}

std::size_t countDistinct(std::span<const ExactDistribution> fs, double tol) {
  std::vector<const ExactDistribution*> reps;
  for (const auto& f : fs) {
    bool fresh = true;
    for (const auto* r : reps) fresh = fresh && totalVariation(f, *r) > tol;
    if (fresh) reps.push_back(&f);
  }
  return reps.size();
}

namespace {

ChainWitness longestChain(const Ambient& L, Hypergraph (*step)(const Hypergraph&)) {
  ChainWitness best{Hypergraph::empty(L), 0};
  forEachSubHypergraph(L, [&](const Hypergraph& h) {
    std::vector<Hypergraph> seen{h};
    while (true) {
      Hypergraph next = step(seen.back());
      if (std::find(seen.begin(), seen.end(), next) != seen.end()) break;
      seen.push_back(std::move(next));
    }
    if (seen.size() > best.distinct) best = {h, seen.size()};
  });
  return best;
}

}  // namespace

ChainWitness longestExtChain(const Ambient& L) {
  return longestChain(L, [](const Hypergraph& h) { return Hypergraph(ext(h)); });
}

ChainWitness longestIntChain(const Ambient& L) {
  return longestChain(L, [](const Hypergraph& h) { return Hypergraph(interior(h)); });
}

}  // namespace hyperop
