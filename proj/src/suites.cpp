#include "hyperop/suites.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hyperop/distribution.hpp"
#include "hyperop/enumerate.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/metric.hpp"
#include "hyperop/models.hpp"
#include "hyperop/operators.hpp"
#include "hyperop/pushforward.hpp"
#include "hyperop/resample.hpp"
#include "hyperop/sparse.hpp"
#include "hyperop/transforms.hpp"
#include "hyperop/triangulated.hpp"
#include "hyperop/word.hpp"

namespace hyperop {

Ambient fixture(const std::string& name) {
  if (name == "delta1") return AmbientComplex::fullSimplex(2);
  if (name == "delta2") return AmbientComplex::fullSimplex(3);
  if (name == "delta3") return AmbientComplex::fullSimplex(4);
  if (name == "p3") return AmbientComplex::fromGenerators({Simplex{1, 2}, Simplex{2, 3}});
  if (name == "sk1delta3") return AmbientComplex::fullSimplex(4)->skeleton(1);
  throw std::invalid_argument("unknown fixture " + name);
}

Hypergraph restrictTo(const Hypergraph& h, const Ambient& sub) {
  BitSet edges(sub->faceCount());
  for (FaceId id = 0; id < sub->faceCount(); ++id) {
    if (h.contains(h.complex().idOf(sub->face(id)))) edges.set(id);
  }
  return {sub, std::move(edges)};
}

// Failure text is only built when a check fails.
#define SUITE_CHECK(res, ok, what)          \
  do {                                      \
    if (ok) {                               \
      ++(res).total;                        \
      ++(res).passed;                       \
    } else {                                \
      (res).check(false, what);             \
    }                                       \
  } while (0)

void SuiteResult::check(bool ok, const std::string& what) {
  ++total;
  if (ok) {
    ++passed;
  } else if (failures.size() < 10) {
    failures.push_back(what);
  }
}

std::string summaryLine(const SuiteResult& r) {
  return "SUITE " + r.name + (r.pass() ? " PASS " : " FAIL ") + std::to_string(r.passed) + "/" +
         std::to_string(r.total);
}

namespace {

constexpr std::size_t kExhaustiveFaces = 14;
constexpr std::uint64_t kSampledCases = 4096;
constexpr double kExactTol = 1e-12;

std::vector<Ambient> targets(const SuiteOptions& o, std::initializer_list<const char*> defaults) {
  if (o.ambient) return {o.ambient};
  std::vector<Ambient> out;
  for (const char* n : defaults) out.push_back(fixture(n));
  return out;
}

// Every H when exhaustive or |L| small, otherwise seeded uniform samples.
std::vector<Hypergraph> cases(const Ambient& L, const SuiteOptions& o) {
  if (o.exhaustive || L->faceCount() <= kExhaustiveFaces) return enumerateSubHypergraphs(L);
  std::vector<Hypergraph> out;
  const FaceValues half = constantValues(*L, 0.5);
  for (std::uint64_t i = 0; i < kSampledCases; ++i) {
    CounterRng rng(o.seed, i);
    out.push_back(sampleHypergraph(L, half, rng));
  }
  return out;
}

std::string tag(const Hypergraph& h) { return h.toString(); }

bool eq(const Hypergraph& a, const Hypergraph& b) { return a == b; }
bool sub(const Hypergraph& a, const Hypergraph& b) { return a.isSubsetOf(b); }

using A = Atom;

SuiteResult identities(const SuiteOptions& o) {
  SuiteResult r{"identities", 0, 0, {}};
  const OperatorWord gg = OperatorWord::chain({A::gamma, A::gamma});
  const OperatorWord Dd = OperatorWord::chain({A::Delta, A::delta});
  const OperatorWord dD = OperatorWord::chain({A::delta, A::Delta});
  const OperatorWord DD = OperatorWord::chain({A::Delta, A::Delta});
  const OperatorWord dd = OperatorWord::chain({A::delta, A::delta});
  const OperatorWord six = OperatorWord::chain({A::Delta, A::gamma, A::Delta, A::gamma});
  const OperatorWord seven = OperatorWord::chain({A::delta, A::gamma, A::delta, A::gamma});
  for (const auto& L : targets(o, {"delta1", "delta2", "p3", "sk1delta3"})) {
    for (const auto& h : cases(L, o)) {
      const Hypergraph D = closureDelta(h), d = interiorDelta(h);
      SUITE_CHECK(r, eq(evalWord(gg, h), h), "gamma^2 = id " + tag(h));
      SUITE_CHECK(r, eq(evalWord(Dd, h), d), "Delta.delta = delta " + tag(h));
      SUITE_CHECK(r, eq(evalWord(dD, h), D), "delta.Delta = Delta " + tag(h));
      SUITE_CHECK(r, eq(evalWord(DD, h), D), "Delta^2 = Delta " + tag(h));
      SUITE_CHECK(r, eq(evalWord(dd, h), d), "delta^2 = delta " + tag(h));
      SUITE_CHECK(r, eq(evalWord(OperatorWord::power(six, 2), h), evalWord(six, h)), "(Delta.gamma)^4 = (Delta.gamma)^2 " + tag(h));
      SUITE_CHECK(r, eq(evalWord(OperatorWord::power(seven, 2), h), evalWord(seven, h)),
              "(delta.gamma)^4 = (delta.gamma)^2 " + tag(h));
    }
  }
  return r;
}

SuiteResult laws(const SuiteOptions& o) {
  SuiteResult r{"laws", 0, 0, {}};
  const OperatorWord alpha = OperatorWord::alpha(), beta = OperatorWord::beta();
  const OperatorWord six = OperatorWord::chain({A::Delta, A::gamma, A::Delta, A::gamma});
  const OperatorWord seven = OperatorWord::chain({A::delta, A::gamma, A::delta, A::gamma});
  for (const auto& L : targets(o, {"delta1", "delta2", "p3", "sk1delta3"})) {
    const auto hs = cases(L, o);
    for (const auto& h : hs) {
      const Hypergraph D = closureDelta(h), d = interiorDelta(h);
      SUITE_CHECK(r, sub(d, h) && sub(h, D), "delta H ⊆ H ⊆ Delta H " + tag(h));
      SUITE_CHECK(r, eq(ext(h), extByComposition(h)), "Ext closed form " + tag(h));
      SUITE_CHECK(r, eq(interior(h), interiorByComposition(h)), "Int closed form " + tag(h));
      SUITE_CHECK(r, eq(evalWord(six, h), closureDelta(maximalPart(h))), "(Delta.gamma)^2 = Delta of maximal faces " + tag(h));
      SUITE_CHECK(r, eq(evalWord(seven, h), spannedByVertices(h)), "(delta.gamma)^2 = spanned by vertices " + tag(h));
      if (h.isComplex()) {
        SUITE_CHECK(r, eq(evalWord(OperatorWord::power(alpha, 4), h), evalWord(OperatorWord::power(alpha, 2), h)),
                "alpha^4 = alpha^2 " + tag(h));
        SUITE_CHECK(r, eq(evalWord(OperatorWord::power(beta, 4), h), evalWord(OperatorWord::power(beta, 2), h)),
                "beta^4 = beta^2 " + tag(h));
      }
    }
    // Pairs: De Morgan, distributivity of Delta and delta, containments, monotonicity.
    const bool allPairs = hs.size() * hs.size() <= (1u << 21);
    const std::size_t stride = allPairs ? 1 : hs.size() / 64 + 1;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = 0; j < hs.size(); j += stride) {
        const auto& a = hs[i];
        const auto& b = hs[(j + i * (stride > 1)) % hs.size()];
        SUITE_CHECK(r, eq(complementGamma(a | b), complementGamma(a) & complementGamma(b)),
                "gamma(A + B) = gamma A /\\ gamma B " + tag(a) + " " + tag(b));
        SUITE_CHECK(r, eq(closureDelta(a | b), closureDelta(a) | closureDelta(b)),
                "Delta(A + B) = Delta A + Delta B " + tag(a) + " " + tag(b));
        SUITE_CHECK(r, eq(interiorDelta(a & b), interiorDelta(a) & interiorDelta(b)),
                "delta(A /\\ B) = delta A /\\ delta B " + tag(a) + " " + tag(b));
        SUITE_CHECK(r, sub(closureDelta(a & b), closureDelta(a) & closureDelta(b)),
                "Delta(A ∩ B) ⊆ ΔA ∩ ΔB " + tag(a) + " " + tag(b));
        SUITE_CHECK(r, sub(interiorDelta(a) | interiorDelta(b), interiorDelta(a | b)),
                "δA ∪ δB ⊆ δ(A ∪ B) " + tag(a) + " " + tag(b));
        if (sub(a, b))
          SUITE_CHECK(r, sub(closureDelta(a), closureDelta(b)) && sub(interiorDelta(a), interiorDelta(b)),
                  "monotone " + tag(a) + " " + tag(b));
      }
    }
    // Associativity: all triples when small, else every A with 64 seeded (B, C).
    const bool allTriples = L->faceCount() * 3 <= 21;
    auto assoc = [&](const Hypergraph& a, const Hypergraph& b, const Hypergraph& c) {
      SUITE_CHECK(r, eq((a | b) | c, a | (b | c)) && eq((a & b) & c, a & (b & c)),
              "associativity " + tag(a) + " " + tag(b) + " " + tag(c));
    };
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (allTriples) {
        for (const auto& b : hs)
          for (const auto& c : hs) assoc(hs[i], b, c);
        continue;
      }
      CounterRng rng(o.seed ^ 0xA55A, i);
      for (int s = 0; s < 64; ++s) {
        const auto& b = hs[rng.next() % hs.size()];
        const auto& c = hs[rng.next() % hs.size()];
        assoc(hs[i], b, c);
      }
    }
  }
  return r;
}

SuiteResult containments(const SuiteOptions& o) {
  SuiteResult r{"containments", 0, 0, {}};
  for (const auto& L : targets(o, {"delta1", "delta2", "p3", "sk1delta3"})) {
    const int diam = diameter(*L);
    for (const auto& h : cases(L, o)) {
      const Hypergraph g = complementGamma(h);
      for (int k = 1; k <= diam + 1; ++k) {
        const Hypergraph gInt = complementGamma(intPower(h, k));
        SUITE_CHECK(r, sub(extPower(g, k - 1), gInt) && sub(gInt, extPower(g, k + 1)),
                "Ext^{k-1}(γH) ⊆ γInt^k(H) ⊆ Ext^{k+1}(γH), k=" + std::to_string(k) + " " + tag(h));
        SUITE_CHECK(r, eq(extPower(h, k), extPowerByPaths(h, k)) && eq(intPower(h, k), intPowerByPaths(h, k)),
                "power path forms k=" + std::to_string(k) + " " + tag(h));
      }
      const Hypergraph inv = nbdInv(h);
      SUITE_CHECK(r, eq(inv, nbdInvByUnion(h)), "NbdInv by union " + tag(h));
      SUITE_CHECK(r, sub(nbd(inv), interiorDelta(h)), "Nbd∘NbdInv(H) ⊆ δH " + tag(h));
      SUITE_CHECK(r, sub(closureDelta(h), nbdInv(nbd(h))), "ΔH ⊆ NbdInv∘Nbd(H) " + tag(h));
      SUITE_CHECK(r, eq(inv, interior(h)), "NbdInv(H) = Int(H) " + tag(h));
      SUITE_CHECK(r, sub(ext(h), nbd(h)), "Ext(H) ⊆ Nbd(H) " + tag(h));
      if (h.hasAllVertexEdges()) {
        SUITE_CHECK(r, eq(ext(h), nbd(h)), "Ext(H) = Nbd(H) " + tag(h));
        SUITE_CHECK(r, sub(closureDelta(h), interior(ext(h))), "ΔH ⊆ Int∘Ext(H) " + tag(h));
      }
      SUITE_CHECK(r, sub(ext(interior(h)), interiorDelta(h)), "Ext∘Int(H) ⊆ δH " + tag(h));
      const auto pw = minimalPowers(h);
      if (pw.rDefined && pw.tDefined)
        SUITE_CHECK(r, std::abs(pw.t - pw.r) <= 1, "t ∈ {r-1, r, r+1} " + tag(h));
    }
  }
  return r;
}

SuiteResult pushPowers(const SuiteOptions& o) {
  SuiteResult r{"pushpowers", 0, 0, {}};
  for (const auto& L : targets(o, {"p3"})) {
    const int diam = diameter(*L);
    const auto [a, b] = diametralPair(*L);
    (void)b;
    const Hypergraph start(L, {L->face(a)});
    const auto extOrbit = orbit(ExactDistribution::pointMass(start),
                                [](const Hypergraph& h) { return Hypergraph(ext(h)); }, diam);
    const auto intOrbit = orbit(ExactDistribution::pointMass(complementGamma(start)),
                                [](const Hypergraph& h) { return Hypergraph(interior(h)); }, diam);
    const std::size_t want = static_cast<std::size_t>(diam) + 1;
    SUITE_CHECK(r, countDistinct(extOrbit) == want,
            "DExt witness: " + std::to_string(countDistinct(extOrbit)) + " distinct of " +
                std::to_string(want) + " (longest Ext chain over all H: " +
                std::to_string(longestExtChain(L).distinct) + ")");
    SUITE_CHECK(r, countDistinct(intOrbit) == want,
            "DInt witness: " + std::to_string(countDistinct(intOrbit)) + " distinct of " +
                std::to_string(want) + " (longest Int chain over all H: " +
                std::to_string(longestIntChain(L).distinct) + ")");
    for (std::uint64_t i = 0; i < 20; ++i) {
      CounterRng rng(o.seed, 1000 + i);
      const auto f = ExactDistribution::random(L, rng);
      SUITE_CHECK(r, totalVariation(dExtPower(f, diam), extLimit(f)) < kExactTol,
              "(DExt)^diam f, f #" + std::to_string(i));
      SUITE_CHECK(r, totalVariation(dIntPower(f, diam), intLimit(f)) < kExactTol,
              "(DInt)^diam f, f #" + std::to_string(i));
      const auto rep = containmentProbabilities(f, 1);
      SUITE_CHECK(r, rep.extLowerViolations == 0 && rep.extUpperViolations == 0,
              "power containments, f #" + std::to_string(i));
      SUITE_CHECK(r, rep.extIntViolations == 0, "Ext∘Int(H) ⊆ δH a.s., f #" + std::to_string(i));
      SUITE_CHECK(r, rep.inequalityHolds(), "P[ΔH ⊆ Int∘Ext H] bound, f #" + std::to_string(i));
    }
  }
  return r;
}

std::vector<std::pair<std::string, FaceValues>> transformParameters(const Ambient& L,
                                                                   const SuiteOptions& o) {
  if (o.probability) return {{"given", o.probability->resolve(*L)}};
  FaceValues asym(static_cast<Eigen::Index>(L->faceCount()));
  for (Eigen::Index i = 0; i < asym.size(); ++i)
    asym[i] = 0.1 + 0.8 * std::fmod(0.37 * static_cast<double>(i + 1), 1.0);
  return {{"p=0", constantValues(*L, 0.0)},
          {"p=0.5", constantValues(*L, 0.5)},
          {"p=1", constantValues(*L, 1.0)},
          {"asymmetric", asym}};
}

SuiteResult transformsSuite(const SuiteOptions& o) {
  SuiteResult r{"transforms", 0, 0, {}};
  for (const auto& L : targets(o, {"delta2"})) {
    for (const auto& [label, p] : transformParameters(L, o)) {
      const FaceValues q = FaceValues::Ones(p.size()) - 0.5 * p;
      const auto rep = verifyTheorem2(L, p, q);
      for (const auto& c : rep.claims) {
        std::ostringstream what;
        what << c.name << " " << label << " TV=" << c.tv;
        SUITE_CHECK(r, c.tv < kExactTol && c.supportOk, what.str());
        SUITE_CHECK(r, c.marginalError < kExactTol, c.name + " marginals " + label);
      }
    }
  }
  return r;
}

SuiteResult figure1(const SuiteOptions& o) {
  SuiteResult r{"figure1", 0, 0, {}};
  const TriangulatedTriangle t(6);
  struct Case {
    Hypergraph h;
    int r, t;
    const char* name;
  };
  const Case all[] = {{t.closedRegion(1, 2, 2), 2, 1, "H1"},
                      {t.closedRegion(1, 1, 3), 2, 2, "H2"},
                      {t.openRegion(1, 1, 3), 1, 2, "H3"}};
  for (const auto& c : all) {
    const auto pw = minimalPowers(c.h);
    SUITE_CHECK(r, pw.rDefined && pw.tDefined && pw.r == c.r && pw.t == c.t,
            std::string(c.name) + ": r=" + std::to_string(pw.r) + " t=" + std::to_string(pw.t));
  }
  for (const auto& L : targets(o, {"delta1", "delta2", "p3", "sk1delta3"}))
    for (const auto& h : cases(L, o)) {
      const auto pw = minimalPowers(h);
      if (pw.rDefined && pw.tDefined)
        SUITE_CHECK(r, std::abs(pw.t - pw.r) <= 1, "t ∈ {r-1, r, r+1} " + tag(h));
    }
  return r;
}

bool within4Sigma(double freq, double p, std::uint64_t n) {
  const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return std::abs(freq - p) <= 4.0 * sd + 1e-15;
}

SuiteResult models(const SuiteOptions& o) {
  SuiteResult r{"models", 0, 0, {}};
  for (const auto& L : targets(o, {"delta1", "delta2"})) {
    const FaceValues p = o.probability ? o.probability->resolve(*L) : constantValues(*L, 0.5);
    const auto bar = ExactDistribution::productLaw(L, p);
    const auto law = ExactDistribution::complexLaw(L, p);
    SUITE_CHECK(r, std::abs(bar.total() - 1.0) < kExactTol, "sum of P-bar pmf");
    SUITE_CHECK(r, std::abs(law.total() - 1.0) < kExactTol, "sum of P pmf");

    EmpiricalDistribution eh(L), ec(L, Domain::Complexes);
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      CounterRng rng(o.seed, i);
      eh.add(sampleHypergraph(L, p, rng));
      ec.add(sampleComplex(L, p, rng));
    }
    const auto mh = eh.marginals(), mc = ec.marginals(), exactMc = marginals(law);
    for (FaceId id = 0; id < L->faceCount(); ++id) {
      const auto i = static_cast<Eigen::Index>(id);
      SUITE_CHECK(r, within4Sigma(mh[i], p[i], o.samples), "hypergraph marginal " + L->face(id).toString());
      SUITE_CHECK(r, within4Sigma(mc[i], exactMc[i], o.samples), "complex marginal " + L->face(id).toString());
    }
    if (L->faceCount() <= 7) SUITE_CHECK(r, totalVariation(ec, law) < 0.02, "complex sampler TV");

    const FaceValues p2 = o.probability ? p : constantValues(*L, 0.5);
    const FaceValues target = FaceValues::Ones(p.size()) -
                              (FaceValues::Ones(p.size()) - p).cwiseProduct(FaceValues::Ones(p.size()) - p2);
    const auto targetLaw = ExactDistribution::complexLaw(L, target);
    EmpiricalDistribution er(L, Domain::Complexes);
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      CounterRng rng(o.seed ^ 0x5EED, i);
      const Complex k1 = sampleComplex(L, p, rng);
      const Complex k2 = sampleComplex(L, p2, rng);
      er.add(complexUnionResample(k1, k2, p, p2, rng));
    }
    SUITE_CHECK(r, totalVariation(er, targetLaw) < 0.02, "union resampler TV");
    SUITE_CHECK(r, totalVariation(resampleLaw(L, p, p2), targetLaw) < kExactTol, "union resampler exact law");
  }
  return r;
}

SuiteResult sparse(const SuiteOptions& o) {
  SuiteResult r{"sparse", 0, 0, {}};
  const int n = 3;
  const Ambient L = AmbientComplex::fullSimplex(n);
  const Ambient sk1 = L->skeleton(1);
  for (const std::vector<double>& base : {std::vector<double>{1, 0.5, 0.5}, {1, 0.3, 0.7}}) {
    const auto dims = derivedDims(n, base);
    const FaceValues p = perDimensionValues(*L, base);
    const auto bar = ExactDistribution::productLaw(L, p);
    const auto up = marginals(pushUnary(bar, [](const Hypergraph& h) { return Hypergraph(closureDelta(h)); }));
    const auto low = marginals(pushUnary(bar, [](const Hypergraph& h) { return Hypergraph(interiorDelta(h)); }));
    for (FaceId id = 0; id < L->faceCount(); ++id) {
      const auto k = static_cast<std::size_t>(L->dimensionOf(id));
      const auto i = static_cast<Eigen::Index>(id);
      SUITE_CHECK(r, std::abs(up[i] - dims.pPrime[k]) < kExactTol, "p' marginal " + L->face(id).toString());
      SUITE_CHECK(r, std::abs(low[i] - dims.pDoublePrime[k]) < kExactTol, "p'' marginal " + L->face(id).toString());
    }

    // Truncated runs against the untruncated laws restricted to dimension <= 1.
    auto restrictLaw = [&](const ExactDistribution& f) {
      return pushUnary(f, sk1, [&](const Hypergraph& h) { return restrictTo(h, sk1); });
    };
    Eigen::VectorXd hLaw = Eigen::VectorXd::Zero(1 << sk1->faceCount());
    Eigen::VectorXd yLaw = hLaw, dLaw = hLaw;
    for (const auto& [idx, pr] : enumerateOutcomes([&](BernoulliSource& coin) {
           const auto out = algorithm1Truncated(n, base, 1, coin);
           return std::pair{out.hypergraph.toHypergraph(sk1).index(), out.complex.toHypergraph(sk1).index()};
         })) {
      hLaw[static_cast<Eigen::Index>(idx.first)] += pr;
      yLaw[static_cast<Eigen::Index>(idx.second)] += pr;
    }
    for (const auto& [idx, pr] : enumerateOutcomes([&](BernoulliSource& coin) {
           return algorithm2Truncated(n, base, 1, coin).toHypergraph(sk1).index();
         }))
      dLaw[static_cast<Eigen::Index>(idx)] += pr;
    const auto wantH = restrictLaw(bar);
    const auto wantY = restrictLaw(ExactDistribution::complexLaw(L, perDimensionValues(*L, dims.pPrime)));
    const auto wantD = restrictLaw(pushUnary(bar, [](const Hypergraph& h) { return Hypergraph(interiorDelta(h)); }));
    SUITE_CHECK(r, 0.5 * (hLaw - wantH.mass()).lpNorm<1>() < kExactTol, "closure route hypergraph truncation law");
    SUITE_CHECK(r, 0.5 * (yLaw - wantY.mass()).lpNorm<1>() < kExactTol, "closure route complex truncation law");
    SUITE_CHECK(r, 0.5 * (dLaw - wantD.mass()).lpNorm<1>() < kExactTol, "interior route truncation law");
  }

  // Monte Carlo marginals at n = 4, r = 2.
  const std::vector<double> base{1, 0.4, 0.6, 0.5};
  const auto dims = derivedDims(4, base);
  const std::uint64_t N = o.samples;
  std::vector<double> yHits(3, 0), dHits(3, 0);
  bool truncated = true;
  for (std::uint64_t i = 0; i < N; ++i) {
    CounterRng rng(o.seed ^ 0xA16, i);
    const auto a1 = algorithm1Truncated(4, base, 2, rng);
    const auto a2 = algorithm2Truncated(4, base, 2, rng);
    truncated = truncated && a1.hypergraph.dimension() <= 2 && a1.complex.dimension() <= 2 &&
                a2.dimension() <= 2;
    for (int k = 0; k <= 2; ++k) {
      yHits[static_cast<std::size_t>(k)] += static_cast<double>(a1.complex.count(k));
      dHits[static_cast<std::size_t>(k)] += static_cast<double>(a2.count(k));
    }
  }
  SUITE_CHECK(r, truncated, "truncated output dimension");
  const double faces[] = {4, 6, 4};
  const double yWant[] = {1, dims.pPrime[1], std::pow(dims.pPrime[1], 3) * dims.pPrime[2]};
  for (int k = 0; k <= 2; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    // Faces of one dimension are exchangeable; check the mean per face with
    // a 4σ bound for a single face (conservative for dependent faces).
    const double nf = faces[kk] * static_cast<double>(N);
    SUITE_CHECK(r, std::abs(yHits[kk] / nf - yWant[kk]) <=
                4.0 * std::sqrt(yWant[kk] * (1 - yWant[kk]) / static_cast<double>(N)) + 1e-15,
            "closure route marginal dim " + std::to_string(k));
    const double d = dims.pDoublePrime[kk];
    SUITE_CHECK(r, std::abs(dHits[kk] / nf - d) <= 4.0 * std::sqrt(d * (1 - d) / static_cast<double>(N)) + 1e-15,
            "interior route marginal dim " + std::to_string(k));
  }
  return r;
}

using Runner = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"identities", identities}, {"laws", laws},       {"containments", containments},
      {"pushpowers", pushPowers},     {"transforms", transformsSuite}, {"figure1", figure1},
      {"models", models},         {"sparse", sparse}};
  return r;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult runSuite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      if (options.exhaustive && options.ambient) requireExactMode(*options.ambient);
      return fn(options);
    }
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace hyperop
