#include <doctest.h>

#include <cmath>
#include <map>

#include "hyperop/distribution.hpp"
#include "hyperop/enumerate.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/io.hpp"
#include "hyperop/models.hpp"
#include "hyperop/probability.hpp"
#include "hyperop/rng.hpp"
#include "hyperop/suites.hpp"
#include "oracle.hpp"

using namespace hyperop;

namespace {

// Stage-by-stage law of the multi-parameter model on the r-skeleton of the
// full simplex: at stage k every k-face whose facets all survived is kept
// independently with probability p[k].
std::map<oracle::Family, double> stagewiseLaw(unsigned n, int r, const std::vector<double>& p) {
  std::map<oracle::Family, double> law{{{}, 1.0}};
  for (int k = 0; k <= r; ++k) {
    std::map<oracle::Family, double> next;
    for (const auto& [y, w] : law) {
      std::vector<oracle::Face> cand;
      for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (std::popcount(m) != k + 1) continue;
        oracle::Face f;
        for (unsigned v = 0; v < n; ++v)
          if (m >> v & 1u) f.insert(v + 1);
        bool ok = true;
        for (const auto& s : oracle::nonemptySubsets(f))
          if (s.size() == f.size() - 1 && !y.count(s)) ok = false;
        if (ok) cand.push_back(f);
      }
      for (std::uint32_t m = 0; m < (1u << cand.size()); ++m) {
        oracle::Family z = y;
        double q = w;
        for (std::size_t i = 0; i < cand.size(); ++i) {
          const bool in = m >> i & 1u;
          if (in) z.insert(cand[i]);
          q *= in ? p[k] : 1.0 - p[k];
        }
        next[z] += q;
      }
    }
    law = std::move(next);
  }
  return law;
}

double maxAbs(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("probability assignments") {
  const Ambient L = fixture("delta2");
  const auto pd = ProbabilityAssignment::perDimension({0.5, 0.25, 0.125});
  CHECK(pd.at(Simplex{1}) == 0.5);
  CHECK(pd.at(Simplex{1, 2, 3}) == 0.125);
  CHECK_THROWS_AS(ProbabilityAssignment::perDimension({0.5}).at(Simplex{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityAssignment::perDimension({1.5}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityAssignment::constant(-0.1), std::invalid_argument);
  const auto ps = ProbabilityAssignment::perSimplex(0.2, {{Simplex{1, 2}, 0.9}});
  const FaceValues v = ps.resolve(*L);
  CHECK(v[L->idOf(Simplex{1, 2})] == 0.9);
  CHECK(v[L->idOf(Simplex{2, 3})] == 0.2);
  CHECK_THROWS_AS(ProbabilityAssignment::perSimplex(0.2, {{Simplex{1, 4}, 0.9}}).resolve(*L), NotAFace);
  CHECK(maxAbs(constantValues(*L, 0.3), ProbabilityAssignment::constant(0.3).resolve(*L)) == 0.0);
}

TEST_CASE("probability JSON") {
  const auto a = parseProbability(R"({"mode":"per-dim","p":[1,0.5,0.25]})");
  CHECK(a.mode() == ProbabilityAssignment::Mode::PerDimension);
  CHECK(a.byDimension() == std::vector<double>{1, 0.5, 0.25});
  const auto b = parseProbability(
      R"({"mode":"per-simplex","default":0.1,"entries":[{"simplex":[2,1],"p":0.7}]})");
  CHECK(b.fallback() == 0.1);
  CHECK(b.at(Simplex{1, 2}) == 0.7);
  for (const auto& x : {a, b}) {
    const auto y = parseProbability(formatProbability(x));
    CHECK(y.mode() == x.mode());
    CHECK(y.byDimension() == x.byDimension());
    CHECK(y.entries() == x.entries());
    CHECK(y.fallback() == x.fallback());
  }
  CHECK_THROWS_AS(parseProbability("{"), ParseError);
  CHECK_THROWS_AS(parseProbability(R"({"mode":"odd"})"), ParseError);
  CHECK_THROWS(parseProbability(R"({"mode":"per-dim","p":[2]})"));
}

TEST_CASE("counter generator") {
  CounterRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  bool diffStream = false, diffSeed = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    diffStream |= x != c.next();
    diffSeed |= x != d.next();
  }
  CHECK(diffStream);
  CHECK(diffSeed);
  CHECK(a.counter() == 64);
  CounterRng u(1, 0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double x = u.uniform();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    sum += x;
  }
  CHECK(std::abs(sum / 100000 - 0.5) < 4 * std::sqrt(1.0 / 12 / 100000));
  CounterRng e(5, 5);
  CHECK_FALSE(e.draw(0.0));
  CHECK(e.draw(1.0));
  CHECK(e.counter() == 2);
}

TEST_CASE("outcome enumeration") {
  const auto out = enumerateOutcomes([](BernoulliSource& c) { return int(c.draw(0.25)) + int(c.draw(0.5)); });
  std::map<int, double> law;
  for (const auto& [k, w] : out) law[k] += w;
  CHECK(law[0] == doctest::Approx(0.375));
  CHECK(law[1] == doctest::Approx(0.5));
  CHECK(law[2] == doctest::Approx(0.125));
  const auto pruned = enumerateOutcomes([](BernoulliSource& c) { return c.draw(1.0) && c.draw(0.0); });
  CHECK(pruned.size() == 1);
}

TEST_CASE("pmf examples") {
  const Ambient L = fixture("delta1");
  const FaceValues p = perDimensionValues(*L, std::vector<double>{0.5, 0.25});
  CHECK(pmfHypergraph(Hypergraph::empty(L), p) == doctest::Approx(0.5 * 0.5 * 0.75));
  CHECK(pmfHypergraph(Hypergraph(L, {Simplex{1, 2}}), p) == doctest::Approx(0.5 * 0.5 * 0.25));
  CHECK(pmfComplex(Hypergraph::empty(L), p) == doctest::Approx(0.25));
  CHECK(pmfComplex(Hypergraph(L, {Simplex{1}}), p) == doctest::Approx(0.25));
  CHECK(pmfComplex(Hypergraph(L, {Simplex{1}, Simplex{2}}), p) == doctest::Approx(0.25 * 0.75));
  CHECK(pmfComplex(Hypergraph::full(L), p) == doctest::Approx(0.25 * 0.25));
  CHECK_THROWS_AS(pmfComplex(Hypergraph(L, {Simplex{1, 2}}), p), InvalidComplex);
  CHECK_THROWS_AS(pmfHypergraph(Hypergraph::empty(L), FaceValues::Constant(2, 0.5)), std::invalid_argument);
}

TEST_CASE("pmfs sum to one") {
  CounterRng rng(11, 0);
  for (const char* name : {"delta1", "delta2", "p3", "sk1delta3"}) {
    const Ambient L = fixture(name);
    FaceValues p(L->faceCount());
    for (auto& x : p) x = rng.uniform();
    double hs = 0.0, cs = 0.0;
    forEachSubHypergraph(L, [&](const Hypergraph& h) {
      hs += pmfHypergraph(h, p);
      if (h.isComplex()) cs += pmfComplex(h, p);
    });
    CHECK(std::abs(hs - 1.0) < 1e-12);
    CHECK(std::abs(cs - 1.0) < 1e-12);
    CHECK(std::abs(ExactDistribution::complexLaw(L, p).total() - 1.0) < 1e-12);
  }
}

TEST_CASE("sampler laws are the pmfs") {
  CounterRng rng(12, 0);
  for (const char* name : {"delta2", "p3"}) {
    const Ambient L = fixture(name);
    FaceValues p(L->faceCount());
    for (auto& x : p) x = 0.1 + 0.8 * rng.uniform();
    const auto hyper = enumerateOutcomes([&](BernoulliSource& c) { return sampleHypergraph(L, p, c).edges(); });
    for (const auto& [e, w] : hyper) CHECK(w == doctest::Approx(pmfHypergraph(Hypergraph(L, e), p)));
    const auto cx = enumerateOutcomes([&](BernoulliSource& c) { return Hypergraph(sampleComplex(L, p, c)).edges(); });
    double total = 0.0;
    for (const auto& [e, w] : cx) {
      CHECK(w == doctest::Approx(pmfComplex(Hypergraph(L, e), p)).epsilon(1e-12));
      total += w;
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK(cx.size() == enumerateSubComplexes(L).size());
  }
}

TEST_CASE("skeleton models match the stagewise law") {
  for (unsigned n : {3u, 4u})
    for (int r : {1, 2}) {
      const std::vector<double> p{0.7, 0.4, 0.3};
      const Ambient L = AmbientComplex::fullSimplex(n)->skeleton(r);
      const auto law = stagewiseLaw(n, r, p);
      const auto f = ExactDistribution::complexLaw(L, perDimensionValues(*L, p));
      double seen = 0.0;
      for (const auto& [y, w] : law) {
        CHECK(std::abs(f(oracle::toHypergraph(L, y)) - w) < 1e-12);
        seen += w;
      }
      CHECK(std::abs(seen - 1.0) < 1e-12);
      CHECK(std::abs(f.massOffComplexes()) < 1e-15);
    }
}

TEST_CASE("Monte Carlo marginals") {
  const Ambient L = fixture("delta2");
  const FaceValues p = perDimensionValues(*L, std::vector<double>{0.8, 0.6, 0.5});
  const auto exact = marginals(ExactDistribution::complexLaw(L, p));
  const int N = 20000;
  Eigen::VectorXd hc = Eigen::VectorXd::Zero(L->faceCount()), cc = hc;
  for (int i = 0; i < N; ++i) {
    CounterRng a(21, i), b(22, i);
    sampleHypergraph(L, p, a).edges().forEach([&](std::size_t id) { hc[id] += 1; });
    Hypergraph(sampleComplex(L, p, b)).edges().forEach([&](std::size_t id) { cc[id] += 1; });
  }
  for (FaceId id = 0; id < L->faceCount(); ++id) {
    const double sh = std::sqrt(p[id] * (1 - p[id]) / N), sc = std::sqrt(exact[id] * (1 - exact[id]) / N);
    CHECK(std::abs(hc[id] / N - p[id]) < 4 * sh);
    CHECK(std::abs(cc[id] / N - exact[id]) < 4 * sc);
  }
}

TEST_CASE("exact distributions") {
  const Ambient L = fixture("delta1");
  const auto u = ExactDistribution::uniform(L);
  CHECK(u.size() == 8);
  CHECK(u.total() == doctest::Approx(1.0));
  const auto pm = ExactDistribution::pointMass(Hypergraph::full(L));
  CHECK(totalVariation(pm, pm) == 0.0);
  CHECK(totalVariation(u, pm) == doctest::Approx(7.0 / 8));
  CHECK(pm.massOffComplexes() == 0.0);
  CHECK(ExactDistribution::pointMass(Hypergraph(L, {Simplex{1, 2}})).massOffComplexes() == 1.0);
  CHECK_THROWS_AS(totalVariation(u, ExactDistribution::uniform(fixture("p3"))), AmbientMismatch);
  CHECK_THROWS_AS(ExactDistribution::uniform(fixture("p3"), 4), ExactModeUnavailable);
  CounterRng rng(3, 3);
  const auto r = ExactDistribution::random(L, rng);
  CHECK(r.total() == doctest::Approx(1.0));
  CHECK(r.probabilityOf([](const Hypergraph&) { return true; }) == doctest::Approx(1.0));
  EmpiricalDistribution e(L);
  e.add(Hypergraph::full(L));
  e.add(Hypergraph::full(L));
  e.add(Hypergraph::empty(L));
  CHECK(e.frequency(Hypergraph::full(L)) == doctest::Approx(2.0 / 3));
  CHECK(totalVariation(e, pm) == doctest::Approx(1.0 / 3));
  CHECK(totalVariation(e.toExact(), pm) == doctest::Approx(1.0 / 3));
}
