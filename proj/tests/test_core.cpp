#include <doctest.h>

#include "hyperop/enumerate.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/operators.hpp"
#include "hyperop/suites.hpp"
#include "oracle.hpp"

using namespace hyperop;

namespace {

Ambient delta1() { return AmbientComplex::fullSimplex(2); }
Ambient delta2() { return AmbientComplex::fullSimplex(3); }
Ambient p3() { return AmbientComplex::fromGenerators({Simplex{1, 2}, Simplex{2, 3}}); }

}  // namespace

TEST_CASE("simplex canonical form") {
  Simplex s{3, 1, 2};
  CHECK(s.toString() == "{1,2,3}");
  CHECK(s.dimension() == 2);
  CHECK(s.facets().size() == 3);
  CHECK(Simplex{1} < Simplex{1, 2});
  CHECK(Simplex{1, 3} > Simplex{1, 2});
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), std::invalid_argument);
  CHECK_THROWS_AS((Simplex{1, 1}), std::invalid_argument);
}

TEST_CASE("bitset basics") {
  BitSet a(130), b(130);
  a.set(0);
  a.set(129);
  b.set(129);
  CHECK(a.count() == 2);
  CHECK(b.isSubsetOf(a));
  CHECK_FALSE(a.isSubsetOf(b));
  CHECK((a - b).count() == 1);
  CHECK((~a).count() == 128);
  CHECK(a.indices() == std::vector<std::size_t>{0, 129});
  CHECK(BitSet::fromPattern(5, 0b10110).pattern() == 0b10110);
}

TEST_CASE("ambient closes generators downward") {
  const auto L = delta2();
  CHECK(L->faceCount() == 7);
  CHECK(L->dimension() == 2);
  CHECK(L->maximalSimplices() == std::vector<Simplex>{Simplex{1, 2, 3}});
  const auto sk = L->skeleton(1);
  CHECK(sk->faceCount() == 6);
  CHECK(sk->maximalSimplices().size() == 3);
  CHECK(p3()->faceCount() == 5);
  CHECK_THROWS_AS(L->idOf(Simplex{4}), NotAFace);
  CHECK(sameAmbient(delta2(), L));
  CHECK_FALSE(sameAmbient(p3(), L));
}

TEST_CASE("closure and interior examples") {
  const auto L1 = delta1();
  CHECK(closureDelta(Hypergraph(L1, {Simplex{1, 2}})) == Hypergraph(L1, {Simplex{1}, Simplex{2}, Simplex{1, 2}}));
  CHECK(closureDelta(Hypergraph::empty(L1)).isEmpty());
  const auto L2 = delta2();
  CHECK(closureDelta(Hypergraph(L2, {Simplex{1, 2, 3}})).isFull());

  CHECK(interiorDelta(Hypergraph(L1, {Simplex{1, 2}})).isEmpty());
  const Hypergraph k(L1, {Simplex{1}, Simplex{2}, Simplex{1, 2}});
  CHECK(interiorDelta(k) == k);
  const Hypergraph h(L2, {Simplex{1}, Simplex{2}, Simplex{3}, Simplex{1, 2}, Simplex{2, 3}, Simplex{1, 2, 3}});
  CHECK(interiorDelta(h) ==
        Hypergraph(L2, {Simplex{1}, Simplex{2}, Simplex{3}, Simplex{1, 2}, Simplex{2, 3}}));
}

TEST_CASE("complement examples") {
  const auto L = delta1();
  CHECK(complementGamma(Hypergraph::empty(L)).isFull());
  CHECK(complementGamma(Hypergraph::full(L)).isEmpty());
  CHECK(complementGamma(Hypergraph(L, {Simplex{1}, Simplex{1, 2}})) == Hypergraph(L, {Simplex{2}}));
}

TEST_CASE("extension and interior on the path") {
  const auto L = p3();
  CHECK(ext(Hypergraph(L, {Simplex{2}})).isFull());
  CHECK(ext(Hypergraph::empty(L)).isEmpty());
  CHECK(ext(Hypergraph(L, {Simplex{1}})) == Hypergraph(L, {Simplex{1}, Simplex{2}, Simplex{1, 2}}));
  CHECK(interior(Hypergraph::full(L)).isFull());
  CHECK(interior(Hypergraph(L, {Simplex{1}, Simplex{2}, Simplex{1, 2}})) == Hypergraph(L, {Simplex{1}}));
  const auto L2 = delta2();
  CHECK(interior(Hypergraph(L2, {Simplex{1}, Simplex{2}, Simplex{3}, Simplex{1, 2}, Simplex{2, 3}})).isEmpty());
}

TEST_CASE("union and intersection") {
  const auto L = delta1();
  const Hypergraph a(L, {Simplex{1}});
  const Hypergraph b(L, {Simplex{2}});
  CHECK((a | b) == Hypergraph(L, {Simplex{1}, Simplex{2}}));
  CHECK((a | Hypergraph::empty(L)) == a);
  CHECK((a & Hypergraph::full(L)) == a);
  CHECK_THROWS_AS(a | Hypergraph::empty(delta2()), AmbientMismatch);
  CHECK_THROWS_AS(a & Hypergraph::empty(p3()), AmbientMismatch);
}

TEST_CASE("external faces and cliques") {
  const auto L = delta1();
  CHECK(externalFaces(Hypergraph::empty(L)) == Hypergraph(L, {Simplex{1}, Simplex{2}}));
  CHECK(externalFaces(Hypergraph::full(L)).isEmpty());
  CHECK(externalFaces(Hypergraph(L, {Simplex{1}, Simplex{2}})) == Hypergraph(L, {Simplex{1, 2}}));

  const auto L2 = delta2();
  CHECK(cliques(Hypergraph::empty(L2), 0).size() == 3);
  const Hypergraph boundary(L2, {Simplex{1}, Simplex{2}, Simplex{3}, Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3}});
  CHECK(cliques(boundary, 2) == Hypergraph(L2, {Simplex{1, 2, 3}}));
  CHECK(cliques(Hypergraph(L2, {Simplex{1}, Simplex{2}}), 1) == Hypergraph(L2, {Simplex{1, 2}}));
}

TEST_CASE("complex type checks closure") {
  const auto L = delta1();
  CHECK_THROWS_AS(Complex(Hypergraph(L, {Simplex{1, 2}})), InvalidComplex);
  CHECK_NOTHROW(Complex(Hypergraph(L, {Simplex{1}})));
  CHECK_THROWS_AS(Hypergraph(L, {Simplex{3}}), NotAFace);
}

TEST_CASE("operators agree with the set oracle on every sub-hypergraph") {
  for (const char* name : {"delta1", "delta2", "p3", "sk1delta3"}) {
    const Ambient L = fixture(name);
    const auto F = oracle::faces(*L);
    forEachSubHypergraph(L, [&](const Hypergraph& h) {
      const auto H = oracle::of(h);
      REQUIRE(oracle::of(closureDelta(h)) == oracle::closure(F, H));
      REQUIRE(oracle::of(interiorDelta(h)) == oracle::interior(F, H));
      REQUIRE(oracle::of(complementGamma(h)) == oracle::complement(F, H));
      REQUIRE(oracle::of(ext(h)) == oracle::ext(F, H));
      REQUIRE(oracle::of(interior(h)) == oracle::intr(F, H));
      REQUIRE(oracle::of(externalFaces(h)) == oracle::external(F, H));
      REQUIRE(h.isComplex() == oracle::isComplex(H));
      // Int as faces missing every edge of γH.
      oracle::Family byMeets;
      const auto G = oracle::complement(F, H);
      for (const auto& t : F) {
        bool clear = true;
        for (const auto& s : G) clear = clear && !oracle::meets(t, s);
        if (clear) byMeets.insert(t);
      }
      REQUIRE(oracle::of(interior(h)) == byMeets);
    });
  }
}

TEST_CASE("operators are pure and idempotent") {
  const Ambient L = fixture("p3");
  forEachSubHypergraph(L, [&](const Hypergraph& h) {
    const Hypergraph D = closureDelta(h), d = interiorDelta(h);
    CHECK(closureDelta(D) == D);
    CHECK(interiorDelta(d) == d);
    CHECK(d.isSubsetOf(h));
    CHECK(h.isSubsetOf(D));
  });
}

TEST_CASE("sub-complex enumeration") {
  const auto L = delta1();
  CHECK(subHypergraphCount(*L) == 8);
  CHECK(enumerateSubComplexes(L).size() == 5);
  for (const auto& k : enumerateSubComplexes(delta2())) CHECK(k.isComplex());
  std::size_t manual = 0;
  forEachSubHypergraph(delta2(), [&](const Hypergraph& h) { manual += h.isComplex(); });
  CHECK(enumerateSubComplexes(delta2()).size() == manual);
  CHECK_THROWS_AS(subHypergraphCount(*AmbientComplex::fullSimplex(5)), ExactModeUnavailable);
}
