#include <doctest.h>

#include "hyperop/enumerate.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/expression.hpp"
#include "hyperop/normalize.hpp"
#include "hyperop/operators.hpp"
#include "hyperop/suites.hpp"
#include "hyperop/word.hpp"
#include "oracle.hpp"

using namespace hyperop;
using A = Atom;

TEST_CASE("word construction and arity") {
  CHECK(OperatorWord::identity().arity() == 1);
  CHECK(OperatorWord::ext().atoms() == std::vector<Atom>{A::Delta, A::gamma, A::delta, A::gamma});
  const auto m = OperatorWord::meet(OperatorWord::atom(A::gamma), OperatorWord::atom(A::gamma));
  CHECK(m.arity() == 2);
  CHECK_FALSE(m.isChain());
  CHECK(OperatorWord::compose(m, m).arity() == 4);
  CHECK(OperatorWord::power(OperatorWord::alpha(), 3).atoms()->size() == 6);
  CHECK_THROWS(OperatorWord::power(m, 2));
  CHECK_THROWS(OperatorWord::power(OperatorWord::alpha(), 0));
}

TEST_CASE("word evaluation identities") {
  const Ambient L = fixture("delta2");
  const auto gg = OperatorWord::chain({A::gamma, A::gamma});
  const auto Dd = OperatorWord::chain({A::Delta, A::delta});
  const auto g = OperatorWord::atom(A::gamma);
  const auto lhs = OperatorWord::compose(g, OperatorWord::join(OperatorWord::atom(A::Delta), OperatorWord::atom(A::delta)));
  const auto rhs = OperatorWord::meet(OperatorWord::chain({A::gamma, A::Delta}), OperatorWord::chain({A::gamma, A::delta}));
  forEachSubHypergraph(L, [&](const Hypergraph& h) {
    CHECK(evalWord(gg, h) == h);
    CHECK(evalWord(Dd, h) == Hypergraph(interiorDelta(h)));
    const Hypergraph args[] = {h, complementGamma(h)};
    CHECK(evalWord(lhs, args) == evalWord(rhs, args));
  });
}

TEST_CASE("evaluation checks arity and ambient") {
  const Ambient L = fixture("delta1");
  const auto m = OperatorWord::meet(OperatorWord::identity(), OperatorWord::identity());
  const Hypergraph h = Hypergraph::full(L);
  CHECK_THROWS_AS(evalWord(m, h), ArityMismatch);
  const Hypergraph mixed[] = {h, Hypergraph::full(fixture("p3"))};
  CHECK_THROWS_AS(evalWord(m, mixed), AmbientMismatch);
  CHECK(evalWord(OperatorWord::atom(A::Zero), h).isEmpty());
}

TEST_CASE("parser atoms and aliases") {
  CHECK(parseExpression("gamma^2").word == OperatorWord::chain({A::gamma, A::gamma}));
  CHECK(parseExpression("Ext").word == OperatorWord::chain({A::Delta, A::gamma, A::delta, A::gamma}));
  CHECK(parseExpression("Int").word == OperatorWord::chain({A::delta, A::gamma, A::Delta, A::gamma}));
  CHECK(parseExpression("alpha").word == OperatorWord::chain({A::Delta, A::gamma}));
  CHECK(parseExpression("beta . NbdInv").word == OperatorWord::chain({A::delta, A::gamma, A::NbdInv}));
  const auto w = parseExpression("Delta.(gamma /\\ gamma)").word;
  CHECK(w.arity() == 2);
  CHECK(w == OperatorWord::compose(OperatorWord::atom(A::Delta),
                                   OperatorWord::meet(OperatorWord::atom(A::gamma), OperatorWord::atom(A::gamma))));
}

TEST_CASE("parser precedence") {
  // '^' before '.', '.' before '+' and '/\', which share a level.
  CHECK(parseExpression("Delta.gamma^2").word == OperatorWord::chain({A::Delta, A::gamma, A::gamma}));
  CHECK(parseExpression("(Delta.gamma)^2").word == OperatorWord::chain({A::Delta, A::gamma, A::Delta, A::gamma}));
  const auto d = OperatorWord::atom(A::Delta);
  const auto g = OperatorWord::atom(A::gamma);
  const auto dl = OperatorWord::atom(A::delta);
  CHECK(parseExpression("Delta + gamma.delta").word == OperatorWord::join(d, OperatorWord::compose(g, dl)));
  CHECK(parseExpression("Delta + gamma /\\ delta").word == OperatorWord::meet(OperatorWord::join(d, g), dl));
  CHECK(parseExpression("Delta /\\ gamma + delta").word == OperatorWord::join(OperatorWord::meet(d, g), dl));
}

TEST_CASE("parser errors carry positions") {
  auto pos = [](const char* text) -> std::size_t {
    try {
      parseExpression(text);
    } catch (const ParseError& e) {
      return e.position;
    }
    return 999;
  };
  CHECK(pos("Delta.Foo") == 6);
  CHECK(pos("(Delta") == 0);
  CHECK(pos("Delta)") == 5);
  CHECK(pos("gamma^0") == 6);
  CHECK(pos("gamma^-1") == 6);
  CHECK(pos("gamma^") == 6);
  CHECK(pos("") == 0);
  CHECK(pos("Delta +") == 7);
  CHECK(pos("(gamma + gamma)^2") == 0);
}

TEST_CASE("printed words parse back") {
  for (const char* text : {"Delta", "Delta.gamma.delta", "Delta.(gamma /\\ delta)", "Delta + delta",
                           "(Delta + delta) /\\ gamma", "Nbd.NbdInv", "id + gamma"}) {
    const auto w = parseExpression(text).word;
    CHECK(parseExpression(w.toString()).word == w);
  }
}

TEST_CASE("normalization rules") {
  auto norm = [](const char* text) { return normalizeWord(parseExpression(text).word).toString(); };
  CHECK(norm("Delta.Delta") == "Delta");
  CHECK(norm("Delta.delta") == "delta");
  CHECK(norm("delta.Delta") == "Delta");
  CHECK(norm("delta^5") == "delta");
  CHECK(norm("gamma^2") == "id");
  CHECK(norm("gamma^3") == "gamma");
  CHECK(norm("(Delta.gamma.Delta.gamma)^2") == "Delta.gamma.Delta.gamma");
  CHECK(norm("(delta.gamma.delta.gamma)^3") == "delta.gamma.delta.gamma");
  CHECK(norm("Delta.Nbd.Delta.Delta") == "Delta.Nbd.Delta");
  CHECK(norm("Delta.Delta.(gamma.gamma + delta.delta)") == "Delta.(id + delta)");
}

TEST_CASE("normalized words are extensionally equal to their sources") {
  const Ambient L = fixture("delta2");
  const auto hs = enumerateSubHypergraphs(L);
  for (const char* text : {"Delta.delta.gamma.gamma.Delta", "(alpha)^4", "(beta)^4", "alpha^3.beta^2",
                           "Ext^2.Int", "gamma.Delta.Delta.gamma.gamma.delta", "Nbd.Delta.Delta",
                           "(Ext^2)^2.delta.delta"}) {
    const auto w = parseExpression(text).word;
    const auto n = normalizeWord(w);
    for (const auto& h : hs) REQUIRE(evalWord(w, h) == evalWord(n, h));
  }
}

TEST_CASE("alpha and beta powers on complexes") {
  const Ambient L = fixture("sk1delta3");
  const auto a2 = OperatorWord::power(OperatorWord::alpha(), 2), a4 = OperatorWord::power(OperatorWord::alpha(), 4);
  const auto b2 = OperatorWord::power(OperatorWord::beta(), 2), b4 = OperatorWord::power(OperatorWord::beta(), 4);
  for (const auto& k : enumerateSubComplexes(L)) {
    CHECK(evalWord(a4, k) == evalWord(a2, k));
    CHECK(evalWord(b4, k) == evalWord(b2, k));
  }
}
