#include "oracles.hpp"

#include "knotpoly/diagram.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/tutte.hpp"

#include <doctest.h>

using namespace knotpoly;

namespace {

ErrorCode codeOf(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadArgument;
}

Multigraph parallel(int m) {
  Multigraph g(2);
  for (int i = 0; i < m; ++i)
    g.addEdge(0, 1);
  return g;
}

const Multigraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});

} // namespace

TEST_CASE("small tutte polynomials") {
  const Multigraph bridge(2, {{0, 1}});
  const Multigraph loop(1, {{0, 0}});
  CHECK(tutteBruteForce(bridge).toString() == "x");
  CHECK(tutteBruteForce(loop).toString() == "y");
  CHECK(tutteBruteForce(kTriangle).toString() == "x^2 + x + y");
  CHECK(tutteBruteForce(Multigraph(1)) == TuttePoly::one());
  CHECK(tutteDeletionContraction(Multigraph(1)) == TuttePoly::one());
  CHECK(tutteDeletionContraction(Multigraph(3)) == TuttePoly::one());
  CHECK(tutteDeletionContraction(kTriangle).toString() == "x^2 + x + y");
  CHECK(tutteDeletionContraction(parallel(3)).toString() == "x + y^2 + y");
  CHECK(tutteDeletionContraction(loop).toString() == "y");
  CHECK(tutteDeletionContraction(Multigraph(1, {{0, 0}, {0, 0}})).toString() == "y^2");
  // bridge plus loop: x y
  CHECK(tutteDeletionContraction(Multigraph(2, {{0, 1}, {1, 1}})).toString() == "xy");
}

TEST_CASE("brute force size limit") {
  CHECK(codeOf([] { (void)tutteBruteForce(parallel(25)); }) == ErrorCode::TooLarge);
  CHECK_NOTHROW((void)tutteDeletionContraction(parallel(25)));
}

TEST_CASE("parallel block closed form") {
  for (int m = 1; m <= 6; ++m) {
    TuttePoly expected = TuttePoly::x();
    for (int j = 1; j < m; ++j)
      expected += TuttePoly::monomial(1, 0, j);
    CHECK(tutteBruteForce(parallel(m)) == expected);
    CHECK(tutteDeletionContraction(parallel(m)) == expected);
    CHECK(oracle::bivariate(expected) == oracle::tutte(parallel(m)));
  }
}

TEST_CASE("p series") {
  CHECK(pSeries(1).value == LaurentPoly::constant(1));
  CHECK(pSeries(2).value.toString() == "-t^-1 + 1");
  CHECK(pSeries(4).value.toString(TermOrder::Descending) == "1 - t^-1 + t^-2 - t^-3");
  CHECK(pSeries(5).m == 5);
  CHECK(codeOf([] { (void)pSeries(0); }) == ErrorCode::BadArgument);
}

TEST_CASE("jones point evaluations") {
  const auto tri = LaurentPoly::fromCoefficients({-1, 0, -1, 1}, -1); // t^2 - t - t^-1
  CHECK(jonesEvalWeighted(kTriangle) == tri);
  CHECK(jonesEval(kTriangle) == tri);
  const auto triple = LaurentPoly::fromCoefficients({1, -1, 0, -1}, -2); // -t - t^-1 + t^-2
  CHECK(jonesEvalWeighted(parallel(3)) == triple);
  CHECK(jonesEval(parallel(3)) == triple);
  CHECK(jonesEvalWeighted(parallel(1)) == LaurentPoly::monomial(-1, 1));
  CHECK(jonesEval(parallel(1)) == LaurentPoly::monomial(-1, 1));
  CHECK(codeOf([] { (void)jonesEvalWeighted(Multigraph(1, {{0, 0}})); }) == ErrorCode::HasLoops);
  Multigraph big(26);
  for (int i = 0; i < 25; ++i)
    big.addEdge(i, i + 1);
  CHECK(codeOf([&] { (void)jonesEvalWeighted(big); }) == ErrorCode::TooLarge);
  // a tree: T = x^25
  CHECK(jonesEval(big) == LaurentPoly::monomial(-1, 25));
}

TEST_CASE("three-way agreement on random planar multigraphs") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::randomPlanarMultigraph(rng);
    REQUIRE(g.isConnected());
    REQUIRE_FALSE(g.hasLoops());
    const auto brute = tutteBruteForce(g);
    const auto dc = tutteDeletionContraction(g);
    CHECK(oracle::bivariate(brute) == oracle::tutte(g));
    CHECK(dc == brute);
    CHECK(jonesEvalWeighted(g) == evalTutteAtJonesPoint(brute));
    CHECK(jonesEval(g) == evalTutteAtJonesPoint(brute));
    // T(1,1) counts spanning trees, T(2,2) = 2^|E|
    Integer at11 = 0, at22 = 0;
    for (const auto &[e, c] : brute.terms()) {
      at11 += c;
      at22 += c * (Integer(1) << (e.first + e.second));
    }
    CHECK(at22 == Integer(1) << g.edgeCount());
    CHECK(at11 > 0);
  }
}

TEST_CASE("tutte multiplies over blocks and handles loops") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::randomPlanarMultigraph(rng, 6, 10);
    const auto base = tutteDeletionContraction(g);
    g.addEdge(0, 0);
    CHECK(tutteDeletionContraction(g) == base * TuttePoly::y());
    CHECK(tutteBruteForce(g) == base * TuttePoly::y());
    // pendant edge contributes a factor x
    Multigraph h(g.vertexCount() + 1, g.edges());
    h.addEdge(g.vertexCount() - 1, g.vertexCount());
    CHECK(tutteDeletionContraction(h) == base * TuttePoly::y() * TuttePoly::x());
  }
}

TEST_CASE("disconnected graphs") {
  // two triangles, no shared vertex: product of the parts
  Multigraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto t = tutteBruteForce(kTriangle);
  CHECK(tutteBruteForce(g) == t * t);
  CHECK(tutteDeletionContraction(g) == t * t);
  CHECK(oracle::bivariate(t * t) == oracle::tutte(g));
}

TEST_CASE("duality on checkerboard pairs of all fixtures") {
  for (const auto &r : oracle::census()) {
    const auto d = parsePD(r.pd);
    const auto pair = checkerboardGraphs(d);
    CHECK_MESSAGE(tutteDeletionContraction(pair.purple) == tutteDeletionContraction(pair.gold).swapped(), r.name);
  }
}

TEST_CASE("worked example graph evaluations") {
  const auto d = parsePD(oracle::record("13a_123").pd);
  const auto s = signedCheckerboards(d);
  for (const auto *g : {&s.positive, &s.negative}) {
    const auto j = jonesEval(*g);
    CHECK(j == jonesEvalWeighted(*g));
    const int top = g->vertexCount() - 1;
    CHECK(j.maxDegree() == top);
    CHECK(abs(j.coefficient(top)) == 1);
    CHECK(abs(j.coefficient(top - 1)) == 4);
    CHECK(abs(j.coefficient(top - 2)) == 11);
  }
}
