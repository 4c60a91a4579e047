#include "oracles.hpp"

#include "knotpoly/error.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/tutte.hpp"

#include <doctest.h>

#include <cmath>

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

const Multigraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});

// Top three coefficients of an independently computed T_G(-t,-1/t).
std::array<Integer, 3> oracleTop(const Multigraph &g) {
  const auto j = oracle::toPoly(oracle::atJonesPoint(oracle::tutte(g)));
  const int top = g.vertexCount() - 1;
  return {j.coefficient(top), j.coefficient(top - 1), j.coefficient(top - 2)};
}

PlanarDiagram worked() { return parsePD(oracle::record("13a_123").pd); }

} // namespace

TEST_CASE("v0") {
  CHECK(std::round(kV0 * 1e7) / 1e7 == doctest::Approx(1.0149416).epsilon(1e-12));
}

TEST_CASE("prediction on small graphs") {
  const auto p = predictTopCoefficients(simplify(kTriangle), 3);
  CHECK(p.topDegree == 2);
  CHECK(p.aTop == 1);
  CHECK(p.aTopMinus1 == -1);
  CHECK(p.aTopMinus2 == 0);
  CHECK(verifyPrediction(kTriangle));
  const Multigraph path(3, {{0, 1}, {1, 2}});
  CHECK(verifyPrediction(path));
  CHECK(predictTopCoefficients(simplify(path), 3).aTopMinus1 == 0);
  const Multigraph tree(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  CHECK(predictTopCoefficients(simplify(tree), 5).aTopMinus1 == 0);
  CHECK(verifyPrediction(tree));
  CHECK(verifyPrediction(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})));
}

TEST_CASE("prediction errors") {
  CHECK(codeOf([] { (void)predictTopCoefficients(simplify(Multigraph(2, {{0, 1}, {1, 1}})), 2); }) ==
        ErrorCode::HasLoops);
  CHECK(codeOf([] { (void)traceCorollary(simplify(Multigraph(1, {{0, 0}})), 1); }) == ErrorCode::HasLoops);
  CHECK(codeOf([] { (void)predictTopCoefficients(simplify(Multigraph(3, {{0, 1}})), 3); }) ==
        ErrorCode::BadArgument);
}

TEST_CASE("trace corollary") {
  CHECK(traceCorollary(simplify(kTriangle), 3) == std::pair<Integer, Integer>{1, 0});
  const Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(traceCorollary(simplify(star), 4) == std::pair<Integer, Integer>{0, 0});
  CHECK(jonesEval(star) == LaurentPoly::monomial(-1, 3));
}

TEST_CASE("prediction property suite") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::randomPlanarMultigraph(rng);
    const auto s = simplify(g);
    const auto p = predictTopCoefficients(s, g.vertexCount());
    const auto top = oracleTop(g);
    CHECK(p.aTop == top[0]);
    CHECK(p.aTopMinus1 == top[1]);
    CHECK(p.aTopMinus2 == top[2]);
    CHECK(abs(p.aTop) == 1);
    CHECK(verifyPrediction(g));
    const auto [m1, m2] = traceCorollary(s, g.vertexCount());
    CHECK(m1 == abs(top[1]));
    CHECK(m2 == abs(top[2]));
  }
}

TEST_CASE("worked example graph data") {
  const auto d = worked();
  const auto pair = checkerboardGraphs(d);
  const auto s = simplify(pair.purple), sStar = simplify(pair.gold);
  CHECK(pair.purple.vertexCount() == 8);
  CHECK(s.baseEdgeCount() == 11);
  CHECK(nCount(s, 2) == 2);
  CHECK(triangleCount(s) == 1);
  CHECK(pair.gold.vertexCount() == 7);
  CHECK(sStar.baseEdgeCount() == 10);
  CHECK(nCount(sStar, 2) == 3);
  CHECK(triangleCount(sStar) == 2);
  CHECK(twistNumberFromGraphs(d) == 8);

  const auto p = predictTopCoefficients(s, 8);
  CHECK(abs(p.aTopMinus1) == 4);
  CHECK(abs(p.aTopMinus2) == 11);
  const auto q = predictTopCoefficients(sStar, 7);
  CHECK(abs(q.aTopMinus1) == 4);
  CHECK(abs(q.aTopMinus2) == 11);
  CHECK(traceCorollary(s, 8) == std::pair<Integer, Integer>{4, 11});
  CHECK(traceCorollary(sStar, 7) == std::pair<Integer, Integer>{4, 11});
  CHECK(verifyPrediction(pair.purple));
  CHECK(verifyPrediction(pair.gold));

  const auto sides = secondOrderSides(d);
  CHECK(sides.fromJones == 38);
  CHECK(sides.fromGraphs == 38);
  CHECK(secondOrderIdentityCheck(d));
}

TEST_CASE("twist profiles") {
  const auto w = twistProfile(oracle::toPoly(oracle::worked13()));
  CHECK(w.span == 13);
  CHECK(w.twists.size() == 6);
  CHECK(w.twist(1) == 8);
  CHECK(w.twist(2) == 22);
  CHECK(w.lowAbs(0) == 1);
  CHECK(w.highAbs(1) == 4);
  CHECK(codeOf([&] { (void)w.twist(7); }) == ErrorCode::BadArgument);
  CHECK(codeOf([&] { (void)w.twist(0); }) == ErrorCode::BadArgument);

  const auto fig8 = twistProfile(jonesViaBracket(parsePD(oracle::kFigureEight)));
  CHECK(fig8.twist(1) == 2);
  const auto tre = twistProfile(jonesViaBracket(parsePD(oracle::kTrefoil)));
  CHECK(tre.span == 3);
  CHECK(tre.twist(1) == 1);
  CHECK(twistNumberFromGraphs(parsePD(oracle::kTrefoil)) == 1);
  CHECK(twistNumberFromGraphs(parsePD(oracle::kFigureEight)) == 2);
  CHECK(codeOf([] { (void)twistProfile(LaurentPoly()); }) == ErrorCode::ZeroPolynomial);
  CHECK(twistProfile(LaurentPoly::constant(1)).twists.empty());
}

TEST_CASE("twist number errors") {
  CHECK(codeOf([] { (void)twistNumberFromGraphs(parsePD(oracle::record("8_19").pd)); }) ==
        ErrorCode::NotAlternating);
  CHECK(codeOf([] { (void)twistNumberFromGraphs(parsePD("X(1,1,2,2)")); }) == ErrorCode::NotReduced);
  CHECK(codeOf([] { (void)secondOrderIdentityCheck(parsePD(oracle::record("8_19").pd)); }) ==
        ErrorCode::NotAlternating);
}

TEST_CASE("twist identities on all alternating fixtures") {
  std::size_t count = 0;
  for (const auto &r : oracle::census()) {
    if (!r.flags.alternating)
      continue;
    const auto d = parsePD(r.pd);
    const auto j = jonesViaTutte(d);
    const auto p = twistProfile(j);
    CHECK_MESSAGE(p.twist(1) == twistNumberFromGraphs(d), r.name);
    CHECK_MESSAGE(secondOrderIdentityCheck(d), r.name);
    const auto st = alternatingStructure(j.poly, d.crossingCount());
    CHECK_MESSAGE(st.all(), r.name);
    const auto s = signedCheckerboards(d);
    CHECK(verifyPrediction(s.positive));
    CHECK(verifyPrediction(s.negative));
    ++count;
  }
  CHECK(count >= 10);
}

TEST_CASE("alternating structure detects violations") {
  const auto nonAlt = jonesViaBracket(parsePD(oracle::record("8_19").pd)).poly;
  CHECK_FALSE(alternatingStructure(nonAlt, 8).all());
  CHECK_FALSE(alternatingStructure(LaurentPoly::fromCoefficients({1, 1, 1}, 0), 2).signsAlternate);
  CHECK_FALSE(alternatingStructure(LaurentPoly::fromCoefficients({2, -1, 1}, 0), 2).extremeCoefficientsUnit);
  CHECK_FALSE(alternatingStructure(LaurentPoly::fromCoefficients({1, -1, 1}, 0), 3).spanEqualsCrossings);
  CHECK(alternatingStructure(LaurentPoly::fromCoefficients({1, 0, 1, -1}, 1), 3).all());
}

TEST_CASE("volume bounds") {
  const auto b = volumeBounds(twistProfile(oracle::toPoly(oracle::worked13())), 13);
  CHECK(b.lower == doctest::Approx(2 * kV0 * 3).epsilon(1e-15));
  CHECK(b.upper == doctest::Approx(10 * kV0 * 7).epsilon(1e-15));
  CHECK(std::abs(b.lower - 6.0897) < 1e-4);
  CHECK(std::abs(b.upper - 71.046) < 1e-3);
  CHECK(b.lackenbyLower == doctest::Approx(6 * kV0));
  CHECK(b.lackenbyUpper == doctest::Approx(70 * kV0));
  REQUIRE(b.adamsUpper);
  CHECK(std::abs(*b.adamsUpper - 36.538) < 1e-3);
  CHECK(b.volumeishHolds(21.1052106828));
  CHECK(b.lackenbyHolds(21.1052106828));
  CHECK_FALSE(b.volumeishHolds(75.0));

  // |a_{n+1}| = |a_{m-1}| = 1: lower 0, upper 10 v0; T = 2: lackenbyLower = 0
  const auto one = volumeBounds(twistProfile(LaurentPoly::fromCoefficients({1, -1, 1, -1, 1}, -2)));
  CHECK(one.lower == 0);
  CHECK(one.upper == doctest::Approx(10 * kV0));
  CHECK(one.lackenbyLower == 0);
  CHECK_FALSE(one.adamsUpper);
  CHECK(codeOf([] { (void)volumeBounds(twistProfile(LaurentPoly::fromCoefficients({1, 1}, 0))); }) ==
        ErrorCode::BadArgument);

  // strict Lackenby upper bound
  CHECK_FALSE(one.lackenbyHolds(one.lackenbyUpper + 1e-6));
  CHECK(one.lackenbyHolds(one.lackenbyUpper - 1e-6));
}

TEST_CASE("adams bound") {
  CHECK(adamsUpper(13).value() == doctest::Approx(36 * kV0));
  CHECK_FALSE(adamsUpper(4));
  CHECK(adamsUpper(5).value() == doctest::Approx(4 * kV0));
}

TEST_CASE("bound ordering on all fixture profiles") {
  for (const auto &r : oracle::census()) {
    const auto p = twistProfile(jonesViaBracket(parsePD(r.pd)));
    if (p.span < 2)
      continue;
    const auto b = volumeBounds(p, r.crossings, r.flags);
    if (std::max(p.lowAbs(1), p.highAbs(1)) >= 1)
      CHECK_MESSAGE(b.lower <= b.upper, r.name);
    for (const auto &t : p.twists)
      CHECK(t >= 0);
  }
}

TEST_CASE("knot flags") {
  CHECK(KnotFlags{true, true, false}.volumeHypothesis());
  CHECK_FALSE(KnotFlags{true, true, true}.volumeHypothesis());
  CHECK_FALSE(KnotFlags{false, true, false}.volumeHypothesis());
  CHECK_FALSE(KnotFlags{true, false, false}.volumeHypothesis());
}
