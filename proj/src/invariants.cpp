#include "knotpoly/invariants.hpp"

#include "knotpoly/error.hpp"
#include "knotpoly/tutte.hpp"

#include <algorithm>

namespace knotpoly {

namespace {

Integer choose2(const Integer &n) { return n * (n - 1) / 2; }

Integer absolute(const Integer &v) { return v < 0 ? Integer(-v) : v; }

void requireLoopFreeConnected(const SimplifiedGraph &s) {
  if (s.loopCount() > 0)
    throw Error(ErrorCode::HasLoops, "coefficient formulas need a loop-free graph");
  UnionFind uf(static_cast<std::size_t>(s.vertexCount()));
  for (const auto &c : s.base())
    uf.unite(static_cast<std::size_t>(c.u), static_cast<std::size_t>(c.v));
  if (s.vertexCount() > 0 && uf.components() != 1)
    throw Error(ErrorCode::BadArgument, "coefficient formulas need a connected graph");
}

struct GraphData {
  int vertices;
  int simpleEdges;
  int nTwo;
  int triangles;
};

GraphData graphData(const Multigraph &g) {
  const auto s = simplify(g);
  return {g.vertexCount(), static_cast<int>(s.baseEdgeCount()), nCount(s, 2), triangleCount(s)};
}

SignedCheckerboards reducedCheckerboards(const PlanarDiagram &d) {
  auto graphs = signedCheckerboards(d);
  if (graphs.positive.hasLoops() || graphs.negative.hasLoops())
    throw Error(ErrorCode::NotReduced, "diagram has a nugatory crossing (loop in a checkerboard graph)");
  return graphs;
}

} // namespace

CoefficientPrediction predictTopCoefficients(const SimplifiedGraph &s, int vertexCount) {
  requireLoopFreeConnected(s);
  const Integer sign = (vertexCount - 1) % 2 == 0 ? 1 : -1;
  const Integer edges = static_cast<long long>(s.baseEdgeCount());
  CoefficientPrediction p;
  p.topDegree = vertexCount - 1;
  p.aTop = sign;
  p.aTopMinus1 = sign * (vertexCount - 1 - edges);
  const Integer m1 = absolute(p.aTopMinus1);
  p.aTopMinus2 = -sign * (-choose2(m1 + 1) - nCount(s, 2) + triangleCount(s));
  return p;
}

bool verifyPrediction(const Multigraph &g) {
  const auto s = simplify(g);
  const auto p = predictTopCoefficients(s, g.vertexCount());
  const auto actual = jonesEval(g);
  return actual.maxDegree() == p.topDegree && actual.coefficient(p.topDegree) == p.aTop &&
         actual.coefficient(p.topDegree - 1) == p.aTopMinus1 &&
         actual.coefficient(p.topDegree - 2) == p.aTopMinus2;
}

std::pair<Integer, Integer> traceCorollary(const SimplifiedGraph &s, int vertexCount) {
  requireLoopFreeConnected(s);
  const auto traces = adjacencyTraces(s);
  const Integer m1 = Integer(traces.trace2 / 2) + 1 - vertexCount;
  const Integer m2 = choose2(m1 + 1) + traces.nTwo - Integer(traces.trace3 / 6);
  return {m1, m2};
}

const Integer &TwistProfile::twist(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > twists.size())
    throw Error(ErrorCode::BadArgument, "T_" + std::to_string(i) + " undefined for span " +
                                            std::to_string(span));
  return twists[static_cast<std::size_t>(i - 1)];
}

Integer TwistProfile::lowAbs(int k) const {
  if (k < 0 || k > span)
    throw Error(ErrorCode::BadArgument, "coefficient index out of range");
  return absolute(coeffs[static_cast<std::size_t>(k)].second);
}

Integer TwistProfile::highAbs(int k) const {
  if (k < 0 || k > span)
    throw Error(ErrorCode::BadArgument, "coefficient index out of range");
  return absolute(coeffs[static_cast<std::size_t>(span - k)].second);
}

TwistProfile twistProfile(const LaurentPoly &jones) {
  TwistProfile p;
  p.coeffs = coefficients(jones);
  p.span = jones.maxDegree() - jones.minDegree();
  for (int i = 1; i <= p.span / 2; ++i)
    p.twists.push_back(p.lowAbs(i) + p.highAbs(i));
  return p;
}

int twistNumberFromGraphs(const PlanarDiagram &d) {
  const auto graphs = reducedCheckerboards(d);
  const auto g = graphData(graphs.positive);
  const auto gStar = graphData(graphs.negative);
  return g.simpleEdges + gStar.simpleEdges - static_cast<int>(graphs.positive.edgeCount());
}

SecondOrderSides secondOrderSides(const PlanarDiagram &d) {
  const auto graphs = reducedCheckerboards(d);
  const auto g = graphData(graphs.positive);
  const auto gStar = graphData(graphs.negative);
  const Integer t = g.simpleEdges + gStar.simpleEdges - static_cast<int>(graphs.positive.edgeCount());
  const auto profile = twistProfile(jonesViaTutte(d));
  if (profile.span < 2)
    throw Error(ErrorCode::BadArgument, "second-order identity needs span >= 2");
  SecondOrderSides sides;
  sides.fromJones = profile.lowAbs(2) + profile.highAbs(2) + profile.lowAbs(1) * profile.highAbs(1);
  sides.fromGraphs = (t + t * t) / 2 + g.nTwo + gStar.nTwo - g.triangles - gStar.triangles;
  return sides;
}

bool secondOrderIdentityCheck(const PlanarDiagram &d) {
  const auto sides = secondOrderSides(d);
  return sides.fromJones == sides.fromGraphs;
}

AlternatingStructure alternatingStructure(const LaurentPoly &jones, int crossings) {
  const auto cs = coefficients(jones);
  AlternatingStructure s;
  s.spanEqualsCrossings = jones.maxDegree() - jones.minDegree() == crossings;
  s.extremeCoefficientsUnit = absolute(cs.front().second) == 1 && absolute(cs.back().second) == 1;
  int orientation = 0;
  s.signsAlternate = true;
  for (const auto &[e, c] : cs) {
    if (c == 0)
      continue;
    const int sign = ((c > 0) == (e % 2 == 0)) ? 1 : -1;
    if (orientation == 0)
      orientation = sign;
    else if (orientation != sign)
      s.signsAlternate = false;
  }
  return s;
}

bool VolumeBounds::volumeishHolds(double volume, double tol) const {
  return lower - tol <= volume && volume <= upper + tol;
}

bool VolumeBounds::lackenbyHolds(double volume, double tol) const {
  return lackenbyLower - tol <= volume && volume < lackenbyUpper + tol;
}

std::optional<double> adamsUpper(int crossings) {
  if (crossings <= 4)
    return std::nullopt;
  return (4.0 * crossings - 16.0) * kV0;
}

VolumeBounds volumeBounds(const TwistProfile &p, std::optional<int> crossings,
                          std::optional<KnotFlags> flags) {
  if (p.span < 2)
    throw Error(ErrorCode::BadArgument, "volume bounds need a Jones span of at least 2");
  const double low1 = p.lowAbs(1).convert_to<double>();
  const double high1 = p.highAbs(1).convert_to<double>();
  const double t1 = p.twist(1).convert_to<double>();
  VolumeBounds b;
  b.lower = 2.0 * kV0 * (std::max(low1, high1) - 1.0);
  b.upper = 10.0 * kV0 * (low1 + high1 - 1.0);
  b.lackenbyLower = kV0 * (t1 - 2.0);
  b.lackenbyUpper = 10.0 * kV0 * (t1 - 1.0);
  if (crossings)
    b.adamsUpper = adamsUpper(*crossings);
  b.flags = flags;
  return b;
}

} // namespace knotpoly
