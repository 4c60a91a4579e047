#pragma once

#include "knotpoly/diagram.hpp"
#include "knotpoly/graph.hpp"
#include "knotpoly/jones.hpp"
#include "knotpoly/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace knotpoly {

/// Volume of the regular ideal hyperbolic tetrahedron.
inline constexpr double kV0 = 1.0149416064096536;
inline constexpr double kBoundTolerance = 1e-9;

/// Top three coefficients of T_G(-t,-1/t), at degrees |V|-1, |V|-2, |V|-3.
struct CoefficientPrediction {
  Integer aTop;
  Integer aTopMinus1;
  Integer aTopMinus2;
  int topDegree = 0;
};

/// Closed-form top coefficients from |V|, |E~|, n(2) and the triangle count.
/// Throws HasLoops, or BadArgument when the graph is disconnected.
CoefficientPrediction predictTopCoefficients(const SimplifiedGraph &s, int vertexCount);

/// Compares predictTopCoefficients against jonesEval(g), coefficient by coefficient.
bool verifyPrediction(const Multigraph &g);

/// (|a_{m-1}|, |a_{m-2}|) from trace A~^2, trace A~^3 and n(2):
///   |a_{m-1}| = trace A~^2 / 2 + 1 - |V|
///   |a_{m-2}| = C(|a_{m-1}| + 1, 2) + n(2) - trace A~^3 / 6
std::pair<Integer, Integer> traceCorollary(const SimplifiedGraph &s, int vertexCount);

struct TwistProfile {
  std::vector<std::pair<int, Integer>> coeffs; // a_n .. a_m, interior zeros explicit
  std::vector<Integer> twists;                 // twists[i-1] = T_i = |a_{n+i}| + |a_{m-i}|
  int span = 0;

  /// T_i for 1 <= i <= span/2; throws BadArgument otherwise.
  const Integer &twist(int i) const;
  /// |a_{n+k}| and |a_{m-k}|.
  Integer lowAbs(int k) const;
  Integer highAbs(int k) const;
};

/// Throws ZeroPolynomial.
TwistProfile twistProfile(const LaurentPoly &jones);
inline TwistProfile twistProfile(const JonesPolynomial &j) { return twistProfile(j.poly); }

/// |E~| + |E~*| - |E| from the checkerboard pair. Throws NotAlternating / NotReduced.
int twistNumberFromGraphs(const PlanarDiagram &d);

/// Both sides of the second-order identity
///   |a_{n+2}| + |a_{m-2}| + |a_{n+1}||a_{m-1}| = (T + T^2)/2 + n(2) + n*(2) - tri - tri*.
struct SecondOrderSides {
  Integer fromJones;
  Integer fromGraphs;
};
SecondOrderSides secondOrderSides(const PlanarDiagram &d);
bool secondOrderIdentityCheck(const PlanarDiagram &d);

/// Structural facts of Jones polynomials of reduced alternating diagrams.
struct AlternatingStructure {
  bool spanEqualsCrossings = false;
  bool signsAlternate = false; // (-1)^k a_k never changes sign; zero coefficients allowed
  bool extremeCoefficientsUnit = false;

  bool all() const noexcept { return spanEqualsCrossings && signsAlternate && extremeCoefficientsUnit; }
};
AlternatingStructure alternatingStructure(const LaurentPoly &jones, int crossings);

/// Census metadata the volume bounds depend on; never computed here.
struct KnotFlags {
  bool alternating = false;
  bool prime = false;
  bool torus = false;

  bool volumeHypothesis() const noexcept { return alternating && prime && !torus; }
};

struct VolumeBounds {
  double lower = 0;         // 2 v0 (max(|a_{n+1}|, |a_{m-1}|) - 1)
  double upper = 0;         // 10 v0 (|a_{n+1}| + |a_{m-1}| - 1)
  double lackenbyLower = 0; // v0 (T - 2)
  double lackenbyUpper = 0; // 10 v0 (T - 1), strict
  std::optional<double> adamsUpper;
  std::optional<KnotFlags> flags;

  bool volumeishHolds(double volume, double tol = kBoundTolerance) const;
  bool lackenbyHolds(double volume, double tol = kBoundTolerance) const;
};

/// (4c - 16) v0 for c > 4.
std::optional<double> adamsUpper(int crossings);

/// Needs span >= 2 (BadArgument otherwise). Values are reported as computed,
/// so tiny knots can get negative lower bounds.
VolumeBounds volumeBounds(const TwistProfile &p, std::optional<int> crossings = std::nullopt,
                          std::optional<KnotFlags> flags = std::nullopt);

} // namespace knotpoly
