#pragma once

#include "knotpoly/diagram.hpp"
#include "knotpoly/polynomial.hpp"

#include <string_view>

namespace knotpoly {

enum class JonesRoute { Tutte, Bracket };

std::string_view routeName(JonesRoute route) noexcept;

struct JonesPolynomial {
  LaurentPoly poly;
  JonesRoute route = JonesRoute::Bracket;
};

inline constexpr int kMaxBracketCrossings = 24;

/// V(t) = (-1)^w t^((b - a + 3w)/4) T_G(-t, -1/t) with G the positive
/// checkerboard graph, a = |V(G)|, b = |V(G*)|.
/// Throws NotAlternating, NotReduced (loops in either graph) or NonIntegralShift.
JonesPolynomial jonesViaTutte(const PlanarDiagram &d);

/// Kauffman bracket state sum with writhe correction, t = A^-4. Works for any
/// diagram up to kMaxBracketCrossings crossings (TooLarge beyond). Throws
/// NonIntegralExponent if an A-exponent is not divisible by 4.
JonesPolynomial jonesViaBracket(const PlanarDiagram &d);

/// Raw bracket <D> in the variable A, without writhe normalization.
LaurentPoly kauffmanBracket(const PlanarDiagram &d);

} // namespace knotpoly
