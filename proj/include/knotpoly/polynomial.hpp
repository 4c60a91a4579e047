#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace knotpoly {

using Integer = boost::multiprecision::cpp_int;

enum class TermOrder { Ascending, Descending };

/// Univariate Laurent polynomial in t with exact integer coefficients.
/// Sparse: only nonzero coefficients are stored, the zero polynomial is empty.
class LaurentPoly {
public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(Integer c);
  static LaurentPoly monomial(Integer c, int exponent);
  // Builds sum_k coeffs[k] t^(minExponent + k).
  static LaurentPoly fromCoefficients(const std::vector<Integer> &coeffs, int minExponent);

  bool isZero() const noexcept { return terms_.empty(); }
  int minDegree() const; // requires nonzero
  int maxDegree() const; // requires nonzero
  Integer coefficient(int exponent) const;
  const Terms &terms() const noexcept { return terms_; }

  LaurentPoly &operator+=(const LaurentPoly &other);
  LaurentPoly &operator-=(const LaurentPoly &other);
  LaurentPoly &operator*=(const LaurentPoly &other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly &q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly &q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q);
  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  LaurentPoly pow(unsigned n) const;
  // Multiplies by t^k.
  LaurentPoly shifted(int k) const;
  // t -> 1/t.
  LaurentPoly mirrored() const;
  Integer valueAtOne() const;

  std::string toString(TermOrder order = TermOrder::Ascending, char var = 't') const;

private:
  void addTerm(int exponent, const Integer &c);
  Terms terms_;
};

/// Dense coefficient list from minDegree to maxDegree, interior zeros explicit.
/// Throws Error(ZeroPolynomial) for the zero polynomial.
std::vector<std::pair<int, Integer>> coefficients(const LaurentPoly &p);

/// Bivariate polynomial in (x, y), nonnegative exponents, exact integer coefficients.
class TuttePoly {
public:
  using Exponents = std::pair<int, int>; // (xExp, yExp)
  using Terms = std::map<Exponents, Integer>;

  TuttePoly() = default;
  explicit TuttePoly(Terms terms);

  static TuttePoly one();
  static TuttePoly x();
  static TuttePoly y();
  static TuttePoly monomial(Integer c, int xExp, int yExp);

  bool isZero() const noexcept { return terms_.empty(); }
  Integer coefficient(int xExp, int yExp) const;
  const Terms &terms() const noexcept { return terms_; }

  TuttePoly &operator+=(const TuttePoly &other);
  TuttePoly &operator-=(const TuttePoly &other);
  friend TuttePoly operator+(TuttePoly p, const TuttePoly &q) { return p += q; }
  friend TuttePoly operator-(TuttePoly p, const TuttePoly &q) { return p -= q; }
  friend TuttePoly operator*(const TuttePoly &p, const TuttePoly &q);
  friend bool operator==(const TuttePoly &, const TuttePoly &) = default;

  TuttePoly pow(unsigned n) const;
  // x <-> y, the Tutte polynomial of the planar dual.
  TuttePoly swapped() const;
  // Canonical monomial order: (xExp, yExp) lexicographically descending.
  std::string toString() const;

private:
  void addTerm(Exponents e, const Integer &c);
  Terms terms_;
};

/// Substitutes x = -t, y = -1/t: c x^i y^j -> c (-1)^(i+j) t^(i-j).
LaurentPoly evalTutteAtJonesPoint(const TuttePoly &tutte);

} // namespace knotpoly
