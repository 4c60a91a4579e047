#include "knotpoly/polynomial.hpp"

#include "knotpoly/error.hpp"

#include <sstream>

namespace knotpoly {

namespace {

// Appends " + 4t^-3" style text for one term; `first` suppresses the binary operator.
void renderTerm(std::ostringstream &out, bool first, const Integer &c, int exponent,
                const std::string &var) {
  const bool negative = c < 0;
  const Integer magnitude = negative ? Integer(-c) : c;
  if (first) {
    if (negative)
      out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  if (exponent == 0) {
    out << magnitude;
    return;
  }
  if (magnitude != 1)
    out << magnitude;
  out << var;
  if (exponent != 1)
    out << '^' << exponent;
}

} // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::constant(Integer c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Integer c, int exponent) {
  LaurentPoly p;
  p.addTerm(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::fromCoefficients(const std::vector<Integer> &coeffs, int minExponent) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p.addTerm(minExponent + static_cast<int>(k), coeffs[k]);
  return p;
}

int LaurentPoly::minDegree() const {
  if (terms_.empty())
    throw Error(ErrorCode::ZeroPolynomial, "minDegree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::maxDegree() const {
  if (terms_.empty())
    throw Error(ErrorCode::ZeroPolynomial, "maxDegree of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::addTerm(int exponent, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
  for (const auto &[e, c] : other.terms_)
    addTerm(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other) {
  for (const auto &[e, c] : other.terms_)
    addTerm(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q) {
  LaurentPoly r;
  for (const auto &[e1, c1] : p.terms_)
    for (const auto &[e2, c2] : q.terms_)
      r.addTerm(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other) { return *this = *this * other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u)
      result *= base;
    n >>= 1u;
    if (n)
      base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(-e, c);
  return r;
}

Integer LaurentPoly::valueAtOne() const {
  Integer sum = 0;
  for (const auto &[e, c] : terms_)
    sum += c;
  return sum;
}

std::string LaurentPoly::toString(TermOrder order, char var) const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  const std::string v(1, var);
  bool first = true;
  auto emit = [&](const auto &kv) {
    renderTerm(out, first, kv.second, kv.first, v);
    first = false;
  };
  if (order == TermOrder::Ascending) {
    for (const auto &kv : terms_)
      emit(kv);
  } else {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      emit(*it);
  }
  return out.str();
}

std::vector<std::pair<int, Integer>> coefficients(const LaurentPoly &p) {
  if (p.isZero())
    throw Error(ErrorCode::ZeroPolynomial, "coefficient list of the zero polynomial");
  std::vector<std::pair<int, Integer>> out;
  const int lo = p.minDegree(), hi = p.maxDegree();
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e)
    out.emplace_back(e, p.coefficient(e));
  return out;
}

// ------------------------------------------------------------------ TuttePoly

TuttePoly::TuttePoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
  for (const auto &[e, c] : terms_)
    if (e.first < 0 || e.second < 0)
      throw Error(ErrorCode::BadArgument, "Tutte polynomial exponents must be nonnegative");
}

TuttePoly TuttePoly::one() { return monomial(1, 0, 0); }
TuttePoly TuttePoly::x() { return monomial(1, 1, 0); }
TuttePoly TuttePoly::y() { return monomial(1, 0, 1); }

TuttePoly TuttePoly::monomial(Integer c, int xExp, int yExp) {
  if (xExp < 0 || yExp < 0)
    throw Error(ErrorCode::BadArgument, "Tutte polynomial exponents must be nonnegative");
  TuttePoly p;
  p.addTerm({xExp, yExp}, c);
  return p;
}

Integer TuttePoly::coefficient(int xExp, int yExp) const {
  auto it = terms_.find({xExp, yExp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void TuttePoly::addTerm(Exponents e, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

TuttePoly &TuttePoly::operator+=(const TuttePoly &other) {
  for (const auto &[e, c] : other.terms_)
    addTerm(e, c);
  return *this;
}

TuttePoly &TuttePoly::operator-=(const TuttePoly &other) {
  for (const auto &[e, c] : other.terms_)
    addTerm(e, -c);
  return *this;
}

TuttePoly operator*(const TuttePoly &p, const TuttePoly &q) {
  TuttePoly r;
  for (const auto &[e1, c1] : p.terms_)
    for (const auto &[e2, c2] : q.terms_)
      r.addTerm({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

TuttePoly TuttePoly::pow(unsigned n) const {
  TuttePoly result = one();
  for (unsigned i = 0; i < n; ++i)
    result = result * *this;
  return result;
}

TuttePoly TuttePoly::swapped() const {
  TuttePoly r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(Exponents{e.second, e.first}, c);
  return r;
}

std::string TuttePoly::toString() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    if (constant || magnitude != 1)
      out << magnitude;
    auto var = [&](char name, int exp) {
      if (exp == 0)
        return;
      out << name;
      if (exp != 1)
        out << '^' << exp;
    };
    var('x', e.first);
    var('y', e.second);
  }
  return out.str();
}

LaurentPoly evalTutteAtJonesPoint(const TuttePoly &tutte) {
  LaurentPoly::Terms out;
  for (const auto &[e, c] : tutte.terms()) {
    const bool odd = ((e.first + e.second) & 1) != 0;
    out[e.first - e.second] += odd ? Integer(-c) : c;
  }
  return LaurentPoly(std::move(out));
}

} // namespace knotpoly
