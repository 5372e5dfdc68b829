// Laurent polynomials over the rationals with the bar involution t -> 1/t.
// Canonical representatives are fixed modulo the unit group {+-t^k, rational
// scalars}: integer-primitive, constant term nonzero, positive leading
// coefficient. All invariants computed downstream (Alexander polynomials,
// invariant factors, trace factors) live in this ring.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "linksig/qpoly.hpp"
#include "linksig/quadratic.hpp"

namespace linksig {

class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  // sum of ascending[k] * t^(low + k)
  LaurentPoly(std::vector<Rat> ascending, int low);
  LaurentPoly(std::initializer_list<long> ascending, int low = 0);
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(Rat(1)); }
  static LaurentPoly constant(const Rat& c);
  static LaurentPoly t_power(int k);
  static LaurentPoly from_qpoly(const QPoly& p, int low = 0);

  bool is_zero() const { return body_.is_zero(); }
  bool is_unit() const { return !is_zero() && body_.degree() == 0; }
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + body_.degree(); }
  // Number of nonzero-degree steps spanned; 0 for monomials and zero.
  int degree_span() const { return is_zero() ? 0 : body_.degree(); }
  Rat coeff(int exponent) const { return body_.coeff(exponent - low_); }
  // The coefficient vector starting at low_exponent().
  const QPoly& body() const { return body_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& s) const;
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && body_ == o.body_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(int k) const;  // * t^k

  // Canonical associate: integer-primitive, low exponent 0 (nonzero constant
  // term), positive leading coefficient. Zero maps to zero.
  LaurentPoly canonicalized() const;
  bool is_canonical() const;

  // Exact p(1/t) (coefficients reversed, exponents negated); not canonicalized.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return *this == bar(); }

  bool divisible_by(const LaurentPoly& d) const;
  LaurentPoly div_exact(const LaurentPoly& d) const;

  // Exact value at a unit-circle point of rational cosine (t^-1 evaluates as
  // the conjugate). Throws on the zero point, which cannot arise on the
  // circle.
  QuadExt evaluate(const QuadraticComplexPoint& z) const;
  Rat evaluate_at_one() const;
  Rat evaluate_at_minus_one() const;

  // Ascending-exponent text, canonical forms print without negative powers.
  std::string str() const;

 private:
  void normalize();
  QPoly body_;   // body_.coeff(0) != 0 for nonzero values
  int low_ = 0;  // 0 for zero
};

// p ~ q up to a unit +-c t^k (c rational).
bool associates(const LaurentPoly& p, const LaurentPoly& q);

// Canonical greatest common divisor; gcd(p, 0) = canonical(p).
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

// Largest e with f^e | p. p must be nonzero, f must not be a unit;
// irreducibility of f is the caller's responsibility.
int multiplicity(const LaurentPoly& p, const LaurentPoly& f);

LaurentPoly pow(const LaurentPoly& p, int k);

}  // namespace linksig
