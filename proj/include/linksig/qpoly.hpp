// Dense univariate polynomials over the rationals: exact division, gcd,
// Yun square-free decomposition, Sturm chains and real root isolation.
// LaurentPoly is layered on top of this; the circle module uses the Sturm
// machinery on trace polynomials over the window (-2, 2).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linksig/rational.hpp"

namespace linksig {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> ascending);
  static QPoly constant(const Rat& c);
  static QPoly monomial(const Rat& c, int degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  const Rat& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  QPoly derivative() const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sign_of(eval(x)); }

  // Quotient and remainder over the field of rationals.
  struct DivMod;
  DivMod divmod(const QPoly& divisor) const;
  bool divisible_by(const QPoly& divisor) const;
  // Throws if the division is not exact.
  QPoly div_exact(const QPoly& divisor) const;

  // Integer-primitive associate with positive leading coefficient
  // (the scaling factor is a positive rational times +-1 on the sign).
  QPoly primitive() const;
  // Largest k with x^k dividing this (0 for the zero polynomial).
  int low_zero_order() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;  // ascending, trimmed: c_.back() != 0 unless empty
};

struct QPoly::DivMod {
  QPoly quotient;
  QPoly remainder;
};

QPoly gcd(const QPoly& a, const QPoly& b);

// Yun square-free decomposition: p ~ prod factors[i].part ^ factors[i].power
// with the parts pairwise coprime, square-free and primitive. Constant parts
// are dropped. p must be nonzero.
struct SquareFreePart {
  QPoly part;
  int power;
};
std::vector<SquareFreePart> square_free_decompose(const QPoly& p);

// A real root of `poly` isolated in the open interval (lo, hi);
// poly is square-free, poly(lo) and poly(hi) are nonzero and of opposite
// signs, and no other root of poly lies in [lo, hi].
struct IsolatedRoot {
  QPoly poly;
  Rat lo;
  Rat hi;

  void refine();                    // one bisection step
  void refine_below(const Rat& w);  // bisect until hi - lo < w
  bool contains(const Rat& x) const { return lo < x && x < hi; }
};

// Sturm chain of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& squarefree);
  // Number of roots in (a, b]; requires p(a) != 0 and p(b) != 0 so the
  // count is also that of the open interval.
  int count_roots(const Rat& a, const Rat& b) const;
  int variations_at(const Rat& x) const;

 private:
  std::vector<QPoly> chain_;
};

// All real roots of a square-free polynomial in the open interval (lo, hi),
// split into exact rational roots and isolated irrational ones.
// Requires p(lo) != 0 and p(hi) != 0.
struct RootIsolation {
  std::vector<Rat> rational_roots;
  std::vector<IsolatedRoot> irrational_roots;
  // `p` with all rational roots in the window divided out; the defining
  // polynomial of every IsolatedRoot. Square-free.
  QPoly deflated;
};
RootIsolation isolate_roots(const QPoly& p, const Rat& lo, const Rat& hi);

}  // namespace linksig
