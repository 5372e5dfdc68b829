// Exact points on the unit circle (upper half) and extraction of the
// unit-circle roots of a Laurent polynomial with multiplicities, through the
// trace substitution x = t + 1/t and Sturm isolation on (-2, 2).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linksig/laurent.hpp"
#include "linksig/qpoly.hpp"
#include "linksig/quadratic.hpp"

namespace linksig {

enum class CircleKind { One, MinusOne, RationalCos, AlgebraicCos };

// A point e^{i theta}, theta in [0, pi] (the positive-imaginary
// representative of a conjugate pair). AlgebraicCos points carry the trace
// coordinate x = 2 cos(theta) as an isolated root of a square-free
// polynomial; rational x always becomes RationalCos, so AlgebraicCos values
// are genuinely irrational.
class CirclePoint {
 public:
  static CirclePoint one();
  static CirclePoint minus_one();
  static CirclePoint rational_cos(const Rat& c);         // c in (-1, 1)
  static CirclePoint algebraic_cos(IsolatedRoot trace);  // interval in (-2, 2)

  CircleKind kind() const { return kind_; }
  bool is_boundary() const { return kind_ == CircleKind::One || kind_ == CircleKind::MinusOne; }
  // RationalCos / One / MinusOne only.
  const Rat& cos_value() const;
  const IsolatedRoot& trace_root() const;

  // Exact bounds for cos(theta); degenerate unless AlgebraicCos.
  Rat cos_lower() const;
  Rat cos_upper() const;

  // Exact coordinates; RationalCos, One, MinusOne only.
  QuadraticComplexPoint exact_point() const;

  std::string report_form() const;

 private:
  CircleKind kind_ = CircleKind::One;
  Rat cos_;
  std::optional<IsolatedRoot> trace_;
};

// Angular order on [0, pi]: negative when a comes before b (cos a > cos b),
// 0 when they are the same point. Exact for all kinds.
int compare_angular(const CirclePoint& a, const CirclePoint& b);
bool same_point(const CirclePoint& a, const CirclePoint& b);

// f_rho: t -+ 1 at +-1, and the canonical integer form of
// t + 1/t - 2cos(theta) otherwise. For AlgebraicCos the lift of the stored
// defining polynomial is returned.
LaurentPoly trace_factor_of(const CirclePoint& p);

// t^deg(q) * q(t + 1/t), canonicalized.
LaurentPoly trace_lift(const QPoly& q);
// Inverse for canonical palindromic input of even degree span.
QPoly trace_poly_of_palindromic(const LaurentPoly& s);

// Multiplicity of the point (as a circle root) in p; exact for every kind,
// including AlgebraicCos points with reducible defining polynomials. p != 0.
int multiplicity_at_point(const LaurentPoly& p, const CirclePoint& pt);

// All roots of p on the closed upper half circle, with multiplicities,
// ordered by ascending theta. p != 0.
struct CircleRoot {
  CirclePoint point;
  int multiplicity;
};
std::vector<CircleRoot> circle_roots(const LaurentPoly& p);

// A point with rational cosine strictly between a and b in angular order
// (a strictly before b). Boundaries theta = 0 / pi are the points One /
// MinusOne. Throws when a and b coincide or are out of order.
QuadraticComplexPoint rational_sample_between(const CirclePoint& a, const CirclePoint& b);

// n distinct rational-cosine samples inside the arc (a, b).
std::vector<QuadraticComplexPoint> rational_samples_between(const CirclePoint& a,
                                                            const CirclePoint& b, int n);

}  // namespace linksig
