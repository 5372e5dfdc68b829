#include "linksig/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace linksig {

namespace {

const LaurentPoly& t_minus_1() {
  static const LaurentPoly p({-1, 1}, 0);
  return p;
}
const LaurentPoly& t_plus_1() {
  static const LaurentPoly p({1, 1}, 0);
  return p;
}

}  // namespace

CirclePoint CirclePoint::one() {
  CirclePoint p;
  p.kind_ = CircleKind::One;
  p.cos_ = 1;
  return p;
}

CirclePoint CirclePoint::minus_one() {
  CirclePoint p;
  p.kind_ = CircleKind::MinusOne;
  p.cos_ = -1;
  return p;
}

CirclePoint CirclePoint::rational_cos(const Rat& c) {
  if (c <= -1 || c >= 1)
    throw std::invalid_argument("CirclePoint::rational_cos: cosine must lie in (-1, 1)");
  CirclePoint p;
  p.kind_ = CircleKind::RationalCos;
  p.cos_ = c;
  return p;
}

CirclePoint CirclePoint::algebraic_cos(IsolatedRoot trace) {
  if (trace.lo < -2 || trace.hi > 2)
    throw std::invalid_argument("CirclePoint::algebraic_cos: interval must lie in (-2, 2)");
  CirclePoint p;
  p.kind_ = CircleKind::AlgebraicCos;
  p.trace_ = std::move(trace);
  return p;
}

const Rat& CirclePoint::cos_value() const {
  if (kind_ == CircleKind::AlgebraicCos)
    throw std::logic_error("CirclePoint: algebraic point has no rational cosine");
  return cos_;
}

const IsolatedRoot& CirclePoint::trace_root() const {
  if (kind_ != CircleKind::AlgebraicCos)
    throw std::logic_error("CirclePoint: not an algebraic point");
  return *trace_;
}

Rat CirclePoint::cos_lower() const {
  return kind_ == CircleKind::AlgebraicCos ? trace_->lo / 2 : cos_;
}

Rat CirclePoint::cos_upper() const {
  return kind_ == CircleKind::AlgebraicCos ? trace_->hi / 2 : cos_;
}

QuadraticComplexPoint CirclePoint::exact_point() const {
  if (kind_ == CircleKind::AlgebraicCos)
    throw std::logic_error("CirclePoint: algebraic point has no exact rational coordinates");
  return QuadraticComplexPoint::from_cos(cos_);
}

std::string CirclePoint::report_form() const {
  switch (kind_) {
    case CircleKind::One:
      return "theta = 0";
    case CircleKind::MinusOne:
      return "theta = pi";
    case CircleKind::RationalCos:
      return "cos theta = " + to_string(cos_);
    case CircleKind::AlgebraicCos:
      return "cos theta root of " + trace_->poly.str("x") + " in (" + to_string(trace_->lo) +
             ", " + to_string(trace_->hi) + ") with x = 2cos theta";
  }
  return {};
}

namespace {

// Whether the unique root of r in (lo, hi) exists, by sign change; r must be
// square-free with at most one root there and r(lo), r(hi) != 0.
bool has_root_between(const QPoly& r, const Rat& lo, const Rat& hi) {
  return r.sign_at(lo) * r.sign_at(hi) < 0;
}

int compare_rational_vs_algebraic(const Rat& x, const IsolatedRoot& root) {
  IsolatedRoot r = root;
  if (r.contains(x) && r.poly.eval(x) == 0) return 0;
  while (r.contains(x)) r.refine();
  return x <= r.lo ? -1 : 1;  // root > x when the interval is right of x
}

}  // namespace

int compare_angular(const CirclePoint& a, const CirclePoint& b) {
  const bool aa = a.kind() == CircleKind::AlgebraicCos;
  const bool ba = b.kind() == CircleKind::AlgebraicCos;
  int cmp_cos;  // sign of cos(a) - cos(b)
  if (!aa && !ba) {
    cmp_cos = a.cos_value() > b.cos_value() ? 1 : (a.cos_value() < b.cos_value() ? -1 : 0);
  } else if (!aa) {
    cmp_cos = compare_rational_vs_algebraic(2 * a.cos_value(), b.trace_root());
  } else if (!ba) {
    cmp_cos = -compare_rational_vs_algebraic(2 * b.cos_value(), a.trace_root());
  } else {
    IsolatedRoot ra = a.trace_root();
    IsolatedRoot rb = b.trace_root();
    QPoly g = gcd(ra.poly, rb.poly);
    for (;;) {
      if (ra.hi <= rb.lo) {
        cmp_cos = -1;
        break;
      }
      if (rb.hi <= ra.lo) {
        cmp_cos = 1;
        break;
      }
      if (g.degree() >= 1) {
        Rat jlo = std::max(ra.lo, rb.lo);
        Rat jhi = std::min(ra.hi, rb.hi);
        if (jlo < jhi && has_root_between(g, jlo, jhi)) {
          cmp_cos = 0;
          break;
        }
      }
      ra.refine();
      rb.refine();
    }
  }
  // Ascending theta is descending cosine.
  return -cmp_cos;
}

bool same_point(const CirclePoint& a, const CirclePoint& b) {
  return compare_angular(a, b) == 0;
}

LaurentPoly trace_factor_of(const CirclePoint& p) {
  switch (p.kind()) {
    case CircleKind::One:
      return t_minus_1();
    case CircleKind::MinusOne:
      return t_plus_1();
    case CircleKind::RationalCos: {
      // t^2 - 2c t + 1, cleared to integer form.
      LaurentPoly f({Rat(1), -2 * p.cos_value(), Rat(1)}, 0);
      return f.canonicalized();
    }
    case CircleKind::AlgebraicCos:
      return trace_lift(p.trace_root().poly);
  }
  return {};
}

LaurentPoly trace_lift(const QPoly& q) {
  LaurentPoly x({1, 0, 1}, -1);  // t + 1/t
  LaurentPoly acc;
  for (int j = q.degree(); j >= 0; --j) acc = acc * x + LaurentPoly::constant(q.coeff(j));
  return acc.shifted(q.degree()).canonicalized();
}

QPoly trace_poly_of_palindromic(const LaurentPoly& s) {
  if (s.is_zero() || s.degree_span() % 2 != 0)
    throw std::invalid_argument("trace_poly_of_palindromic: need even degree span");
  const LaurentPoly c = s.canonicalized();
  const int d = c.degree_span() / 2;
  for (int j = 0; j <= 2 * d; ++j)
    if (c.coeff(j) != c.coeff(2 * d - j))
      throw std::invalid_argument("trace_poly_of_palindromic: not palindromic");
  // s = t^d * ( a_d + sum_j a_{d+j} (t^j + t^-j) ) and t^j + t^-j = C_j(x).
  QPoly q = QPoly::constant(c.coeff(d));
  QPoly c_prev = QPoly::constant(Rat(2));    // C_0
  QPoly c_cur({Rat(0), Rat(1)});             // C_1 = x
  const QPoly x_poly({Rat(0), Rat(1)});
  for (int j = 1; j <= d; ++j) {
    q = q + c_cur * c.coeff(d + j);
    QPoly c_next = x_poly * c_cur - c_prev;  // C_{j+1} = x C_j - C_{j-1}
    c_prev = std::move(c_cur);
    c_cur = std::move(c_next);
  }
  return q;
}

namespace {

// pt is an AlgebraicCos point; decides whether its conjugate root pair
// divides g (g relevant only through its bar-invariant part).
bool algebraic_point_divides(const LaurentPoly& g, const CirclePoint& pt) {
  LaurentPoly recip = gcd(g, g.bar());
  if (recip.degree_span() == 0) return false;
  // Roots at +-1 never match an interior point.
  while (recip.divisible_by(t_minus_1())) recip = recip.div_exact(t_minus_1());
  while (recip.divisible_by(t_plus_1())) recip = recip.div_exact(t_plus_1());
  recip = recip.canonicalized();
  if (recip.degree_span() == 0) return false;
  QPoly tau = trace_poly_of_palindromic(recip);
  QPoly r = gcd(tau, pt.trace_root().poly);
  if (r.degree() < 1) return false;
  return has_root_between(r, pt.trace_root().lo, pt.trace_root().hi);
}

}  // namespace

int multiplicity_at_point(const LaurentPoly& p, const CirclePoint& pt) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity_at_point: zero polynomial");
  switch (pt.kind()) {
    case CircleKind::One:
      return multiplicity(p, t_minus_1());
    case CircleKind::MinusOne:
      return multiplicity(p, t_plus_1());
    case CircleKind::RationalCos:
      return multiplicity(p, trace_factor_of(pt));
    case CircleKind::AlgebraicCos: {
      // The true irreducible factor of pt divides the square-free lift F, so
      // peeling gcd(h, F) once per round removes exactly one copy of it while
      // pt remains a root.
      const LaurentPoly f_lift = trace_lift(pt.trace_root().poly);
      LaurentPoly h = p.canonicalized();
      int m = 0;
      for (;;) {
        LaurentPoly g = gcd(h, f_lift);
        if (g.degree_span() == 0 || !algebraic_point_divides(g, pt)) return m;
        ++m;
        h = h.div_exact(g);
      }
    }
  }
  return 0;
}

std::vector<CircleRoot> circle_roots(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("circle_roots: zero polynomial");
  std::vector<CircleRoot> out;

  const int m_one = multiplicity(p, t_minus_1());
  const int m_minus_one = multiplicity(p, t_plus_1());
  if (m_one > 0) out.push_back({CirclePoint::one(), m_one});

  // Interior circle roots all lie in the self-reciprocal part.
  LaurentPoly recip = gcd(p, p.bar());
  for (int k = 0; k < m_one && recip.divisible_by(t_minus_1()); ++k)
    recip = recip.div_exact(t_minus_1());
  for (int k = 0; k < m_minus_one && recip.divisible_by(t_plus_1()); ++k)
    recip = recip.div_exact(t_plus_1());
  recip = recip.canonicalized();

  std::vector<CircleRoot> interior;
  if (recip.degree_span() > 0) {
    for (const SquareFreePart& part : square_free_decompose(recip.body())) {
      const LaurentPoly s = LaurentPoly::from_qpoly(part.part, 0).canonicalized();
      QPoly trace = trace_poly_of_palindromic(s);
      RootIsolation iso = isolate_roots(trace, Rat(-2), Rat(2));
      for (const Rat& x : iso.rational_roots)
        interior.push_back({CirclePoint::rational_cos(x / 2), part.power});
      for (const IsolatedRoot& r : iso.irrational_roots)
        interior.push_back({CirclePoint::algebraic_cos(r), part.power});
    }
  }
  std::sort(interior.begin(), interior.end(), [](const CircleRoot& a, const CircleRoot& b) {
    return compare_angular(a.point, b.point) < 0;
  });
  out.insert(out.end(), interior.begin(), interior.end());

  if (m_minus_one > 0) out.push_back({CirclePoint::minus_one(), m_minus_one});
  return out;
}

std::vector<QuadraticComplexPoint> rational_samples_between(const CirclePoint& a,
                                                            const CirclePoint& b, int n) {
  if (n < 1) throw std::invalid_argument("rational_samples_between: need n >= 1");
  const int order = compare_angular(a, b);
  if (order == 0) throw std::invalid_argument("rational_sample_between: points coincide");
  if (order > 0) throw std::invalid_argument("rational_sample_between: points out of order");

  // Shrink both cosine intervals until they are strictly separated:
  // cos(b) <= hi_b < lo_a <= cos(a), then sample inside (hi_b, lo_a).
  IsolatedRoot ra{{}, Rat(0), Rat(0)}, rb = ra;
  bool a_alg = a.kind() == CircleKind::AlgebraicCos;
  bool b_alg = b.kind() == CircleKind::AlgebraicCos;
  if (a_alg) ra = a.trace_root();
  if (b_alg) rb = b.trace_root();
  auto lo_a = [&] { return a_alg ? ra.lo / 2 : a.cos_value(); };
  auto hi_b = [&] { return b_alg ? rb.hi / 2 : b.cos_value(); };
  while (!(hi_b() < lo_a())) {
    if (a_alg) ra.refine();
    if (b_alg) rb.refine();
  }

  const Rat lo = hi_b(), hi = lo_a();
  const Rat step = (hi - lo) / (2 * n + 2);
  std::vector<QuadraticComplexPoint> samples;
  samples.reserve(n);
  for (int k = 0; k < n; ++k) {
    // Small-denominator cosines keep the exact Hermitian evaluations cheap.
    Rat c = simplest_rational_in(lo + Rat(2 * k + 1) * step, lo + Rat(2 * k + 2) * step);
    samples.push_back(QuadraticComplexPoint::from_cos(c));
  }
  return samples;
}

QuadraticComplexPoint rational_sample_between(const CirclePoint& a, const CirclePoint& b) {
  return rational_samples_between(a, b, 1).front();
}

}  // namespace linksig
