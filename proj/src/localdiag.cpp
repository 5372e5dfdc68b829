#include "linksig/localdiag.hpp"

#include <algorithm>
#include <stdexcept>

namespace linksig {

LocalRing::LocalRing(LaurentPoly f) : f_(f.canonicalized()) {
  if (f_.degree_span() < 1)
    throw std::invalid_argument("LocalRing: f must be a non-unit");
  LaurentPoly b = f_.bar();
  if (!b.divisible_by(f_))
    throw std::invalid_argument("LocalRing: f must be bar-invariant up to units");
  bar_unit_ = b.div_exact(f_);
}

LocalizedScalar LocalRing::reduced(LaurentPoly num, LaurentPoly den, int f_exp) const {
  if (num.is_zero()) return {};
  while (num.divisible_by(f_)) {
    num = num.div_exact(f_);
    ++f_exp;
  }
  LaurentPoly g = gcd(num, den);
  if (g.degree_span() > 0) {
    num = num.div_exact(g);
    den = den.div_exact(g);
  }
  // Normalize the denominator's unit part into the numerator.
  LaurentPoly dc = den.canonicalized();
  if (dc != den) {
    // den = u * dc with u a unit c t^k; fold 1/u into num.
    LaurentPoly u = den.div_exact(dc);
    num = num.div_exact(u);
    den = dc;
  }
  return {std::move(num), std::move(den), f_exp};
}

LocalizedScalar LocalRing::from_laurent(const LaurentPoly& p) const {
  return reduced(p, LaurentPoly::one(), 0);
}

LaurentPoly LocalRing::to_laurent(const LocalizedScalar& s) const {
  if (s.is_zero()) return LaurentPoly();
  if (s.den.degree_span() != 0)
    throw std::logic_error("LocalizedScalar: denominator is not a unit");
  return s.num.div_exact(s.den) * pow(f_, s.f_exp);
}

LocalizedScalar LocalRing::add(const LocalizedScalar& a, const LocalizedScalar& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int m = std::min(a.f_exp, b.f_exp);
  LaurentPoly num = a.num * b.den * pow(f_, a.f_exp - m) + b.num * a.den * pow(f_, b.f_exp - m);
  return reduced(std::move(num), a.den * b.den, m);
}

LocalizedScalar LocalRing::sub(const LocalizedScalar& a, const LocalizedScalar& b) const {
  return add(a, neg(b));
}

LocalizedScalar LocalRing::mul(const LocalizedScalar& a, const LocalizedScalar& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  return reduced(a.num * b.num, a.den * b.den, a.f_exp + b.f_exp);
}

LocalizedScalar LocalRing::div(const LocalizedScalar& a, const LocalizedScalar& b) const {
  if (b.is_zero()) throw std::invalid_argument("LocalizedScalar: division by zero");
  if (a.is_zero()) return {};
  if (a.f_exp < b.f_exp)
    throw std::logic_error("LocalizedScalar: quotient leaves the local ring");
  return reduced(a.num * b.den, a.den * b.num, a.f_exp - b.f_exp);
}

LocalizedScalar LocalRing::neg(const LocalizedScalar& a) const {
  if (a.is_zero()) return a;
  return {-a.num, a.den, a.f_exp};
}

LocalizedScalar LocalRing::bar(const LocalizedScalar& a) const {
  if (a.is_zero()) return a;
  // bar(num f^e / den) = bar(num) (bar(f)/f)^e f^e / bar(den).
  LaurentPoly num = a.num.bar() * pow(bar_unit_, a.f_exp);
  return reduced(std::move(num), a.den.bar(), a.f_exp);
}

QuadExt LocalRing::eval_unit(const LocalizedScalar& a, const QuadraticComplexPoint& z) const {
  if (a.is_zero()) return QuadExt(Rat(0));
  QuadExt d = a.den.evaluate(z);
  if (d.is_zero()) throw std::logic_error("LocalizedScalar: denominator vanishes at rho");
  QuadExt v = a.num.evaluate(z) / d;
  if (a.f_exp > 0) return QuadExt(Rat(0));
  return v;
}

namespace {

bool is_quadratic_trace_factor(const LaurentPoly& f) {
  const LaurentPoly c = f.canonicalized();
  if (c.degree_span() != 2) return false;
  if (c.coeff(0) != c.coeff(2)) return false;  // palindromic
  // Irreducible over Q with both roots on the circle: |2a| > |b|.
  const Rat a = c.coeff(2), b = c.coeff(1);
  return b * b - 4 * a * a < 0;
}

std::string fraction_str(const LocalizedScalar& s, const LaurentPoly& f) {
  if (s.is_zero()) return "0";
  std::string out = "(" + s.num.str() + ")";
  if (s.den != LaurentPoly::one()) out += "/(" + s.den.str() + ")";
  if (s.f_exp != 0) out += " * (" + f.str() + ")^" + std::to_string(s.f_exp);
  return out;
}

// Sign of the real function unit * t^eps at rho. The canonical quadratic
// factors as f = a t (t + 1/t - 2cos theta_rho) with a > 0, so the
// bar-invariant diagonal entry is (unit * a^eps * t^eps) times a power of
// the real trace form, and the bracket is the sign carrier.
int local_entry_sign(const LocalRing& ring, const DiagEntry& entry,
                     const QuadraticComplexPoint& z) {
  QuadExt value = ring.eval_unit(entry.unit, z);
  const QuadExt t = QuadExt::point_value(z);
  for (int k = 0; k < entry.epsilon; ++k) value = value * t;
  if (!value.is_real())
    throw std::logic_error("localdiag: diagonal sign carrier is not real at rho");
  const int sgn = value.sign_real();
  if (sgn == 0) throw std::logic_error("localdiag: diagonal unit vanishes at rho");
  return sgn;
}

}  // namespace

int DiagonalForm::total_exponent() const {
  int e = 0;
  for (const DiagEntry& d : entries) e += d.epsilon;
  return e;
}

DiagonalForm diagonalize_localized(const Matrix<LaurentPoly>& w, const LaurentPoly& f) {
  if (!w.is_square()) throw std::invalid_argument("diagonalize_localized: matrix not square");
  const LaurentPoly fc = f.canonicalized();
  if (fc.degree_span() == 1)
    throw std::invalid_argument(
        "diagonalize_localized: the lemma does not apply at rho = +-1 (f = t -+ 1)");
  if (!is_quadratic_trace_factor(fc))
    throw std::invalid_argument(
        "diagonalize_localized: f must be an irreducible bar-invariant quadratic");
  const int n = w.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w.at(j, i) != w.at(i, j).bar())
        throw std::invalid_argument("diagonalize_localized: matrix is not Hermitian");

  LocalRing ring(fc);
  Matrix<LocalizedScalar> h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = ring.from_laurent(w.at(i, j));

  DiagonalForm out;
  out.f_factor = fc;

  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;

  // row_r += m row_c and col_r += bar(m) col_c, restricted to active indices.
  auto simultaneous_add = [&](int r, int c, const LocalizedScalar& m) {
    for (int k : active) h.at(r, k) = ring.add(h.at(r, k), ring.mul(m, h.at(c, k)));
    LocalizedScalar mbar = ring.bar(m);
    for (int k : active) h.at(k, r) = ring.add(h.at(k, r), ring.mul(mbar, h.at(k, c)));
    out.operations.push_back({"add", r, c, fraction_str(m, fc)});
  };

  while (!active.empty()) {
    // Minimal f-valuation over the active block.
    int min_val = -1;
    for (int i : active)
      for (int j : active) {
        const LocalizedScalar& s = h.at(i, j);
        if (!s.is_zero() && (min_val < 0 || s.f_exp < min_val)) min_val = s.f_exp;
      }
    if (min_val < 0) {  // all remaining entries vanish
      out.zero_count += static_cast<int>(active.size());
      break;
    }

    // A diagonal entry of minimal valuation is a pivot; otherwise
    // manufacture one from the first minimal off-diagonal entry.
    int pivot = -1;
    for (int i : active)
      if (!h.at(i, i).is_zero() && h.at(i, i).f_exp == min_val) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      int oi = -1, oj = -1;
      for (int i : active) {
        for (int j : active)
          if (i != j && !h.at(i, j).is_zero() && h.at(i, j).f_exp == min_val) {
            oi = i;
            oj = j;
            break;
          }
        if (oi >= 0) break;
      }
      // alpha trick: after row_i += alpha row_j (and the conjugate column
      // operation), the (i,i) entry gains alpha b + bar(alpha b) with
      // b = h(j,i); alpha = 1 works unless b + bar(b) gains valuation, in
      // which case alpha = t does.
      const LocalizedScalar& b = h.at(oj, oi);
      LocalizedScalar test = ring.add(b, ring.bar(b));
      LocalizedScalar alpha = ring.from_laurent(LaurentPoly::one());
      if (test.is_zero() || test.f_exp > min_val) {
        alpha = ring.from_laurent(LaurentPoly::t_power(1));
        LocalizedScalar tb = ring.mul(alpha, b);
        LocalizedScalar test2 = ring.add(tb, ring.bar(tb));
        if (test2.is_zero() || test2.f_exp > min_val)
          throw std::logic_error("diagonalize_localized: alpha trick failed");
      }
      simultaneous_add(oi, oj, alpha);
      pivot = oi;
      if (h.at(pivot, pivot).is_zero() || h.at(pivot, pivot).f_exp != min_val)
        throw std::logic_error("diagonalize_localized: pivot manufacturing failed");
    }

    for (int k : active) {
      if (k == pivot || h.at(k, pivot).is_zero()) continue;
      LocalizedScalar m = ring.neg(ring.div(h.at(k, pivot), h.at(pivot, pivot)));
      simultaneous_add(k, pivot, m);
      if (!h.at(k, pivot).is_zero() || !h.at(pivot, k).is_zero())
        throw std::logic_error("diagonalize_localized: clearing failed");
    }

    const LocalizedScalar& d = h.at(pivot, pivot);
    out.entries.push_back({LocalizedScalar{d.num, d.den, 0}, d.f_exp});
    active.erase(std::find(active.begin(), active.end(), pivot));
  }
  return out;
}

PredictedJump jump_from_diagonal(const DiagonalForm& d, const CirclePoint& p) {
  if (p.kind() != CircleKind::RationalCos)
    throw std::invalid_argument("jump_from_diagonal: need a rational-cosine point");
  if (!associates(trace_factor_of(p), d.f_factor))
    throw std::invalid_argument("jump_from_diagonal: point does not match the diagonal form");
  LocalRing ring(d.f_factor);
  const QuadraticComplexPoint z = p.exact_point();

  PredictedJump out;
  int odd_entries = 0;
  for (const DiagEntry& entry : d.entries) {
    const int sgn = local_entry_sign(ring, entry, z);
    // f_rho = t + 1/t - 2cos(theta_rho) is positive before rho (theta
    // below theta_rho) and negative after.
    const int s_minus = sgn;
    const int s_plus = entry.epsilon % 2 == 0 ? sgn : -sgn;
    const int s_at = entry.epsilon > 0 ? 0 : sgn;
    out.ju.first += s_at - s_minus;
    out.ju.second += s_plus - s_at;
    if (entry.epsilon % 2 == 1) ++odd_entries;
  }
  out.congruence_class = (2 * odd_entries) % 4;
  return out;
}

MinusOneJumpBound jump_at_minus_one(const SeifertMatrix& s) {
  return jump_at_minus_one(s, link_invariants(s));
}

MinusOneJumpBound jump_at_minus_one(const SeifertMatrix& s, const LinkInvariants& inv) {
  const LaurentPoly f({1, 0, 1}, 0);  // t + 1/t up to the unit t
  DiagonalForm form = diagonalize_localized(w_star_matrix(s), f);
  LocalRing ring(f);
  const QuadraticComplexPoint at_i = QuadraticComplexPoint::from_cos(Rat(0));

  MinusOneJumpBound out;
  for (const DiagEntry& entry : form.entries) {
    if (entry.epsilon == 0) continue;
    const int sgn = local_entry_sign(ring, entry, at_i);
    if (entry.epsilon % 2 == 1)
      (sgn > 0 ? out.b : out.c) += 1;
    else
      (sgn > 0 ? out.d : out.e) += 1;
  }
  if (out.b != out.c)
    throw std::logic_error("jump_at_minus_one: B != C contradicts conjugation symmetry");
  out.bound = out.d > out.e ? out.d - out.e : out.e - out.d;
  out.exact_ju_minus = out.e - out.d;

  // W* differs from t^2 V - V^T by the unit factor (1/t^2)(1-t^2), which is
  // coprime to t^2+1, so the total exponent is exactly mult_{-1}(A_L).
  const int mult_minus_one =
      inv.a_poly.is_zero() ? 0 : multiplicity(inv.a_poly, LaurentPoly({1, 1}, 0));
  if (form.total_exponent() != mult_minus_one)
    throw std::logic_error("jump_at_minus_one: total exponent differs from mult_{-1}(A_L)");
  return out;
}

EvennessReport evenness_witness(const SeifertMatrix& s) {
  return evenness_witness(s, link_invariants(s));
}

EvennessReport evenness_witness(const SeifertMatrix& s, const LinkInvariants& inv) {
  const LaurentPoly f({1, 0, 1}, 0);
  DiagonalForm form = diagonalize_localized(w_star_star_matrix(s), f);
  EvennessReport out;
  out.e_total = form.total_exponent();
  const int mult_one = multiplicity(inv.a_poly, LaurentPoly({-1, 1}, 0));
  out.expected = mult_one + 2 * s.genus() + s.components() - inv.h_index;
  out.is_even = out.e_total % 2 == 0;
  out.matches_formula = out.e_total == out.expected;
  return out;
}

}  // namespace linksig
