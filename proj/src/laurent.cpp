#include "linksig/laurent.hpp"

#include <stdexcept>

namespace linksig {

LaurentPoly::LaurentPoly(std::vector<Rat> ascending, int low)
    : body_(std::move(ascending)), low_(low) {
  normalize();
}

LaurentPoly::LaurentPoly(std::initializer_list<long> ascending, int low) : low_(low) {
  std::vector<Rat> v;
  v.reserve(ascending.size());
  for (long c : ascending) v.emplace_back(c);
  body_ = QPoly(std::move(v));
  normalize();
}

LaurentPoly LaurentPoly::constant(const Rat& c) { return LaurentPoly({c}, 0); }

LaurentPoly LaurentPoly::t_power(int k) { return LaurentPoly({Rat(1)}, k); }

LaurentPoly LaurentPoly::from_qpoly(const QPoly& p, int low) {
  LaurentPoly r;
  r.body_ = p;
  r.low_ = low;
  r.normalize();
  return r;
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    low_ = 0;
    return;
  }
  int k = body_.low_zero_order();
  if (k > 0) {
    std::vector<Rat> v(body_.coeffs().begin() + k, body_.coeffs().end());
    body_ = QPoly(std::move(v));
    low_ += k;
  }
}

LaurentPoly LaurentPoly::operator-() const { return from_qpoly(-body_, low_); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int low = std::min(low_, o.low_);
  int high = std::max(high_exponent(), o.high_exponent());
  std::vector<Rat> v(high - low + 1, Rat(0));
  for (int e = low_; e <= high_exponent(); ++e) v[e - low] += coeff(e);
  for (int e = o.low_; e <= o.high_exponent(); ++e) v[e - low] += o.coeff(e);
  return LaurentPoly(std::move(v), low);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  return from_qpoly(body_ * o.body_, low_ + o.low_);
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
  return from_qpoly(body_ * s, low_);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return *this;
  return from_qpoly(body_, low_ + k);
}

LaurentPoly LaurentPoly::canonicalized() const {
  if (is_zero()) return LaurentPoly();
  return from_qpoly(body_.primitive(), 0);
}

bool LaurentPoly::is_canonical() const {
  if (is_zero()) return true;
  return low_ == 0 && body_ == body_.primitive();
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return *this;
  std::vector<Rat> rev(body_.coeffs().rbegin(), body_.coeffs().rend());
  return LaurentPoly(std::move(rev), -high_exponent());
}

bool LaurentPoly::divisible_by(const LaurentPoly& d) const {
  if (d.is_zero()) return is_zero();
  return body_.divisible_by(d.body_);
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
  return from_qpoly(body_.div_exact(d.body_), low_ - d.low_);
}

QuadExt LaurentPoly::evaluate(const QuadraticComplexPoint& z) const {
  if (z.c == 0 && z.d_squared == 0)
    throw std::invalid_argument("LaurentPoly::evaluate: zero point");
  QuadExt t = QuadExt::point_value(z);
  QuadExt acc(Rat(0));
  for (auto it = body_.coeffs().rbegin(); it != body_.coeffs().rend(); ++it)
    acc = acc * t + QuadExt(*it);
  // Multiply by t^low; on the unit circle t^-1 is the conjugate.
  if (low_ > 0) {
    for (int k = 0; k < low_; ++k) acc = acc * t;
  } else if (low_ < 0) {
    QuadExt tc = t.conj();
    for (int k = 0; k < -low_; ++k) acc = acc * tc;
  }
  return acc;
}

Rat LaurentPoly::evaluate_at_one() const {
  Rat s(0);
  for (const Rat& c : body_.coeffs()) s += c;
  return s;
}

Rat LaurentPoly::evaluate_at_minus_one() const {
  Rat s(0);
  for (int e = low_; e <= high_exponent(); ++e) {
    Rat c = coeff(e);
    s += (e % 2 == 0) ? c : -c;
  }
  return s;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = low_; e <= high_exponent(); ++e) {
    Rat c = coeff(e);
    if (c == 0) continue;
    const bool first = out.empty();
    if (sign_of(c) < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    Rat a = abs(c);
    if (a != 1 || e == 0) out += to_string(a);
    if (e != 0) {
      if (a != 1) out += "*";
      out += (e == 1) ? "t" : "t^" + std::to_string(e);
    }
  }
  return out;
}

bool associates(const LaurentPoly& p, const LaurentPoly& q) {
  return p.canonicalized() == q.canonicalized();
}

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  QPoly g = gcd(p.body(), q.body());
  return LaurentPoly::from_qpoly(g, 0).canonicalized();
}

int multiplicity(const LaurentPoly& p, const LaurentPoly& f) {
  if (p.is_zero())
    throw std::invalid_argument("multiplicity: undefined for the zero polynomial");
  if (f.is_zero() || f.degree_span() == 0)
    throw std::invalid_argument("multiplicity: factor must be a non-unit");
  int e = 0;
  LaurentPoly rest = p;
  while (rest.divisible_by(f)) {
    rest = rest.div_exact(f);
    ++e;
  }
  return e;
}

LaurentPoly pow(const LaurentPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly acc = LaurentPoly::one();
  for (int i = 0; i < k; ++i) acc = acc * p;
  return acc;
}

}  // namespace linksig
