#include "linksig/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace linksig {

namespace {

// Scale by a positive rational so coefficients are coprime integers.
// Unlike primitive(), the sign pattern is preserved (Sturm chains need it).
QPoly positive_primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const Rat& c : p.coeffs()) {
    num_gcd = gcd_int(num_gcd, c.get_num());
    den_lcm = lcm_int(den_lcm, c.get_den());
  }
  Rat scale = make_rat(den_lcm, num_gcd);
  return p * scale;
}

}  // namespace

QPoly::QPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rat& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

Rat QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
  if (s == 0) return QPoly();
  QPoly r = *this;
  for (Rat& c : r.c_) c *= s;
  return r;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly::DivMod QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  QPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {QPoly(), rem};
  std::vector<Rat> q(rem.degree() - divisor.degree() + 1, Rat(0));
  const Rat& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rat f = rem.leading() / lead;
    q[shift] = f;
    // rem -= f * x^shift * divisor
    for (size_t i = 0; i < divisor.c_.size(); ++i) rem.c_[i + shift] -= f * divisor.c_[i];
    rem.trim();
  }
  return {QPoly(std::move(q)), rem};
}

bool QPoly::divisible_by(const QPoly& divisor) const {
  return divmod(divisor).remainder.is_zero();
}

QPoly QPoly::div_exact(const QPoly& divisor) const {
  DivMod dm = divmod(divisor);
  if (!dm.remainder.is_zero()) throw std::logic_error("div_exact: inexact division");
  return dm.quotient;
}

QPoly QPoly::primitive() const {
  QPoly r = positive_primitive(*this);
  if (!r.is_zero() && sign_of(r.leading()) < 0) r = -r;
  return r;
}

int QPoly::low_zero_order() const {
  if (is_zero()) return 0;
  int k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat c = coeff(k);
    if (c == 0) continue;
    const bool first = out.empty();
    if (sign_of(c) < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    Rat a = abs(c);
    if (a != 1 || k == 0) out += to_string(a);
    if (k >= 1) {
      if (a != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = positive_primitive(a);
  QPoly y = positive_primitive(b);
  while (!y.is_zero()) {
    QPoly r = x.divmod(y).remainder;
    x = std::move(y);
    y = positive_primitive(r);
  }
  if (!x.is_zero() && sign_of(x.leading()) < 0) x = -x;
  return x;
}

std::vector<SquareFreePart> square_free_decompose(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_decompose: zero polynomial");
  std::vector<SquareFreePart> out;
  if (p.degree() < 1) return out;
  QPoly w = p.primitive();
  QPoly g = gcd(w, w.derivative());
  if (g.degree() == 0) {
    out.push_back({w, 1});
    return out;
  }
  QPoly wi = w.div_exact(g);
  QPoly z = w.derivative().div_exact(g) - wi.derivative();
  int i = 1;
  while (wi.degree() > 0) {
    QPoly f = gcd(wi, z);
    if (f.degree() > 0) out.push_back({f.primitive(), i});
    wi = wi.div_exact(f);
    z = z.div_exact(f) - wi.derivative();
    ++i;
  }
  return out;
}

void IsolatedRoot::refine() {
  Rat mid = (lo + hi) / 2;
  int sm = poly.sign_at(mid);
  if (sm == 0) throw std::logic_error("IsolatedRoot::refine hit an exact root");
  if (sm == poly.sign_at(lo))
    lo = mid;
  else
    hi = mid;
}

void IsolatedRoot::refine_below(const Rat& w) {
  while (hi - lo >= w) refine();
}

SturmChain::SturmChain(const QPoly& squarefree) {
  chain_.push_back(squarefree.primitive());
  QPoly d = squarefree.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  for (;;) {
    const QPoly& a = chain_[chain_.size() - 2];
    const QPoly& b = chain_.back();
    QPoly r = a.divmod(b).remainder;
    if (r.is_zero()) break;
    r = -r;
    // Positive rescaling keeps the sign sequence intact.
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& c : r.coeffs()) {
      num_gcd = gcd_int(num_gcd, c.get_num());
      den_lcm = lcm_int(den_lcm, c.get_den());
    }
    chain_.push_back(r * make_rat(den_lcm, num_gcd));
  }
}

int SturmChain::variations_at(const Rat& x) const {
  int vars = 0;
  int prev = 0;
  for (const QPoly& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

namespace {

// Decides whether the unique root of q in (lo, hi) is rational, and finds it
// if so. q has integer-primitive content; any rational root u/v in lowest
// terms has v dividing the leading coefficient, so in a closed interval
// narrower than 1/lead^2 the continued-fraction simplest rational is the
// only candidate.
std::optional<Rat> rational_root_in(const QPoly& q, Rat lo, Rat hi) {
  const QPoly qp = q.primitive();
  Int lead = qp.leading().get_num();
  // Any rational root u/v (lowest terms) has v | lead, so once the interval
  // is narrower than 1/lead^2 it holds at most one candidate, namely the
  // continued-fraction simplest rational. The denominator of the simplest
  // rational is also a lower bound for the denominator of every rational in
  // the interval, giving a cheap early exit.
  Rat width_limit = make_rat(1, lead * lead);
  int slo = qp.sign_at(lo);
  for (;;) {
    Rat candidate = simplest_rational_in(lo, hi);
    if (qp.eval(candidate) == 0) return candidate;
    if (candidate.get_den() > lead) return std::nullopt;
    if (hi - lo < width_limit) return std::nullopt;
    for (int k = 0; k < 8 && hi - lo >= width_limit; ++k) {
      Rat mid = (lo + hi) / 2;
      int sm = qp.sign_at(mid);
      if (sm == 0) return mid;
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
  }
}

}  // namespace

RootIsolation isolate_roots(const QPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
    throw std::invalid_argument("isolate_roots: root at window endpoint");
  if (p.degree() >= 1 && gcd(p, p.derivative()).degree() != 0)
    throw std::invalid_argument("isolate_roots: input must be square-free");

  RootIsolation out;
  QPoly q = p.primitive();

  // Bisect; a midpoint that lands exactly on a root is a rational root,
  // which is divided out before restarting.
  std::vector<std::pair<Rat, Rat>> intervals;
  for (bool restart = true; restart;) {
    restart = false;
    intervals.clear();
    if (q.degree() < 1) break;
    SturmChain chain(q);
    std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      int n = chain.count_roots(a, b);
      if (n == 0) continue;
      if (n == 1) {
        intervals.emplace_back(a, b);
        continue;
      }
      Rat mid = (a + b) / 2;
      if (q.sign_at(mid) == 0) {
        out.rational_roots.push_back(mid);
        q = q.div_exact(QPoly({-mid, Rat(1)}));
        restart = true;
        break;
      }
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
    }
  }

  // Classify survivors: extract any rational root, keep the rest isolated.
  std::vector<std::pair<Rat, Rat>> irrational;
  for (auto& [a, b] : intervals) {
    if (auto r = rational_root_in(q, a, b)) {
      out.rational_roots.push_back(*r);
      q = q.div_exact(QPoly({-*r, Rat(1)}));
    } else {
      irrational.emplace_back(a, b);
    }
  }
  out.deflated = q.primitive();
  for (auto& [a, b] : irrational) out.irrational_roots.push_back({out.deflated, a, b});

  std::sort(out.rational_roots.begin(), out.rational_roots.end());
  std::sort(out.irrational_roots.begin(), out.irrational_roots.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace linksig
