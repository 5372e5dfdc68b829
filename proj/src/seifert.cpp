#include "linksig/seifert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace linksig {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> integer_smith_divisors(Matrix<Int> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<Int> divisors;
  int pos = 0;
  while (pos < rows && pos < cols) {
    // Smallest nonzero entry in the remaining block.
    int pr = -1, pc = -1;
    for (int i = pos; i < rows; ++i)
      for (int j = pos; j < cols; ++j)
        if (m.at(i, j) != 0 &&
            (pr < 0 || abs_int(m.at(i, j)) < abs_int(m.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    m.swap_rows(pos, pr);
    m.swap_cols(pos, pc);

    for (bool settled = false; !settled;) {
      settled = true;
      for (int i = pos + 1; i < rows; ++i) {
        if (m.at(i, pos) == 0) continue;
        Int q = floor_div(m.at(i, pos), m.at(pos, pos));
        for (int j = pos; j < cols; ++j) m.at(i, j) -= q * m.at(pos, j);
        if (m.at(i, pos) != 0) {  // remainder smaller than the pivot
          m.swap_rows(pos, i);
          settled = false;
        }
      }
      for (int j = pos + 1; j < cols; ++j) {
        if (m.at(pos, j) == 0) continue;
        Int q = floor_div(m.at(pos, j), m.at(pos, pos));
        for (int i = pos; i < rows; ++i) m.at(i, j) -= q * m.at(i, pos);
        if (m.at(pos, j) != 0) {
          m.swap_cols(pos, j);
          settled = false;
        }
      }
      if (!settled) continue;
      // Divisibility chain: fold any non-multiple into the pivot row.
      for (int i = pos + 1; i < rows && settled; ++i)
        for (int j = pos + 1; j < cols && settled; ++j)
          if (m.at(i, j) % m.at(pos, pos) != 0) {
            for (int c = pos; c < cols; ++c) m.at(pos, c) += m.at(i, c);
            settled = false;
          }
    }
    divisors.push_back(abs_int(m.at(pos, pos)));
    ++pos;
  }
  while (static_cast<int>(divisors.size()) < std::min(rows, cols)) divisors.emplace_back(0);
  return divisors;
}

SeifertMatrix validate_seifert(Matrix<Int> v) {
  if (!v.is_square()) throw std::invalid_argument("validate_seifert: matrix must be square");
  const int n = v.rows();
  Matrix<Int> skew(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) skew.at(i, j) = v.at(i, j) - v.at(j, i);
  std::vector<Int> div = integer_smith_divisors(skew);
  int rank = 0;
  for (const Int& d : div) {
    if (d == 0) continue;
    ++rank;
    if (d != 1)
      throw std::invalid_argument(
          "validate_seifert: skew part V - V^T has elementary divisor " + to_string(d) +
          " != 1; not the Seifert matrix of a connected surface");
  }
  if (rank % 2 != 0)
    throw std::invalid_argument("validate_seifert: skew part has odd rank");
  SeifertMatrix s;
  s.v_ = std::move(v);
  s.genus_ = rank / 2;
  s.mu_ = n - rank + 1;
  return s;
}

Matrix<LaurentPoly> presentation_matrix(const SeifertMatrix& s) {
  const int n = s.n();
  Matrix<LaurentPoly> m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      m.at(j, k) = LaurentPoly({Rat(-s.v().at(k, j)), Rat(s.v().at(j, k))}, 0);
  return m;
}

namespace {

Matrix<LaurentPoly> substituted_w(const SeifertMatrix& s, int power) {
  // (1 - t^p) V + (1 - t^-p) V^T
  const int n = s.n();
  const LaurentPoly u = LaurentPoly::one() - LaurentPoly::t_power(power);
  const LaurentPoly ubar = u.bar();
  Matrix<LaurentPoly> m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      m.at(j, k) = u * Rat(s.v().at(j, k)) + ubar * Rat(s.v().at(k, j));
  return m;
}

}  // namespace

Matrix<LaurentPoly> w_matrix(const SeifertMatrix& s) { return substituted_w(s, 1); }
Matrix<LaurentPoly> w_star_matrix(const SeifertMatrix& s) { return substituted_w(s, 2); }
Matrix<LaurentPoly> w_star_star_matrix(const SeifertMatrix& s) { return substituted_w(s, 4); }

LaurentPoly laurent_determinant(Matrix<LaurentPoly> m) {
  if (!m.is_square()) throw std::invalid_argument("laurent_determinant: not square");
  const int n = m.rows();
  if (n == 0) return LaurentPoly::one();
  LaurentPoly prev = LaurentPoly::one();
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          r = i;
          break;
        }
      if (r < 0) return LaurentPoly();
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) =
            (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)).div_exact(prev);
    prev = m.at(k, k);
  }
  LaurentPoly d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LaurentPoly higher_alexander_by_minors(const SeifertMatrix& s, int i) {
  const int n = s.n();
  if (i < 1 || i > n + 1)
    throw std::invalid_argument("higher_alexander_by_minors: index out of range 1.." +
                                std::to_string(n + 1));
  const int size = n + 1 - i;
  if (size == 0) return LaurentPoly::one();
  const Matrix<LaurentPoly> m = presentation_matrix(s);
  LaurentPoly acc;  // zero
  bool done = false;
  combinations(n, size, [&](const std::vector<int>& rows) {
    if (done) return;
    combinations(n, size, [&](const std::vector<int>& cols) {
      if (done) return;
      Matrix<LaurentPoly> sub(size, size);
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) sub.at(a, b) = m.at(rows[a], cols[b]);
      acc = gcd(acc, laurent_determinant(std::move(sub)));
      if (acc == LaurentPoly::one()) done = true;
    });
  });
  return acc.canonicalized();
}

namespace {

// Quotient of a by b with remainder of smaller degree span (the t-power
// units make division well defined on the polynomial bodies).
struct LaurentDivMod {
  LaurentPoly q, r;
};
LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  QPoly::DivMod dm = a.body().divmod(b.body());
  return {LaurentPoly::from_qpoly(dm.quotient, a.low_exponent() - b.low_exponent()),
          LaurentPoly::from_qpoly(dm.remainder, a.low_exponent())};
}

void scale_row_primitive(Matrix<LaurentPoly>& m, int row) {
  // Multiplying a row by a nonzero rational is an invertible operation.
  Int num_gcd = 0, den_lcm = 1;
  for (int j = 0; j < m.cols(); ++j) {
    for (const Rat& c : m.at(row, j).body().coeffs()) {
      num_gcd = gcd_int(num_gcd, c.get_num());
      den_lcm = lcm_int(den_lcm, c.get_den());
    }
  }
  if (num_gcd == 0) return;
  Rat f = make_rat(den_lcm, num_gcd);
  if (f == 1) return;
  for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * f;
}

}  // namespace

InvariantFactors invariant_factors(Matrix<LaurentPoly> m) {
  if (!m.is_square()) throw std::invalid_argument("invariant_factors: not square");
  const int n = m.rows();
  InvariantFactors out;
  int pos = 0;
  while (pos < n) {
    // Pivot: lowest degree span, ties by row then column (determinism).
    int pr = -1, pc = -1;
    for (int i = pos; i < n; ++i)
      for (int j = pos; j < n; ++j)
        if (!m.at(i, j).is_zero() &&
            (pr < 0 || m.at(i, j).degree_span() < m.at(pr, pc).degree_span())) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    m.swap_rows(pos, pr);
    m.swap_cols(pos, pc);

    for (bool settled = false; !settled;) {
      settled = true;
      scale_row_primitive(m, pos);
      for (int i = pos + 1; i < n; ++i) {
        if (m.at(i, pos).is_zero()) continue;
        LaurentDivMod dm = laurent_divmod(m.at(i, pos), m.at(pos, pos));
        for (int j = pos; j < n; ++j) m.at(i, j) = m.at(i, j) - dm.q * m.at(pos, j);
        if (!m.at(i, pos).is_zero()) {
          m.swap_rows(pos, i);
          settled = false;
        }
        scale_row_primitive(m, i);
      }
      if (!settled) continue;
      for (int j = pos + 1; j < n; ++j) {
        if (m.at(pos, j).is_zero()) continue;
        LaurentDivMod dm = laurent_divmod(m.at(pos, j), m.at(pos, pos));
        for (int i = pos; i < n; ++i) m.at(i, j) = m.at(i, j) - dm.q * m.at(i, pos);
        if (!m.at(pos, j).is_zero()) {
          m.swap_cols(pos, j);
          settled = false;
        }
      }
      if (!settled) continue;
      // Enforce d_pos | everything that remains.
      for (int i = pos + 1; i < n && settled; ++i)
        for (int j = pos + 1; j < n && settled; ++j)
          if (!m.at(i, j).divisible_by(m.at(pos, pos))) {
            for (int c = pos; c < n; ++c) m.at(pos, c) = m.at(pos, c) + m.at(i, c);
            settled = false;
          }
    }
    out.factors.push_back(m.at(pos, pos).canonicalized());
    ++pos;
  }
  out.free_rank = n - pos;
  return out;
}

const LaurentPoly& LinkInvariants::delta(int i) const {
  static const LaurentPoly zero;
  static const LaurentPoly unit = LaurentPoly::one();
  if (i < 1) throw std::invalid_argument("LinkInvariants::delta: 1-based index");
  if (i <= static_cast<int>(deltas.size())) return deltas[i - 1];
  return deltas.empty() || deltas.back() == unit ? unit : zero;
}

LinkInvariants link_invariants(const SeifertMatrix& s) {
  const int n = s.n();
  InvariantFactors inv = invariant_factors(presentation_matrix(s));
  LinkInvariants out;
  out.factors = inv.factors;
  out.free_rank = inv.free_rank;
  out.h_index = inv.free_rank + 1;

  const int k = static_cast<int>(inv.factors.size());
  // Delta_i = gcd of (n+1-i)-minors = product of the first n+1-i invariant
  // factors, zero once the free part is hit.
  std::vector<LaurentPoly> partial(k + 1, LaurentPoly::one());
  for (int m = 1; m <= k; ++m)
    partial[m] = (partial[m - 1] * inv.factors[m - 1]).canonicalized();
  out.a_poly = partial[k];
  for (int i = 1; i <= n + 1; ++i) {
    const int size = n + 1 - i;
    LaurentPoly d = size > k ? LaurentPoly() : partial[size];
    out.deltas.push_back(d);
    if (d == LaurentPoly::one()) break;
  }
  return out;
}

std::pair<int, int> phi_counts(const LinkInvariants& inv, const LaurentPoly& f) {
  int odd = 0, even = 0;
  for (const LaurentPoly& d : inv.factors) {
    const int m = multiplicity(d, f);
    if (m > 0) (m % 2 == 1 ? odd : even) += 1;
  }
  return {odd, even};
}

std::pair<int, int> phi_counts_at(const LinkInvariants& inv, const CirclePoint& p) {
  int odd = 0, even = 0;
  for (const LaurentPoly& d : inv.factors) {
    const int m = multiplicity_at_point(d, p);
    if (m > 0) (m % 2 == 1 ? odd : even) += 1;
  }
  return {odd, even};
}

SeifertMatrix random_seifert(int g, int mu, long bound, std::uint64_t seed) {
  if (g < 0 || mu < 1 || bound < 1)
    throw std::invalid_argument("random_seifert: need g >= 0, mu >= 1, bound >= 1");
  const int n = 2 * g + mu - 1;
  SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(g) << 32) ^
                 (static_cast<std::uint64_t>(mu) << 16) ^ static_cast<std::uint64_t>(bound));
  Matrix<Int> v(n, n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Int a(rng.next_in(-bound, bound));
      v.at(i, j) = a;
      v.at(j, i) = a;
    }
  for (int b = 0; b < g; ++b) v.at(2 * b, 2 * b + 1) += 1;
  return validate_seifert(std::move(v));
}

SeifertMatrix random_congruence(const SeifertMatrix& s, int steps, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = s.n();
  Matrix<Int> v = s.v();
  if (n < 2) return s;
  for (int k = 0; k < steps; ++k) {
    int i = static_cast<int>(rng.next_in(0, n - 1));
    int j = static_cast<int>(rng.next_in(0, n - 1));
    if (i == j) {
      for (int c = 0; c < n; ++c) v.at(i, c) = -v.at(i, c);
      for (int r = 0; r < n; ++r) v.at(r, i) = -v.at(r, i);
      continue;
    }
    Int f(rng.next_in(-2, 2));
    // row_i += f row_j and col_i += f col_j (congruence by a transvection)
    for (int c = 0; c < n; ++c) v.at(i, c) += f * v.at(j, c);
    for (int r = 0; r < n; ++r) v.at(r, i) += f * v.at(r, j);
  }
  return validate_seifert(std::move(v));
}

}  // namespace linksig
