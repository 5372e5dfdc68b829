#include "linksig/signature.hpp"

#include <cmath>
#include <stdexcept>

namespace linksig {

namespace {

void check_parity(const SignatureValue& sv, int n) {
  const int abs_sig = sv.signature < 0 ? -sv.signature : sv.signature;
  if (abs_sig + sv.nullity > n || ((sv.signature - (n - sv.nullity)) % 2) != 0)
    throw std::logic_error("signature/nullity parity invariant violated");
}

// Sign variations of the coefficient sequence, zeros skipped; exact count of
// positive roots for real-rooted input.
int descartes_positive(const std::vector<Rat>& coeffs) {
  int vars = 0, prev = 0;
  for (const Rat& c : coeffs) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

}  // namespace

Matrix<QuadExt> hermitian_at(const SeifertMatrix& s, const QuadraticComplexPoint& z) {
  const int n = s.n();
  const Rat one_minus_c = 1 - z.c;
  Matrix<QuadExt> w(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rat sym = one_minus_c * Rat(s.v().at(j, k) + s.v().at(k, j));
      Rat skew = Rat(s.v().at(k, j) - s.v().at(j, k));
      w.at(j, k) = QuadExt(sym, skew, z.d_squared);
    }
  return w;
}

SignatureValue signature_at(const SeifertMatrix& s, const QuadraticComplexPoint& z) {
  const int n = s.n();
  if (z.c == 1) return {0, n};  // W(1) = 0
  Matrix<QuadExt> w = hermitian_at(s, z);

  // Faddeev-LeVerrier: char(lambda) = lambda^n + c[n-1] lambda^{n-1} + ...
  std::vector<Rat> coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  Matrix<QuadExt> m = w;
  for (int k = 1; k <= n; ++k) {
    QuadExt tr(Rat(0));
    for (int i = 0; i < n; ++i) tr = tr + m.at(i, i);
    if (!tr.is_real()) throw std::logic_error("characteristic polynomial is not real");
    Rat ck = -tr.re() / k;
    coeffs[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + QuadExt(ck);
    // m <- w * m
    Matrix<QuadExt> next(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QuadExt acc(Rat(0));
        for (int l = 0; l < n; ++l) acc = acc + w.at(i, l) * m.at(l, j);
        next.at(i, j) = acc;
      }
    m = std::move(next);
  }

  int nullity = 0;
  while (nullity < n && coeffs[nullity] == 0) ++nullity;
  std::vector<Rat> reduced(coeffs.begin() + nullity, coeffs.end());
  int pos = descartes_positive(reduced);
  for (size_t i = 1; i < reduced.size(); i += 2) reduced[i] = -reduced[i];
  int neg = descartes_positive(reduced);

  SignatureValue sv{pos - neg, nullity};
  check_parity(sv, n);
  return sv;
}

namespace {

int exact_nullity_at(const LinkInvariants& inv, const CirclePoint& p) {
  // rank W(omega) (omega != 1) equals the number of invariant factors that
  // do not vanish at omega.
  int vanishing = 0;
  for (const LaurentPoly& d : inv.factors)
    if (multiplicity_at_point(d, p) > 0) ++vanishing;
  return inv.free_rank + vanishing;
}

}  // namespace

PointValue signature_at(const SeifertMatrix& s, const CirclePoint& p) {
  if (p.kind() == CircleKind::AlgebraicCos)
    return UnresolvedPoint{exact_nullity_at(link_invariants(s), p)};
  return signature_at(s, p.exact_point());
}

StepFunction signature_function(const SeifertMatrix& s, int samples_per_arc) {
  return signature_function(s, link_invariants(s), samples_per_arc);
}

StepFunction signature_function(const SeifertMatrix& s, const LinkInvariants& inv,
                                int samples_per_arc) {
  if (samples_per_arc < 1)
    throw std::invalid_argument("signature_function: samples_per_arc >= 1");
  const LaurentPoly t_minus_1({-1, 1}, 0);
  const LaurentPoly candidates = (t_minus_1 * inv.a_poly).canonicalized();

  StepFunction sf;
  std::vector<CircleRoot> roots = circle_roots(candidates);
  sf.ends_at_pi = roots.back().point.kind() == CircleKind::MinusOne;

  const int arcs = static_cast<int>(roots.size()) - (sf.ends_at_pi ? 1 : 0);
  for (int a = 0; a < arcs; ++a) {
    const CirclePoint& from = roots[a].point;
    const CirclePoint to =
        (a + 1 < static_cast<int>(roots.size())) ? roots[a + 1].point : CirclePoint::minus_one();
    std::vector<QuadraticComplexPoint> samples =
        rational_samples_between(from, to, samples_per_arc);
    std::optional<int> value;
    for (const QuadraticComplexPoint& z : samples) {
      SignatureValue sv = signature_at(s, z);
      if (value && *value != sv.signature)
        throw std::logic_error(
            "signature_function: samples disagree inside one arc; "
            "jump candidate set must be incomplete");
      value = sv.signature;
    }
    sf.arc_values.push_back(*value);
    sf.arc_samples.push_back(samples.front());
  }

  for (size_t i = 0; i < roots.size(); ++i) {
    StepPoint pt;
    pt.point = roots[i].point;
    pt.multiplicity = roots[i].multiplicity;
    pt.arc_before = (i == 0) ? sf.arc_values.front() : sf.arc_values[i - 1];
    pt.arc_after = (i < sf.arc_values.size()) ? sf.arc_values[i] : pt.arc_before;
    if (pt.point.kind() == CircleKind::AlgebraicCos) {
      pt.value = UnresolvedPoint{exact_nullity_at(inv, pt.point)};
    } else {
      SignatureValue sv = signature_at(s, pt.point.exact_point());
      pt.value = sv;
      pt.jumps = std::make_pair(sv.signature - pt.arc_before, pt.arc_after - sv.signature);
      if (pt.point.kind() == CircleKind::One && sv.signature != 0)
        throw std::logic_error("signature_function: sigma(1) != 0");
    }
    sf.points.push_back(std::move(pt));
  }

  const SignatureValue at_pi = signature_at(s, QuadraticComplexPoint::from_cos(Rat(-1)));
  sf.murasugi = at_pi.signature;
  if (!sf.ends_at_pi && sf.murasugi != sf.arc_values.back())
    throw std::logic_error(
        "signature_function: sigma(-1) differs from the final arc although "
        "-1 is not a jump candidate");
  return sf;
}

Jumps jumps_at(const StepFunction& sf, const CirclePoint& p) {
  for (const StepPoint& pt : sf.points) {
    if (!same_point(pt.point, p)) continue;
    if (!pt.jumps)
      throw std::invalid_argument("jumps_at: point value is unresolved");
    return {pt.jumps->first, pt.jumps->second, pt.jumps->first + pt.jumps->second};
  }
  throw std::invalid_argument("jumps_at: not a critical point of the step function");
}

namespace {

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

}  // namespace

std::vector<ShadowSample> floating_shadow(const SeifertMatrix& s, const StepFunction& sf,
                                          double threshold) {
  std::vector<ShadowSample> out;
  const int n = s.n();
  for (size_t a = 0; a < sf.arc_samples.size(); ++a) {
    const QuadraticComplexPoint& z = sf.arc_samples[a];
    const double c = z.c.get_d();
    const double im = std::sqrt(std::max(0.0, 1 - c * c));
    // Complex Hermitian W = A + iB embedded as [[A, -B], [B, A]]; eigenvalues
    // appear twice.
    std::vector<std::vector<double>> m(2 * n, std::vector<double>(2 * n, 0.0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double vjk = s.v().at(j, k).get_d(), vkj = s.v().at(k, j).get_d();
        double re = (1 - c) * (vjk + vkj);
        double b = im * (vkj - vjk);
        m[j][k] = re;
        m[n + j][n + k] = re;
        m[j][n + k] = -b;
        m[n + j][k] = b;
      }
    std::vector<double> eig = jacobi_eigenvalues(std::move(m));
    double min_abs = eig.empty() ? 0.0 : std::abs(eig[0]);
    int pos = 0, neg = 0;
    for (double e : eig) {
      min_abs = std::min(min_abs, std::abs(e));
      if (e > 0) ++pos;
      if (e < 0) ++neg;
    }
    ShadowSample sample;
    sample.min_abs_eigenvalue = min_abs;
    sample.checked = n > 0 && min_abs > threshold;
    sample.agrees = !sample.checked || (pos - neg) / 2 == sf.arc_values[a];
    out.push_back(sample);
  }
  return out;
}

}  // namespace linksig
