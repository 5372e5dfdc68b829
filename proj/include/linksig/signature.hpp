// Exact signature and nullity of W(omega) = (1-omega)V + (1-conj(omega))V^T
// at exact circle points, assembly of the signature step function on the
// upper half circle, and one-sided jumps.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "linksig/circle.hpp"
#include "linksig/matrix.hpp"
#include "linksig/quadratic.hpp"
#include "linksig/seifert.hpp"

namespace linksig {

struct SignatureValue {
  int signature = 0;
  int nullity = 0;
};

// Exact evaluation is not available at irrational cosines; the step function
// still pins the point between its two known arc values, up to the nullity.
struct UnresolvedPoint {
  int nullity_bound = 0;
};

using PointValue = std::variant<SignatureValue, UnresolvedPoint>;

// Entry (j,k) = (1-c)(V[j][k] + V[k][j]) + delta (V[k][j] - V[j][k]).
Matrix<QuadExt> hermitian_at(const SeifertMatrix& s, const QuadraticComplexPoint& z);

// Exact signature and nullity via the rational characteristic polynomial
// (Faddeev-LeVerrier over the quadratic ring) and Descartes counting, which
// is exact for real-rooted polynomials.
SignatureValue signature_at(const SeifertMatrix& s, const QuadraticComplexPoint& z);
// Exact at One / MinusOne / RationalCos; UnresolvedPoint (with the exact
// nullity of W at the point) for AlgebraicCos.
PointValue signature_at(const SeifertMatrix& s, const CirclePoint& p);

struct StepPoint {
  CirclePoint point;
  int multiplicity = 0;  // as a root of (t-1) A_L
  PointValue value;
  int arc_before = 0;  // sigma^- (at theta=0 this is sigma^+ by conjugation)
  int arc_after = 0;   // sigma^+ (at theta=pi this is sigma^- by conjugation)
  std::optional<std::pair<int, int>> jumps;  // (ju_minus, ju_plus), exact values only
};

// The signature function on theta in [0, pi]: constant integer arcs between
// consecutive critical points (the circle roots of (t-1) A_L), plus point
// data at each critical point. sigma(1) = 0 always holds and is checked.
struct StepFunction {
  std::vector<StepPoint> points;            // ascending theta; front() is One
  std::vector<int> arc_values;              // one per open arc, in order
  std::vector<QuadraticComplexPoint> arc_samples;  // the sample that produced each arc
  bool ends_at_pi = false;                  // whether MinusOne is a critical point
  int murasugi = 0;                         // sigma(-1), exact

  int arc_count() const { return static_cast<int>(arc_values.size()); }
  int sigma_plus_at_one() const { return arc_values.front(); }
};

// One exact sample per arc by default; extra samples are a consistency
// diagnostic: any disagreement inside an arc would contradict the critical
// point set and raises std::logic_error.
StepFunction signature_function(const SeifertMatrix& s, int samples_per_arc = 1);
StepFunction signature_function(const SeifertMatrix& s, const LinkInvariants& inv,
                                int samples_per_arc = 1);

struct Jumps {
  int ju_minus = 0;
  int ju_plus = 0;
  int ju_total = 0;
};
// Jumps at a critical point with an exact value; ju_minus is the arriving
// jump (theta increasing), ju_plus the departing one. Throws for unresolved
// points and for points that are not critical.
Jumps jumps_at(const StepFunction& sf, const CirclePoint& p);

// 64-bit diagnostic: Jacobi eigenvalues of W at each arc sample, compared
// with the exact arc signature when the smallest |eigenvalue| clears the
// given threshold. Not a correctness dependency.
struct ShadowSample {
  double min_abs_eigenvalue = 0.0;
  bool checked = false;
  bool agrees = true;
};
std::vector<ShadowSample> floating_shadow(const SeifertMatrix& s, const StepFunction& sf,
                                          double threshold = 1e-6);

}  // namespace linksig
