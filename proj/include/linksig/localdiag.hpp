// Diagonalization of Hermitian Laurent-polynomial matrices by simultaneous
// row/column operations over the localization at a bar-invariant irreducible
// quadratic trace factor f_rho, and the substitution trick that predicts the
// signature jump at -1 from the diagonalization of W* at rho = i.
//
// Each diagonal entry is normalized as unit * f^eps with f the canonical
// integer quadratic. Writing f = a t (t + 1/t - 2cos theta), the product
// unit * (a t)^eps is real at rho (bar-invariance of Hermitian diagonal
// entries) and carries the local sign, while the parity of eps decides how
// the entry flips across rho.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linksig/circle.hpp"
#include "linksig/laurent.hpp"
#include "linksig/matrix.hpp"
#include "linksig/seifert.hpp"

namespace linksig {

// (num/den) * f^f_exp with num and den coprime to f (num zero only for the
// zero value, which is {0, 1, 0}).
struct LocalizedScalar {
  LaurentPoly num;
  LaurentPoly den = LaurentPoly::one();
  int f_exp = 0;

  bool is_zero() const { return num.is_zero(); }
};

// Arithmetic in Lambda_(f).
class LocalRing {
 public:
  explicit LocalRing(LaurentPoly f);

  const LaurentPoly& f() const { return f_; }
  LocalizedScalar from_laurent(const LaurentPoly& p) const;
  LaurentPoly to_laurent(const LocalizedScalar& s) const;  // num*f^e; den must be a unit

  LocalizedScalar add(const LocalizedScalar& a, const LocalizedScalar& b) const;
  LocalizedScalar sub(const LocalizedScalar& a, const LocalizedScalar& b) const;
  LocalizedScalar mul(const LocalizedScalar& a, const LocalizedScalar& b) const;
  // Requires val(a) >= val(b) and b != 0 so the quotient stays in the ring.
  LocalizedScalar div(const LocalizedScalar& a, const LocalizedScalar& b) const;
  LocalizedScalar neg(const LocalizedScalar& a) const;
  LocalizedScalar bar(const LocalizedScalar& a) const;

  // Exact value at a rational-cosine point (den does not vanish there).
  QuadExt eval_unit(const LocalizedScalar& a, const QuadraticComplexPoint& z) const;

 private:
  LocalizedScalar reduced(LaurentPoly num, LaurentPoly den, int f_exp) const;
  LaurentPoly f_;
  LaurentPoly bar_unit_;  // bar(f)/f, a unit +-t^k
};

// One simultaneous row-and-column operation, for the audit dump.
struct DiagOp {
  std::string kind;  // "swap" | "add"
  int i = 0;
  int j = 0;
  std::string multiplier;  // row_i += m row_j, col_i += bar(m) col_j
};

struct DiagEntry {
  LocalizedScalar unit;  // f_exp == 0, nonzero
  int epsilon = 0;       // f-valuation of the diagonal entry
};

struct DiagonalForm {
  std::vector<DiagEntry> entries;  // in elimination order
  int zero_count = 0;
  LaurentPoly f_factor;
  std::vector<DiagOp> operations;

  int total_exponent() const;  // e_rho = sum of epsilons
};

// Lemma-style diagonalization. f must be a bar-invariant irreducible
// quadratic (trace factor of an interior point); t -+ 1 is rejected, as the
// lemma fails there. w must be Hermitian under the bar involution.
DiagonalForm diagonalize_localized(const Matrix<LaurentPoly>& w, const LaurentPoly& f);

// Exact one-sided jumps of the diagonal form across its point (rational
// cosine required for sign evaluation), and the congruence class
// 2 * #(odd-epsilon entries) mod 4.
struct PredictedJump {
  std::pair<int, int> ju;  // (ju_minus, ju_plus)
  int congruence_class = 0;
};
PredictedJump jump_from_diagonal(const DiagonalForm& d, const CirclePoint& p);

// Diagonalizes W* = (1-t^2)V + (1-1/t^2)V^T over Lambda_(t+1/t) and
// classifies the entries by parity of the f-exponent and sign at i.
// B = C always (total jump at -1 vanishes); |ju(+-)(-1)| <= |D - E|.
struct MinusOneJumpBound {
  int bound = 0;  // |D - E|
  int b = 0, c = 0, d = 0, e = 0;
  int exact_ju_minus = 0;  // E - D; the sampled ju^-(-1) must equal this
};
MinusOneJumpBound jump_at_minus_one(const SeifertMatrix& s);
MinusOneJumpBound jump_at_minus_one(const SeifertMatrix& s, const LinkInvariants& inv);

// Parity certificate for mult_1(A_L) + mu + h: diagonalizes
// W** = (1-t^4)V + (1-1/t^4)V^T over Lambda_(t+1/t) and compares the total
// exponent with mult_1(A_L) + 2g + mu - h.
struct EvennessReport {
  int e_total = 0;     // e_{t+1/t}(W**)
  int expected = 0;    // mult_1(A_L) + 2g + mu_L - h_L
  bool is_even = false;
  bool matches_formula = false;
};
EvennessReport evenness_witness(const SeifertMatrix& s);
EvennessReport evenness_witness(const SeifertMatrix& s, const LinkInvariants& inv);

}  // namespace linksig
