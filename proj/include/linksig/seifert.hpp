// Seifert-matrix validation, the presentation matrix tV - V^T, higher
// Alexander polynomials by minor GCDs and by invariant factors, and the
// phi_o / phi_e counts of the module decomposition.
#pragma once

#include <utility>
#include <vector>

#include "linksig/circle.hpp"
#include "linksig/laurent.hpp"
#include "linksig/matrix.hpp"
#include "linksig/rational.hpp"

namespace linksig {

// An integer Seifert matrix whose skew part V - V^T is unimodularly
// congruent to g symplectic blocks plus a zero block; g and mu are derived,
// never supplied.
class SeifertMatrix {
 public:
  const Matrix<Int>& v() const { return v_; }
  int n() const { return v_.rows(); }
  int genus() const { return genus_; }
  int components() const { return mu_; }

 private:
  friend SeifertMatrix validate_seifert(Matrix<Int> v);
  Matrix<Int> v_;
  int genus_ = 0;
  int mu_ = 1;
};

// Derives g and mu and verifies every nonzero elementary divisor of V - V^T
// equals 1 (integer Smith form). Throws std::invalid_argument with a
// diagnostic otherwise.
SeifertMatrix validate_seifert(Matrix<Int> v);

// Elementary divisors d_1 | d_2 | ... (nonnegative, zeros last) of an
// integer matrix.
std::vector<Int> integer_smith_divisors(Matrix<Int> m);

// Entry (j,k) = t V[j][k] - V[k][j].
Matrix<LaurentPoly> presentation_matrix(const SeifertMatrix& s);

// W(t) = (1-t) V + (1-1/t) V^T and the substituted forms
// W*(t) = (1-t^2) V + (1-1/t^2) V^T, W**(t) = (1-t^4) V + (1-1/t^4) V^T.
Matrix<LaurentPoly> w_matrix(const SeifertMatrix& s);
Matrix<LaurentPoly> w_star_matrix(const SeifertMatrix& s);
Matrix<LaurentPoly> w_star_star_matrix(const SeifertMatrix& s);

// Determinant over the Laurent ring (fraction-free elimination).
LaurentPoly laurent_determinant(Matrix<LaurentPoly> m);

// Canonical GCD of all (n+1-i)-minors of tV - V^T; 1 for empty minors,
// 0 when all vanish. Requires 1 <= i <= n+1.
LaurentPoly higher_alexander_by_minors(const SeifertMatrix& s, int i);

// Diagonal form of a square Laurent-polynomial matrix over the rational
// Laurent PID: canonical factors with d_i | d_{i+1}, plus the number of zero
// diagonal entries.
struct InvariantFactors {
  std::vector<LaurentPoly> factors;
  int free_rank = 0;
};
InvariantFactors invariant_factors(Matrix<LaurentPoly> m);

struct LinkInvariants {
  std::vector<LaurentPoly> deltas;  // deltas[i-1] = Delta_i, up to the first 1
  LaurentPoly a_poly;               // first nonzero Delta
  int h_index = 1;                  // its (1-based) index
  std::vector<LaurentPoly> factors;
  int free_rank = 0;

  const LaurentPoly& delta(int i) const;  // 1-based, 0 beyond the stored tail
};
LinkInvariants link_invariants(const SeifertMatrix& s);

// phi_odd / phi_even: how many invariant factors contain f with odd
// (resp. positive even) multiplicity. f must be irreducible (not checked).
std::pair<int, int> phi_counts(const LinkInvariants& inv, const LaurentPoly& f);
// Same counts at an exact circle point; valid for AlgebraicCos points too.
std::pair<int, int> phi_counts_at(const LinkInvariants& inv, const CirclePoint& p);

// Deterministic generator: V = A + B with A random symmetric (entries in
// [-bound, bound]) and B the fixed block form with B - B^T standard.
SeifertMatrix random_seifert(int g, int mu, long bound, std::uint64_t seed);
// Random unimodular congruence U V U^T (exercises validate_seifert).
SeifertMatrix random_congruence(const SeifertMatrix& s, int steps, std::uint64_t seed);

}  // namespace linksig
