// Shared test matrices: the twist family V_n, the 4x4 three-component matrix
// with identically zero signature, and the small classics.
#pragma once

#include <initializer_list>

#include "linksig/seifert.hpp"

namespace fixtures {

inline linksig::Matrix<linksig::Int> matrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  const int n = static_cast<int>(rows.size());
  linksig::Matrix<linksig::Int> m(n, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

// 3-component twist family: Delta = 0, A = (t-1)((n+1)t^2 - (n+2)t + (n+1)).
inline linksig::SeifertMatrix family_vn(long n) {
  return linksig::validate_seifert(matrix({{-1, 1, 0, 0},  //
                                           {0, -1, 1, 0},
                                           {0, 1, n, 0},
                                           {0, 0, 0, 0}}));
}

// 3-component link with Delta = (t-1)^2 (t+1)^2 and zero signature function.
inline linksig::SeifertMatrix zero_signature_3comp() {
  return linksig::validate_seifert(matrix({{1, -1, 1, 1},  //
                                           {0, 0, 0, -1},
                                           {1, 0, 0, 2},
                                           {1, -1, 2, 0}}));
}

inline linksig::SeifertMatrix hopf() { return linksig::validate_seifert(matrix({{-1}})); }

inline linksig::SeifertMatrix trefoil() {
  return linksig::validate_seifert(matrix({{-1, 1}, {0, -1}}));
}

inline linksig::SeifertMatrix unknot() {
  return linksig::validate_seifert(linksig::Matrix<linksig::Int>(0, 0));
}

// A = (t-1)((n+1)t^2 - (n+2)t + (n+1)), canonical.
inline linksig::LaurentPoly family_a_poly(long n) {
  using linksig::LaurentPoly;
  using linksig::Rat;
  LaurentPoly quad({Rat(n + 1), Rat(-(n + 2)), Rat(n + 1)}, 0);
  LaurentPoly t_minus_1({-1, 1}, 0);
  return (t_minus_1 * quad).canonicalized();
}

}  // namespace fixtures
