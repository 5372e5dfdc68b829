#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "linksig/seifert.hpp"

using namespace linksig;
using fixtures::matrix;

namespace {

const LaurentPoly t_minus_1({-1, 1}, 0);
const LaurentPoly t_plus_1({1, 1}, 0);

// Independent route to the invariant factors: quotients of consecutive
// minor GCDs, d_i = D_i / D_{i-1}.
std::vector<LaurentPoly> factors_from_minors(const SeifertMatrix& s) {
  const int n = s.n();
  std::vector<LaurentPoly> ds;
  LaurentPoly prev = LaurentPoly::one();
  for (int size = 1; size <= n; ++size) {
    LaurentPoly dsize = higher_alexander_by_minors(s, n + 1 - size);
    if (dsize.is_zero()) break;
    ds.push_back(dsize.div_exact(prev).canonicalized());
    prev = dsize;
  }
  return ds;
}

}  // namespace

TEST_CASE("validate_seifert derives genus and components") {
  SeifertMatrix hopf = fixtures::hopf();
  CHECK(hopf.genus() == 0);
  CHECK(hopf.components() == 2);

  SeifertMatrix vn = fixtures::family_vn(2);
  CHECK(vn.genus() == 1);
  CHECK(vn.components() == 3);

  SeifertMatrix empty = fixtures::unknot();
  CHECK(empty.genus() == 0);
  CHECK(empty.components() == 1);

  SUBCASE("rejects skew parts with elementary divisor > 1") {
    CHECK_THROWS_WITH_AS(validate_seifert(matrix({{0, 2}, {0, 0}})),
                         doctest::Contains("elementary divisor"), std::invalid_argument);
    CHECK_THROWS_AS(validate_seifert(Matrix<Int>(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("integer smith divisors") {
  std::vector<Int> d = integer_smith_divisors(matrix({{0, 2}, {-2, 0}}));
  CHECK(d == std::vector<Int>{2, 2});
  d = integer_smith_divisors(matrix({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  // d_1 | d_2 | d_3 and their product is |det| when nonsingular
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] % d[0] == 0);
  if (d[2] != 0) CHECK(d[2] % d[1] == 0);
}

TEST_CASE("presentation matrix") {
  SeifertMatrix hopf = fixtures::hopf();
  Matrix<LaurentPoly> m = presentation_matrix(hopf);
  CHECK(m.at(0, 0) == LaurentPoly({1, -1}, 0));  // 1 - t

  SeifertMatrix tre = fixtures::trefoil();
  Matrix<LaurentPoly> mt = presentation_matrix(tre);
  CHECK(mt.at(0, 0) == LaurentPoly({1, -1}, 0));
  CHECK(mt.at(0, 1) == LaurentPoly({0, 1}, 0));  // t
  CHECK(mt.at(1, 0) == LaurentPoly({-1}, 0));
  CHECK(mt.at(1, 1) == LaurentPoly({1, -1}, 0));

  CHECK(presentation_matrix(fixtures::unknot()).rows() == 0);
}

TEST_CASE("invariant factors") {
  SUBCASE("trefoil: [1, t^2 - t + 1]") {
    InvariantFactors f = invariant_factors(presentation_matrix(fixtures::trefoil()));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == LaurentPoly::one());
    CHECK(f.factors[1] == LaurentPoly({1, -1, 1}, 0));
    CHECK(f.free_rank == 0);
  }
  SUBCASE("hopf: [t - 1]") {
    InvariantFactors f = invariant_factors(presentation_matrix(fixtures::hopf()));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == t_minus_1);
    CHECK(f.free_rank == 0);
  }
  SUBCASE("V_0: product (t-1)^3 with one free summand, split checked by minors") {
    SeifertMatrix v0 = fixtures::family_vn(0);
    InvariantFactors f = invariant_factors(presentation_matrix(v0));
    CHECK(f.free_rank == 1);
    LaurentPoly prod = LaurentPoly::one();
    for (const LaurentPoly& d : f.factors) prod = prod * d;
    CHECK(prod.canonicalized() == pow(t_minus_1, 3).canonicalized());
    CHECK(f.factors == factors_from_minors(v0));
  }
  SUBCASE("divisibility chain on random matrices") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      SeifertMatrix s = random_seifert(static_cast<int>(seed % 3), 1 + seed % 3, 4, seed);
      InvariantFactors f = invariant_factors(presentation_matrix(s));
      for (size_t i = 0; i + 1 < f.factors.size(); ++i)
        CHECK(f.factors[i + 1].divisible_by(f.factors[i]));
    }
  }
}

TEST_CASE("higher alexander polynomials by minors") {
  SUBCASE("family V_n") {
    for (long n : {-2L, 0L, 1L, 3L}) {
      SeifertMatrix vn = fixtures::family_vn(n);
      CHECK(higher_alexander_by_minors(vn, 1).is_zero());
      CHECK(higher_alexander_by_minors(vn, 2) == fixtures::family_a_poly(n));
    }
  }
  SUBCASE("zero-signature 3-component matrix: Delta = (t-1)^2 (t+1)^2") {
    LaurentPoly expected = (pow(t_minus_1, 2) * pow(t_plus_1, 2)).canonicalized();
    CHECK(higher_alexander_by_minors(fixtures::zero_signature_3comp(), 1) == expected);
  }
  SUBCASE("0-minor convention and range errors") {
    CHECK(higher_alexander_by_minors(fixtures::unknot(), 1) == LaurentPoly::one());
    CHECK_THROWS_AS(higher_alexander_by_minors(fixtures::hopf(), 0), std::invalid_argument);
    CHECK_THROWS_AS(higher_alexander_by_minors(fixtures::hopf(), 3), std::invalid_argument);
  }
}

TEST_CASE("link invariants") {
  SUBCASE("V_n family") {
    for (long n : {-4L, -1L, 0L, 2L}) {
      LinkInvariants inv = link_invariants(fixtures::family_vn(n));
      CHECK(inv.h_index == 2);
      CHECK(inv.delta(1).is_zero());
      CHECK(inv.a_poly == fixtures::family_a_poly(n));
      CHECK(inv.delta(2) == inv.a_poly);
    }
  }
  SUBCASE("zero-signature matrix: h = 1") {
    LinkInvariants inv = link_invariants(fixtures::zero_signature_3comp());
    CHECK(inv.h_index == 1);
    CHECK(inv.a_poly == (pow(t_minus_1, 2) * pow(t_plus_1, 2)).canonicalized());
    // invariant factors [1, 1, (t-1)(t+1), (t-1)(t+1)]
    REQUIRE(inv.factors.size() == 4);
    CHECK(inv.factors[2] == (t_minus_1 * t_plus_1).canonicalized());
    CHECK(inv.factors[3] == inv.factors[2]);
  }
  SUBCASE("hopf") {
    LinkInvariants inv = link_invariants(fixtures::hopf());
    CHECK(inv.h_index == 1);
    CHECK(inv.a_poly == t_minus_1);
  }
  SUBCASE("unknot: Delta_1 = 1") {
    LinkInvariants inv = link_invariants(fixtures::unknot());
    CHECK(inv.h_index == 1);
    CHECK(inv.a_poly == LaurentPoly::one());
    CHECK(inv.deltas.size() == 1);
  }
  SUBCASE("structure invariants on random matrices") {
    for (std::uint64_t seed = 30; seed < 50; ++seed) {
      SeifertMatrix s = random_seifert(static_cast<int>(seed % 4), 1 + seed % 4, 5, seed);
      LinkInvariants inv = link_invariants(s);
      CHECK(inv.h_index == inv.free_rank + 1);
      for (int i = 1; i < inv.h_index; ++i) CHECK(inv.delta(i).is_zero());
      CHECK(inv.delta(inv.h_index) == inv.a_poly);
      LaurentPoly prod = LaurentPoly::one();
      for (const LaurentPoly& d : inv.factors) {
        CHECK(!d.is_zero());
        prod = prod * d;
      }
      CHECK(prod.canonicalized() == inv.a_poly);
      // Lemma estmult and its remark
      if (inv.h_index == 1)
        CHECK(multiplicity(inv.delta(1), t_minus_1) >= s.components() - 1);
      CHECK(multiplicity(inv.a_poly, t_minus_1) >= s.components() - inv.h_index);
      // evenness of mult_1(A) + mu + h and of mult_{-1}(A)
      CHECK((multiplicity(inv.a_poly, t_minus_1) + s.components() + inv.h_index) % 2 == 0);
      CHECK(multiplicity(inv.a_poly, t_plus_1) % 2 == 0);
    }
  }
}

TEST_CASE("minor-GCD oracle matches invariant factors for n <= 6") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int g = static_cast<int>(seed % 3);
    const int mu = 1 + static_cast<int>(seed % 2) * 2;
    SeifertMatrix s = random_seifert(g, mu, 6, seed);
    if (s.n() > 6) continue;
    LinkInvariants inv = link_invariants(s);
    for (int i = 1; i <= s.n() + 1; ++i)
      CHECK(higher_alexander_by_minors(s, i) == inv.delta(i));
  }
}

TEST_CASE("phi counts") {
  LinkInvariants made;
  made.factors = {LaurentPoly::one(), LaurentPoly::one(),
                  (t_minus_1 * t_plus_1).canonicalized(),
                  (t_minus_1 * t_plus_1).canonicalized()};
  CHECK(phi_counts(made, t_plus_1) == std::pair<int, int>{2, 0});

  LinkInvariants hopf_inv = link_invariants(fixtures::hopf());
  CHECK(phi_counts(hopf_inv, t_plus_1) == std::pair<int, int>{0, 0});

  LinkInvariants sq;
  sq.factors = {pow(t_plus_1, 2).canonicalized()};
  CHECK(phi_counts(sq, t_plus_1) == std::pair<int, int>{0, 1});

  // the point-based variant agrees at exact points
  CHECK(phi_counts_at(made, CirclePoint::minus_one()) == std::pair<int, int>{2, 0});
  CHECK(phi_counts_at(made, CirclePoint::one()) == std::pair<int, int>{2, 0});
}

TEST_CASE("random seifert generator") {
  SeifertMatrix a = random_seifert(2, 1, 3, 7);
  CHECK(a.n() == 4);
  CHECK(a.genus() == 2);
  CHECK(a.components() == 1);
  // skew part is exactly the standard block form
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int expect = 0;
      if (i / 2 == j / 2) expect = (i + 1 == j) ? 1 : (j + 1 == i ? -1 : 0);
      CHECK(a.v().at(i, j) - a.v().at(j, i) == expect);
    }

  SeifertMatrix b = random_seifert(0, 3, 5, 9);
  CHECK(b.n() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(b.v().at(i, j) == b.v().at(j, i));

  CHECK(random_seifert(1, 2, 4, 42).v() == random_seifert(1, 2, 4, 42).v());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(abs(random_seifert(2, 1, 3, 99).v().at(i, j)) <= 4);  // bound + block part

  SUBCASE("congruence preserves the derived data") {
    SeifertMatrix s = random_seifert(2, 2, 4, 17);
    SeifertMatrix c = random_congruence(s, 4, 18);
    CHECK(c.genus() == s.genus());
    CHECK(c.components() == s.components());
    CHECK(link_invariants(c).a_poly == link_invariants(s).a_poly);
  }
}
