#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "linksig/localdiag.hpp"
#include "linksig/signature.hpp"

using namespace linksig;

namespace {

const LaurentPoly f_sixth({1, -1, 1}, 0);   // t^2 - t + 1, cos = 1/2
const LaurentPoly f_fourth({1, 0, 1}, 0);   // t^2 + 1, cos = 0

std::vector<int> epsilons(const DiagonalForm& d) {
  std::vector<int> e;
  for (const DiagEntry& entry : d.entries) e.push_back(entry.epsilon);
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("localized scalar arithmetic") {
  LocalRing ring(f_sixth);
  LocalizedScalar a = ring.from_laurent(f_sixth * f_sixth * LaurentPoly({1, 1}, 0));
  CHECK(a.f_exp == 2);
  CHECK(a.num == LaurentPoly({1, 1}, 0));
  LocalizedScalar b = ring.from_laurent(LaurentPoly({-1, 1}, 0));
  CHECK(b.f_exp == 0);

  SUBCASE("sums re-extract f powers") {
    // f*(t+1) + f*(-t-1) = 0; f*(t+1) + f*(1-t) = 2f
    LocalizedScalar x = ring.from_laurent(f_sixth * LaurentPoly({1, 1}, 0));
    LocalizedScalar y = ring.from_laurent(f_sixth * LaurentPoly({-1, -1}, 0));
    CHECK(ring.add(x, y).is_zero());
  }
  SUBCASE("division stays in the ring only when valuations allow") {
    LocalizedScalar q = ring.div(a, b);
    CHECK(q.f_exp == 2);
    CHECK_THROWS_AS(ring.div(b, a), std::logic_error);
  }
  SUBCASE("bar evaluates to the conjugate") {
    LocalizedScalar s = ring.from_laurent(LaurentPoly({2, 3}, 0) * f_sixth);
    LocalizedScalar sb = ring.bar(s);
    CHECK(sb.f_exp == 1);
    QuadraticComplexPoint z = QuadraticComplexPoint::from_cos(Rat(1, 3));
    QuadExt value_s =
        ring.eval_unit(LocalizedScalar{s.num, s.den, 0}, z) * f_sixth.evaluate(z);
    QuadExt value_sb =
        ring.eval_unit(LocalizedScalar{sb.num, sb.den, 0}, z) * f_sixth.evaluate(z);
    CHECK(value_sb == value_s.conj());
  }
}

TEST_CASE("diagonalize_localized") {
  SUBCASE("trefoil over Lambda_(t^2-t+1): epsilons {0, 1}") {
    DiagonalForm d = diagonalize_localized(w_matrix(fixtures::trefoil()), f_sixth);
    CHECK(d.zero_count == 0);
    CHECK(epsilons(d) == std::vector<int>{0, 1});
    CHECK(d.total_exponent() == 1);
  }
  SUBCASE("e_rho = 0 when no entry is divisible") {
    DiagonalForm d = diagonalize_localized(w_matrix(fixtures::trefoil()), f_fourth);
    CHECK(d.total_exponent() == 0);
    PredictedJump pj = jump_from_diagonal(d, CirclePoint::rational_cos(Rat(0)));
    CHECK(pj.ju == std::pair<int, int>{0, 0});
    CHECK(pj.congruence_class == 0);
  }
  SUBCASE("zero-signature matrix over Lambda_(t^2+1): all epsilons 0") {
    DiagonalForm d =
        diagonalize_localized(w_matrix(fixtures::zero_signature_3comp()), f_fourth);
    CHECK(d.total_exponent() == 0);
  }
  SUBCASE("rejects t -+ 1 and non-Hermitian input") {
    CHECK_THROWS_WITH_AS(
        diagonalize_localized(w_matrix(fixtures::trefoil()), LaurentPoly({-1, 1}, 0)),
        doctest::Contains("rho = +-1"), std::invalid_argument);
    Matrix<LaurentPoly> bad(2, 2, LaurentPoly());
    bad.at(0, 1) = LaurentPoly({0, 1}, 0);
    CHECK_THROWS_AS(diagonalize_localized(bad, f_sixth), std::invalid_argument);
    CHECK_THROWS_AS(diagonalize_localized(w_matrix(fixtures::trefoil()),
                                          LaurentPoly({1, -3, 1}, 0)),
                    std::invalid_argument);  // roots off the circle
  }
  SUBCASE("presents the same module: epsilon sum = mult_f(det W) when nonsingular") {
    for (std::uint64_t seed = 201; seed < 213; ++seed) {
      SeifertMatrix s = random_seifert(1 + seed % 2, 1 + seed % 2, 5, seed);
      LinkInvariants inv = link_invariants(s);
      if (inv.h_index != 1) continue;
      Matrix<LaurentPoly> w = w_matrix(s);
      LaurentPoly det = laurent_determinant(w);
      for (const LaurentPoly& f : {f_sixth, f_fourth}) {
        DiagonalForm d = diagonalize_localized(w, f);
        CHECK(d.total_exponent() == multiplicity(det, f));
      }
    }
  }
  SUBCASE("audit log records simultaneous operations") {
    DiagonalForm d = diagonalize_localized(w_matrix(fixtures::trefoil()), f_sixth);
    CHECK(!d.operations.empty());
    for (const DiagOp& op : d.operations) CHECK((op.kind == "add" || op.kind == "swap"));
  }
}

TEST_CASE("jump_from_diagonal cross-checks the sampled jumps") {
  SUBCASE("trefoil at cos 1/2: (-1, -1), class 2") {
    DiagonalForm d = diagonalize_localized(w_matrix(fixtures::trefoil()), f_sixth);
    PredictedJump pj = jump_from_diagonal(d, CirclePoint::rational_cos(Rat(1, 2)));
    CHECK(pj.ju == std::pair<int, int>{-1, -1});
    CHECK(pj.congruence_class == 2);
    Jumps sampled = jumps_at(signature_function(fixtures::trefoil()),
                             CirclePoint::rational_cos(Rat(1, 2)));
    CHECK(pj.ju.first == sampled.ju_minus);
    CHECK(pj.ju.second == sampled.ju_plus);
  }
  SUBCASE("constructed diagonal with one even entry: total jump 0") {
    DiagonalForm d;
    d.f_factor = f_fourth;
    d.entries.push_back({LocalizedScalar{LaurentPoly::one(), LaurentPoly::one(), 0}, 2});
    PredictedJump pj = jump_from_diagonal(d, CirclePoint::rational_cos(Rat(0)));
    CHECK(pj.ju.first + pj.ju.second == 0);
    CHECK(abs(pj.ju.first) == 1);
    CHECK(pj.congruence_class == 0);
  }
  SUBCASE("point must match the form") {
    DiagonalForm d = diagonalize_localized(w_matrix(fixtures::trefoil()), f_sixth);
    CHECK_THROWS_AS(jump_from_diagonal(d, CirclePoint::rational_cos(Rat(0))),
                    std::invalid_argument);
  }
  SUBCASE("every interior rational-cosine critical point, random matrices") {
    for (std::uint64_t seed = 300; seed < 312; ++seed) {
      SeifertMatrix s = random_seifert(1 + seed % 3, 1 + seed % 3, 6, seed);
      StepFunction sf = signature_function(s);
      Matrix<LaurentPoly> w = w_matrix(s);
      for (const StepPoint& pt : sf.points) {
        if (pt.point.kind() != CircleKind::RationalCos) continue;
        DiagonalForm d = diagonalize_localized(w, trace_factor_of(pt.point));
        PredictedJump pj = jump_from_diagonal(d, pt.point);
        REQUIRE(pt.jumps.has_value());
        CHECK(pj.ju == *pt.jumps);
        CHECK(std::max(abs(pj.ju.first), abs(pj.ju.second)) <= d.total_exponent());
      }
    }
  }
}

TEST_CASE("jump at -1 via W*") {
  SUBCASE("zero-signature matrix: D = E, bound 0") {
    MinusOneJumpBound b = jump_at_minus_one(fixtures::zero_signature_3comp());
    CHECK(b.b == b.c);
    CHECK(b.d - b.e == 0);
    CHECK(b.bound == 0);
  }
  SUBCASE("V_n: A_L has no root at -1, bound 0") {
    for (long n : {-2L, 0L, 2L}) {
      MinusOneJumpBound b = jump_at_minus_one(fixtures::family_vn(n));
      CHECK(b.bound == 0);
    }
  }
  SUBCASE("random matrices: sampled jump matches D and E exactly") {
    int with_mult = 0;
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
      SeifertMatrix s = random_seifert(1 + seed % 3, 1 + seed % 3, 6, seed);
      LinkInvariants inv = link_invariants(s);
      const int m = multiplicity(inv.a_poly, LaurentPoly({1, 1}, 0));
      MinusOneJumpBound b = jump_at_minus_one(s, inv);
      CHECK(2 * b.bound <= m);  // D, E entries carry even exponents >= 2... at least |D-E| <= m/2
      StepFunction sf = signature_function(s, inv);
      const int sampled =
          sf.ends_at_pi ? jumps_at(sf, CirclePoint::minus_one()).ju_minus : 0;
      CHECK(abs(sampled) <= b.bound);
      CHECK(sampled == b.exact_ju_minus);
      if (m == 2) ++with_mult;
    }
    CHECK(with_mult > 0);  // the family exercised the interesting case
  }
}

TEST_CASE("evenness witness") {
  SUBCASE("V_n: e = 1 + 2 + 3 - 2 = 4") {
    EvennessReport r = evenness_witness(fixtures::family_vn(1));
    CHECK(r.e_total == 4);
    CHECK(r.expected == 4);
    CHECK(r.is_even);
    CHECK(r.matches_formula);
  }
  SUBCASE("hopf: e = 1 + 0 + 2 - 1 = 2") {
    EvennessReport r = evenness_witness(fixtures::hopf());
    CHECK(r.e_total == 2);
    CHECK(r.matches_formula);
  }
  SUBCASE("unknot: e = 0") {
    EvennessReport r = evenness_witness(fixtures::unknot());
    CHECK(r.e_total == 0);
    CHECK(r.expected == 0);
    CHECK(r.is_even);
  }
  SUBCASE("random matrices") {
    for (std::uint64_t seed = 500; seed < 515; ++seed) {
      EvennessReport r = evenness_witness(random_seifert(seed % 3, 1 + seed % 4, 5, seed));
      CHECK(r.is_even);
      CHECK(r.matches_formula);
    }
  }
}

TEST_CASE("no local diagonalization exists over Lambda_(t+1) for the zero-signature matrix") {
  // Observed obstruction: mult_{-1}(A_L) = 2 is split as two odd exponents
  // across the invariant factors (phi_e(L,-1) = 0), while a diagonal form
  // over Lambda_(t+1) would need a single even-exponent entry; consistent
  // with ju(+-)(-1) = 0 and the D/E count bound 0.
  SeifertMatrix s = fixtures::zero_signature_3comp();
  LinkInvariants inv = link_invariants(s);
  CHECK(multiplicity(inv.a_poly, LaurentPoly({1, 1}, 0)) == 2);
  auto [phi_o, phi_e] = phi_counts_at(inv, CirclePoint::minus_one());
  CHECK(phi_o == 2);
  CHECK(phi_e == 0);
  CHECK(jump_at_minus_one(s, inv).bound == 0);
}
