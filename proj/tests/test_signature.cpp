#include <variant>

#include "doctest.h"
#include "fixtures.hpp"
#include "linksig/signature.hpp"

using namespace linksig;

namespace {

// Independent oracle: rank of a matrix over the quadratic field by plain
// Gaussian elimination (field operations only).
int exact_rank(Matrix<QuadExt> m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.swap_rows(rank, pivot);
    const QuadExt inv = m.at(rank, col).inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      QuadExt f = m.at(r, col) * inv;
      for (int c = col; c < cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

const SignatureValue& exact(const PointValue& v) { return std::get<SignatureValue>(v); }

}  // namespace

TEST_CASE("hermitian_at") {
  SUBCASE("1x1 hopf: [-(2 - 2c)]") {
    for (long num : {-1L, 0L, 1L}) {
      QuadraticComplexPoint z = QuadraticComplexPoint::from_cos(Rat(num, 2));
      Matrix<QuadExt> w = hermitian_at(fixtures::hopf(), z);
      CHECK(w.at(0, 0) == QuadExt(-(2 - 2 * Rat(num, 2))));
    }
  }
  SUBCASE("any V at z = 1 gives the zero matrix") {
    Matrix<QuadExt> w =
        hermitian_at(fixtures::trefoil(), QuadraticComplexPoint::from_cos(Rat(1)));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(w.at(i, j).is_zero());
  }
  SUBCASE("trefoil at -1: [[-4, 2], [2, -4]]") {
    Matrix<QuadExt> w =
        hermitian_at(fixtures::trefoil(), QuadraticComplexPoint::from_cos(Rat(-1)));
    CHECK(w.at(0, 0) == QuadExt(Rat(-4)));
    CHECK(w.at(0, 1) == QuadExt(Rat(2)));
    CHECK(w.at(1, 0) == QuadExt(Rat(2)));
    CHECK(w.at(1, 1) == QuadExt(Rat(-4)));
  }
  SUBCASE("conjugate-transpose symmetry at interior points") {
    QuadraticComplexPoint z = QuadraticComplexPoint::from_cos(Rat(2, 7));
    Matrix<QuadExt> w = hermitian_at(fixtures::family_vn(3), z);
    for (int i = 0; i < w.rows(); ++i)
      for (int j = 0; j < w.cols(); ++j) CHECK(w.at(i, j) == w.at(j, i).conj());
  }
}

TEST_CASE("signature_at exact values") {
  SUBCASE("trefoil at -1: eigenvalues -2 and -6") {
    SignatureValue sv =
        signature_at(fixtures::trefoil(), QuadraticComplexPoint::from_cos(Rat(-1)));
    CHECK(sv.signature == -2);
    CHECK(sv.nullity == 0);
  }
  SUBCASE("zero-signature matrix at i") {
    SignatureValue sv = signature_at(fixtures::zero_signature_3comp(),
                                     QuadraticComplexPoint::from_cos(Rat(0)));
    CHECK(sv.signature == 0);
    CHECK(sv.nullity == 0);
  }
  SUBCASE("V_1 at cos 3/4: signature 0, nullity = corank of W") {
    SeifertMatrix v1 = fixtures::family_vn(1);
    QuadraticComplexPoint z = QuadraticComplexPoint::from_cos(Rat(3, 4));
    SignatureValue sv = signature_at(v1, z);
    CHECK(sv.signature == 0);
    // rank oracle: the zero row of V_1 plus the vanishing invariant factor
    // make the corank 2 here.
    const int corank = v1.n() - exact_rank(hermitian_at(v1, z));
    CHECK(corank == 2);
    CHECK(sv.nullity == corank);
  }
  SUBCASE("nullity equals corank on arc samples of random matrices") {
    for (std::uint64_t seed = 60; seed < 66; ++seed) {
      SeifertMatrix s = random_seifert(1 + seed % 2, 1 + seed % 3, 5, seed);
      QuadraticComplexPoint z = QuadraticComplexPoint::from_cos(Rat(seed % 7, 7));
      SignatureValue sv = signature_at(s, z);
      CHECK(sv.nullity == s.n() - exact_rank(hermitian_at(s, z)));
      CHECK((sv.signature - (s.n() - sv.nullity)) % 2 == 0);
    }
  }
}

TEST_CASE("signature_at on circle points") {
  CHECK(exact(signature_at(fixtures::trefoil(), CirclePoint::minus_one())).signature == -2);
  // AlgebraicCos points come back unresolved with the exact nullity
  LaurentPoly phi8({1, 0, 0, 0, 1}, 0);
  // A matrix with A_L containing Phi_8 is not in the fixture set; check the
  // structured rejection instead on an arbitrary algebraic point.
  std::vector<CircleRoot> roots = circle_roots(phi8);
  PointValue pv = signature_at(fixtures::trefoil(), roots[0].point);
  REQUIRE(std::holds_alternative<UnresolvedPoint>(pv));
  CHECK(std::get<UnresolvedPoint>(pv).nullity_bound == 0);  // W invertible there
}

TEST_CASE("step functions of the paper examples") {
  SUBCASE("V_0: identically -1 away from 1") {
    StepFunction sf = signature_function(fixtures::family_vn(0));
    REQUIRE(sf.points.size() == 1);
    CHECK(sf.points[0].point.kind() == CircleKind::One);
    CHECK(sf.arc_values == std::vector<int>{-1});
    CHECK(exact(sf.points[0].value).signature == 0);
    CHECK(sf.murasugi == -1);
    CHECK_FALSE(sf.ends_at_pi);
  }
  SUBCASE("V_-2: 0 / -1 / -2 at theta = pi/2 / -3") {
    StepFunction sf = signature_function(fixtures::family_vn(-2));
    REQUIRE(sf.points.size() == 2);
    CHECK(sf.points[1].point.kind() == CircleKind::RationalCos);
    CHECK(sf.points[1].point.cos_value() == Rat(0));
    CHECK(sf.arc_values == std::vector<int>{-1, -3});
    CHECK(exact(sf.points[1].value).signature == -2);
    CHECK(sf.murasugi == -3);
  }
  SUBCASE("zero-signature matrix: identically zero") {
    StepFunction sf = signature_function(fixtures::zero_signature_3comp());
    for (int v : sf.arc_values) CHECK(v == 0);
    for (const StepPoint& pt : sf.points) CHECK(exact(pt.value).signature == 0);
    CHECK(sf.murasugi == 0);
    CHECK(sf.ends_at_pi);
  }
  SUBCASE("sigma(1) = 0 and parity on a random family") {
    for (std::uint64_t seed = 70; seed < 82; ++seed) {
      SeifertMatrix s = random_seifert(seed % 3, 1 + seed % 4, 6, seed);
      StepFunction sf = signature_function(s);
      CHECK(exact(sf.points.front().value).signature == 0);
      for (const StepPoint& pt : sf.points)
        if (const auto* sv = std::get_if<SignatureValue>(&pt.value)) {
          CHECK(abs(sv->signature) + sv->nullity <= s.n());
          CHECK((sv->signature - (s.n() - sv->nullity)) % 2 == 0);
        }
    }
  }
  SUBCASE("multi-sample consistency diagnostic") {
    StepFunction sf = signature_function(fixtures::family_vn(1), 3);
    CHECK(sf.arc_values == std::vector<int>{1, -1});
  }
}

TEST_CASE("jumps") {
  SUBCASE("V_1 at cos 3/4: arcs 1 -> -1 across value 0") {
    StepFunction sf = signature_function(fixtures::family_vn(1));
    Jumps j = jumps_at(sf, CirclePoint::rational_cos(Rat(3, 4)));
    CHECK(j.ju_minus == -1);
    CHECK(j.ju_plus == -1);
    CHECK(j.ju_total == -2);
  }
  SUBCASE("zero-signature matrix at -1") {
    StepFunction sf = signature_function(fixtures::zero_signature_3comp());
    Jumps j = jumps_at(sf, CirclePoint::minus_one());
    CHECK(j.ju_minus == 0);
    CHECK(j.ju_plus == 0);
    CHECK(j.ju_total == 0);
  }
  SUBCASE("V_-2 at theta = 0: departing jump -1, within mu - 1") {
    StepFunction sf = signature_function(fixtures::family_vn(-2));
    Jumps j = jumps_at(sf, CirclePoint::one());
    CHECK(j.ju_plus == -1);
    CHECK(abs(j.ju_plus) <= 2);
    CHECK(j.ju_minus == -j.ju_plus);  // conjugation symmetry at the boundary
  }
  SUBCASE("interior total jump equals the arc difference") {
    StepFunction sf = signature_function(fixtures::trefoil());
    Jumps j = jumps_at(sf, CirclePoint::rational_cos(Rat(1, 2)));
    CHECK(j.ju_total == sf.arc_values[1] - sf.arc_values[0]);
  }
  SUBCASE("unknown points are rejected") {
    StepFunction sf = signature_function(fixtures::trefoil());
    CHECK_THROWS_AS(jumps_at(sf, CirclePoint::rational_cos(Rat(1, 3))),
                    std::invalid_argument);
  }
}

TEST_CASE("floating shadow diagnostic") {
  for (std::uint64_t seed = 90; seed < 96; ++seed) {
    SeifertMatrix s = random_seifert(1, 1 + seed % 3, 5, seed);
    StepFunction sf = signature_function(s);
    for (const ShadowSample& sh : floating_shadow(s, sf)) CHECK(sh.agrees);
  }
}
