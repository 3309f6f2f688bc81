#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitchin/cover.hpp"

using namespace hitchin;

namespace {

HyperCurve desk_g2() {
  const FieldCtx& F = FieldCtx::get(11, 4);
  Poly f = Poly::x(F);
  for (int64_t r = 1; r <= 4; ++r) f = f * Poly::linear_root(Fq(F, r));
  return validate_curve(F, f, 2);
}

HyperCurve desk_g3() {
  const FieldCtx& F = FieldCtx::get(13, 4);
  Poly f = Poly::x(F);
  for (int64_t r = 1; r <= 6; ++r) f = f * Poly::linear_root(Fq(F, r));
  return validate_curve(F, f, 3);
}

}  // namespace

TEST_CASE("model construction and validation") {
  HyperCurve C = desk_g2();
  CoverModel M(C, {0, 1});
  CHECK(M.genus() == 3);
  CHECK(M.h() == Poly::x(C.field()) * Poly::linear_root(Fq(C.field(), 1)));
  CHECK(!M.torsion_class().is_trivial());
  CHECK((M.torsion_class() + M.torsion_class()).is_trivial());
  CHECK(M.twist_divisor().degree() == 0);

  CHECK_THROWS(CoverModel(C, {}));        // empty
  CHECK_THROWS(CoverModel(C, {0}));       // odd size
  CHECK_THROWS(CoverModel(C, {0, 7}));    // out of range

  CHECK(CoverModel(desk_g3(), {2, 5}).genus() == 5);
}

TEST_CASE("fibers have two sigma-swapped points everywhere") {
  HyperCurve C = desk_g2();
  CoverModel M(C, {0, 1});
  for (const PointX& P : C.rational_points(1)) {
    auto [q0, q1] = M.points_above(P);
    CHECK(q0 != q1);
    CHECK(q0.base == P);
    CHECK(q1.base == P);
    CHECK(M.sigma(q0) == q1);
    CHECK(M.sigma(q1) == q0);
    CHECK(M.sigma(M.sigma(q0)) == q0);
    if (!P.is_infinity() && !M.h().eval(P.x()).is_zero()) {
      REQUIRE(q0.sheet_value.has_value());
      REQUIRE(q1.sheet_value.has_value());
      CHECK(*q0.sheet_value * *q0.sheet_value == M.h().eval(P.x()));
      CHECK(*q1.sheet_value == -*q0.sheet_value);
    } else {
      // points over zeros of h and over infinity carry abstract labels
      CHECK(!q0.sheet_value.has_value());
    }
  }
}

TEST_CASE("sheet values are explicit square roots") {
  HyperCurve C = desk_g2();
  const FieldCtx& F = C.field();
  CoverModel M(C, {0, 1});  // h = x(x-1)
  // x0 = 3: h(3) = 3*2 = 6; find a point with that x
  Fq x0(F, 3);
  auto sq = sqrt_fq(C.f().eval(x0));
  REQUIRE(sq.has_value());
  auto [q0, q1] = M.points_above(PointX::affine(x0, sq->first));
  CHECK(*q0.sheet_value * *q0.sheet_value == Fq(F, 6));
  CHECK(*q0.sheet_value < *q1.sheet_value);
}

TEST_CASE("norm and pullback") {
  HyperCurve C = desk_g2();
  CoverModel M(C, {0, 1});
  auto pts = C.rational_points(1);
  std::mt19937_64 rng(61);

  for (int trial = 0; trial < 100; ++trial) {
    DivisorX D;
    int n = static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i)
      D.add(pts[rng() % pts.size()], 1 - static_cast<int64_t>(rng() % 3));
    CoverDivisor pD = M.pullback_divisor(D);
    CHECK(pD.degree() == 2 * D.degree());
    CHECK(M.norm_divisor(pD) == D * 2);
    CHECK(M.sigma_star(pD) == pD);
  }

  // single point: norm of one preimage is the point itself
  auto [q0, q1] = M.points_above(pts.back());
  CoverDivisor R;
  R.add(q0, 1);
  DivisorX nr = M.norm_divisor(R);
  CHECK(nr.degree() == 1);
  CHECK(nr.coeff(pts.back()) == 1);

  // sigma-invariance of the norm
  CoverDivisor R2;
  R2.add(q0, 2);
  R2.add(M.points_above(pts.front()).second, 1);
  CHECK(M.norm_divisor(M.sigma_star(R2)) == M.norm_divisor(R2));
}

TEST_CASE("disjointness from the involute") {
  HyperCurve C = desk_g2();
  CoverModel M(C, {0, 1});
  auto pts = C.rational_points(1);

  CHECK(M.disjoint_from_involute(CoverDivisor{}));

  PointX P = pts.back();
  auto [q0, q1] = M.points_above(P);
  CoverDivisor bad;
  bad.add(q0, 1);
  bad.add(q1, 1);  // q1 = sigma(q0)
  CHECK(!M.disjoint_from_involute(bad));

  // two distinct base points, one sheet each: disjoint
  CoverDivisor good;
  good.add(q0, 1);
  good.add(M.points_above(pts[pts.size() - 2]).first, 1);
  CHECK(M.disjoint_from_involute(good));

  // multiplicity does not affect the support reading
  CHECK(M.disjoint_from_involute(good * 3));

  CoverDivisor neg;
  neg.add(q0, -1);
  CHECK_THROWS_AS(M.disjoint_from_involute(neg), NotEffective);
}

TEST_CASE("cover genus bookkeeping") {
  // g_T = 2g - 1 splits as h0(K) + h0(K + D_T) = g + (g-1)
  for (auto [mk, S] : {std::pair<int, std::set<int>>{2, {0, 1}}, {3, {1, 4}}}) {
    HyperCurve C = mk == 2 ? desk_g2() : desk_g3();
    CoverModel M(C, S);
    int g = C.genus();
    CHECK(M.genus() == 2 * g - 1);
    CHECK(C.rr_dim(C.canonical_divisor()) == g);
    DivisorX KT = C.canonical_divisor() + M.twist_divisor();
    CHECK(C.rr_dim(KT) == g - 1);
    CHECK(M.genus() == g + (g - 1));
  }
}
