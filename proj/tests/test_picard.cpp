#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitchin/picard.hpp"

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

PicClass random_class(const HyperCurve& C, const std::vector<PointX>& pts,
                      std::mt19937_64& rng) {
  DivisorX D;
  int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i)
    D.add(pts[rng() % pts.size()], 1 - static_cast<int64_t>(rng() % 3));
  return class_of_divisor(C, D);
}

}  // namespace

TEST_CASE("single points and their inverses") {
  HyperCurve C = desk_g2();
  const FieldCtx& F = C.field();
  PointX W0 = PointX::affine(Fq::zero(F), Fq::zero(F));

  PicClass t = PicClass::trivial(C);
  CHECK(t.is_trivial());
  CHECK(t + t == t);

  PicClass w = PicClass::of_point(C, W0);
  CHECK(w.degree() == 0);
  CHECK(w.u() == Poly::x(F));
  CHECK(w + w == t);  // Weierstrass classes are 2-torsion
  CHECK(-w == w);

  // a non-Weierstrass point: P + iota(P) is trivial (it is div(x - x0))
  for (const PointX& P : C.rational_points(1)) {
    if (P.is_infinity() || P.is_weierstrass()) continue;
    PicClass a = PicClass::of_point(C, P);
    PicClass b = PicClass::of_point(C, C.involution(P));
    CHECK(a + b == t);
    CHECK(-a == b);
    CHECK(a != b);
    break;
  }
}

TEST_CASE("group axioms on random classes") {
  for (const HyperCurve& C : {desk_g2(), desk_g3()}) {
    auto pts = C.rational_points(1);
    std::mt19937_64 rng(101 + C.genus());
    PicClass t = PicClass::trivial(C);
    for (int trial = 0; trial < 60; ++trial) {
      PicClass a = random_class(C, pts, rng);
      PicClass b = random_class(C, pts, rng);
      PicClass c = random_class(C, pts, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a + (-a) == t.with_degree(0));
      CHECK(a + t.with_degree(-a.degree()) == a.with_degree(0));
      CHECK(a.times(3) == a + a + a);
      CHECK(a.times(-2) == -(a + a));
    }
  }
}

TEST_CASE("class_of_divisor kills principal divisors") {
  HyperCurve C = desk_g2();
  const FieldCtx& F = C.field();
  std::mt19937_64 rng(7);
  auto pts = C.rational_points(1);

  // div of random elements of L(m * infinity)
  DivisorX D;
  D.add(PointX::infinity(), 6);
  auto basis = C.rr_basis(D);
  REQUIRE(basis.size() >= 2);
  for (const CurveFunction& c : basis) {
    DivisorX dc = C.divisor_of_function(c);
    PicClass cls = class_of_divisor(C, dc);
    CHECK(cls.is_trivial());
  }

  // and a linear combination with y involved
  CurveFunction y{Poly::zero(F), Poly::one(F), Poly::one(F)};
  CHECK(class_of_divisor(C, C.divisor_of_function(y)).is_trivial());
}

TEST_CASE("two-torsion enumeration") {
  HyperCurve C2 = desk_g2();
  auto tt2 = enumerate_two_torsion(C2);
  CHECK(tt2.size() == 16);  // 2^{2g}, g = 2
  HyperCurve C3 = desk_g3();
  auto tt3 = enumerate_two_torsion(C3);
  CHECK(tt3.size() == 64);  // 2^{2g}, g = 3

  for (auto& [idx, T] : tt2) {
    CHECK(T.degree() == 0);
    CHECK((T + T).is_trivial());
    CHECK(static_cast<int>(idx.indices.size()) <= 2);
  }
  // all distinct
  for (size_t i = 0; i < tt2.size(); ++i)
    for (size_t j = i + 1; j < tt2.size(); ++j) {
      CHECK(tt2[i].first != tt2[j].first);
      CHECK(tt2[i].second != tt2[j].second);
    }
  // index {} is the trivial class
  CHECK(tt2.front().first.indices.empty());
  CHECK(tt2.front().second.is_trivial());
}

TEST_CASE("canonical index picks the smaller side") {
  CHECK(canonical_two_torsion_index({0, 1, 2, 3}, 5).indices == std::set<int>{4});
  CHECK(canonical_two_torsion_index({1, 2}, 5).indices == std::set<int>{1, 2});
  CHECK(canonical_two_torsion_index({}, 5).indices.empty());
}

TEST_CASE("representative returns a divisor in the class") {
  HyperCurve C = desk_g2();
  auto pts = C.rational_points(1);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    PicClass a = random_class(C, pts, rng);
    DivisorX rep = a.representative();
    CHECK(rep.degree() == a.degree());
    CHECK(class_of_divisor(C, rep) == a);
  }
}

TEST_CASE("effectivity matches brute force in low degree") {
  HyperCurve C = desk_g2();
  auto pts = C.rational_points(1);
  std::mt19937_64 rng(31);

  // degree-0: only the trivial class is effective
  for (int trial = 0; trial < 15; ++trial) {
    PicClass a = random_class(C, pts, rng).with_degree(0);
    auto r = is_effective_class(a);
    CHECK(r.effective == a.is_trivial());
    if (r.effective) CHECK(r.witness->is_zero());
  }

  // degree 1 and 2: compare against an exhaustive scan over effective
  // divisors. A degree-1 point in a rational class is itself rational; a
  // degree-2 effective divisor can also be a conjugate pair of quadratic
  // points, so the pair scan runs over the degree-2 point set.
  std::vector<PicClass> eff1, eff2;
  for (const PointX& P : pts) eff1.push_back(PicClass::of_point(C, P).with_degree(1));
  auto pts2 = C.rational_points(2);
  for (const PointX& P : pts2)
    for (const PointX& Q : pts2)
      eff2.push_back(
          (PicClass::of_point(C, P) + PicClass::of_point(C, Q)).with_degree(2));
  auto brute = [](const std::vector<PicClass>& eff, const PicClass& a) {
    for (const PicClass& e : eff)
      if (e == a) return true;
    return false;
  };
  for (int trial = 0; trial < 12; ++trial) {
    PicClass a1 = random_class(C, pts, rng).with_degree(1);
    auto r1 = is_effective_class(a1);
    CHECK(r1.effective == brute(eff1, a1));
    PicClass a2 = random_class(C, pts, rng).with_degree(2);
    auto r2 = is_effective_class(a2);
    CHECK(r2.effective == brute(eff2, a2));
    if (r2.effective) {
      CHECK(r2.witness->is_effective());
      CHECK(class_of_divisor(C, *r2.witness) == a2);
    }
  }

  // every degree >= g class is effective (Riemann-Roch)
  for (int trial = 0; trial < 8; ++trial) {
    PicClass a = random_class(C, pts, rng).with_degree(2 + static_cast<int>(rng() % 3));
    CHECK(is_effective_class(a).effective);
  }
}
