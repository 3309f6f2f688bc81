#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitchin/field.hpp"
#include "hitchin/poly.hpp"

using namespace hitchin;

TEST_CASE("prime field basics") {
  const FieldCtx& F = FieldCtx::get(11, 1);
  Fq a(F, 7), b(F, 8);
  CHECK((a + b) == Fq(F, 4));
  CHECK((a * b) == Fq(F, 1));  // 56 = 55 + 1
  CHECK((a - b) == Fq(F, 10));
  CHECK(a.inv() * a == Fq::one(F));
  CHECK((-a) == Fq(F, 4));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(17);
  for (auto [p, k] : {std::pair<int64_t, int>{11, 1}, {11, 2}, {13, 3}, {11, 4}}) {
    const FieldCtx& F = FieldCtx::get(p, k);
    for (int trial = 0; trial < 200; ++trial) {
      Fq a = Fq::from_index(F, static_cast<int64_t>(rng() % F.order()));
      Fq b = Fq::from_index(F, static_cast<int64_t>(rng() % F.order()));
      Fq c = Fq::from_index(F, static_cast<int64_t>(rng() % F.order()));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == Fq::one(F));
    }
  }
}

TEST_CASE("frobenius and subfields") {
  const FieldCtx& F = FieldCtx::get(11, 4);
  Fq g = Fq::from_index(F, 11);  // the power-basis generator
  CHECK(!g.in_subfield(1));
  CHECK(g.pow(F.order() - 1).is_one());
  // Frobenius fixes exactly the prime field elements among {0..10}
  for (int64_t n = 0; n < 11; ++n) CHECK(Fq(F, n).frobenius() == Fq(F, n));
}

TEST_CASE("sqrt_fq") {
  const FieldCtx& F = FieldCtx::get(11, 1);
  auto z = sqrt_fq(Fq::zero(F));
  REQUIRE(z.has_value());
  CHECK(z->first.is_zero());

  auto r4 = sqrt_fq(Fq(F, 4));
  REQUIRE(r4.has_value());
  CHECK(r4->first == Fq(F, 2));
  CHECK(r4->second == Fq(F, 9));

  CHECK(!sqrt_fq(Fq(F, 2)).has_value());  // 2 is a non-residue mod 11

  // r^2 = a for every square in F_121
  const FieldCtx& F2 = FieldCtx::get(11, 2);
  for (int64_t i = 0; i < F2.order(); ++i) {
    Fq a = Fq::from_index(F2, i);
    auto r = sqrt_fq(a);
    if (r) CHECK(r->first * r->first == a);
  }
}

TEST_CASE("poly arithmetic and gcd") {
  const FieldCtx& F = FieldCtx::get(11, 1);
  Poly f = Poly::from_ints(F, {-1, 0, 1});  // x^2 - 1
  Poly g = Poly::from_ints(F, {-1, 1});     // x - 1
  CHECK(poly_gcd(f, g) == g);
  CHECK(poly_gcd(f, Poly::zero(F)) == f.monic());
  CHECK_THROWS_AS(poly_gcd(Poly::zero(F), Poly::zero(F)), BothZero);

  // f = x(x-1)(x-2)(x-3)(x-4) is squarefree
  Poly q = Poly::x(F);
  for (int64_t r = 1; r <= 4; ++r) q = q * Poly::linear_root(Fq(F, r));
  CHECK(poly_gcd(q, q.derivative()).degree() == 0);

  auto [quo, rem] = (f * g + Poly::one(F)).divrem(g);
  CHECK(quo == f);
  CHECK(rem == Poly::one(F));
}

TEST_CASE("poly_roots exhaustive") {
  const FieldCtx& F = FieldCtx::get(11, 1);
  auto r = poly_roots(Poly::from_ints(F, {-1, 0, 1}), 1);  // x^2 - 1
  REQUIRE(r.size() == 2);
  CHECK(r.count(Fq(F, 1)) == 1);
  CHECK(r.count(Fq(F, 10)) == 1);

  auto rz = poly_roots(Poly::x(F), 1);
  REQUIRE(rz.size() == 1);
  CHECK(rz.begin()->is_zero());

  // x^2 - 2 has no roots in F_11 but two in F_121
  Poly q = Poly::from_ints(F, {-2, 0, 1});
  CHECK(poly_roots(q, 1).empty());
  auto r2 = poly_roots(q, 2);
  REQUIRE(r2.size() == 2);
  const FieldCtx& F2 = FieldCtx::get(11, 2);
  for (const Fq& root : r2) CHECK(root * root == Fq(F2, 2));

  // multiplicity
  Poly sq = Poly::linear_root(Fq(F, 3)).pow(3) * Poly::linear_root(Fq(F, 5));
  auto rm = poly_roots(sq, 1);
  CHECK(rm.count(Fq(F, 3)) == 3);
  CHECK(rm.count(Fq(F, 5)) == 1);

  CHECK_THROWS_AS(poly_roots(Poly::zero(F), 1), ZeroPolynomial);
}

TEST_CASE("roots within ambient subfields") {
  const FieldCtx& F = FieldCtx::get(11, 4);
  // x^2 - 2 splits in the degree-2 subfield of F_{11^4}
  Poly q = Poly::from_ints(F, {-2, 0, 1});
  auto r = poly_roots_in_ctx(q, 2);
  REQUIRE(r.size() == 2);
  for (const Fq& root : r) {
    CHECK(root * root == Fq(F, 2));
    CHECK(root.in_subfield(2));
    CHECK(!root.in_subfield(1));
  }
  CHECK(poly_roots_in_ctx(q, 1).empty());
}
