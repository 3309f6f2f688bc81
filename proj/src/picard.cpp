#include "hitchin/picard.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hitchin {

namespace {

// Extended gcd: returns monic g with s*a + t*b = g.
struct XGcd {
  Poly g, s, t;
};

XGcd poly_xgcd(const Poly& a, const Poly& b) {
  const FieldCtx& F = a.ctx();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(F), s1 = Poly::zero(F);
  Poly t0 = Poly::zero(F), t1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) throw BothZero("xgcd(0, 0)");
  Fq li = r0.lead().inv();
  return XGcd{r0 * li, s0 * li, t0 * li};
}

struct Mumford {
  Poly u, v;  // u monic, deg v < deg u, u | v^2 - f
};

Mumford mumford_identity(const FieldCtx& F) { return {Poly::one(F), Poly::zero(F)}; }

// Cantor composition followed by reduction to deg u <= g.
Mumford cantor_add(const HyperCurve& C, const Mumford& A, const Mumford& B) {
  const FieldCtx& F = C.field();
  const Poly& f = C.f();

  auto [d0, e1, e2] = poly_xgcd(A.u, B.u);
  Poly vsum = A.v + B.v;
  Poly d, c12, c3;
  if (vsum.is_zero()) {
    d = d0;
    c12 = Poly::one(F);
    c3 = Poly::zero(F);
  } else {
    auto x = poly_xgcd(d0, vsum);
    d = x.g;
    c12 = x.s;
    c3 = x.t;
  }
  Poly c1 = c12 * e1, c2 = c12 * e2;

  auto exact_div = [](const Poly& num, const Poly& den) {
    auto [q, r] = num.divrem(den);
    if (!r.is_zero()) throw Error("inexact division in Cantor composition");
    return q;
  };

  Poly u = exact_div(A.u * B.u, d * d);
  Poly v = exact_div(c1 * A.u * B.v + c2 * B.u * A.v + c3 * (A.v * B.v + f), d) % u;
  u = u.monic();

  // reduction
  while (u.degree() > C.genus()) {
    Poly u2 = exact_div(f - v * v, u).monic();
    Poly v2 = (-v) % u2;
    u = u2;
    v = v2;
  }
  return {u, v % u};
}

Mumford mumford_neg(const Mumford& A) { return {A.u, (-A.v) % A.u}; }

Mumford mumford_of_point(const HyperCurve& C, const PointX& P) {
  C.require_on_curve(P);
  if (P.is_infinity()) return mumford_identity(C.field());
  return {Poly::linear_root(P.x()), Poly::constant(P.y())};
}

}  // namespace

PicClass::PicClass(const HyperCurve& C, int64_t n, Poly u, Poly v)
    : C_(&C), n_(n), u_(std::move(u)), v_(std::move(v)) {
  if (u_.is_zero() || !u_.lead().is_one()) throw Error("Mumford u must be monic");
  if (u_.degree() > C.genus()) throw Error("Mumford u not reduced");
  if (!v_.is_zero() && v_.degree() >= u_.degree()) throw Error("Mumford v not reduced");
  Poly r = (v_ * v_ - C.f()) % u_;
  if (!r.is_zero()) throw Error("u does not divide v^2 - f");
}

PicClass PicClass::trivial(const HyperCurve& C, int64_t degree) {
  return PicClass(C, degree, Poly::one(C.field()), Poly::zero(C.field()));
}

PicClass PicClass::of_point(const HyperCurve& C, const PointX& P) {
  Mumford m = mumford_of_point(C, P);
  return PicClass(C, 0, m.u, m.v);
}

PicClass PicClass::operator+(const PicClass& o) const { return pic_add(*this, o); }

PicClass PicClass::operator-() const {
  Mumford m = mumford_neg({u_, v_});
  return PicClass(*C_, -n_, m.u, m.v);
}

PicClass PicClass::times(int64_t m) const {
  if (m < 0) return (-*this).times(-m);
  PicClass acc = trivial(*C_), base = *this;
  while (m > 0) {
    if (m & 1) acc = acc + base;
    base = base + base;
    m >>= 1;
  }
  return acc;
}

PicClass PicClass::with_degree(int64_t n) const { return PicClass(*C_, n, u_, v_); }

bool PicClass::operator==(const PicClass& o) const {
  if (C_ != o.C_) throw CurveMismatch("classes on different curves");
  return n_ == o.n_ && u_ == o.u_ && v_ == o.v_;
}

std::strong_ordering PicClass::operator<=>(const PicClass& o) const {
  if (C_ != o.C_) throw CurveMismatch("classes on different curves");
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = u_ <=> o.u_; c != 0) return c;
  return v_ <=> o.v_;
}

DivisorX PicClass::representative() const {
  const FieldCtx& F = C_->field();
  DivisorX D;
  if (u_.degree() > 0) {
    auto roots = poly_roots_in_ctx(u_, F.k());
    if (static_cast<int>(roots.size()) != u_.degree())
      throw SearchBoundExceeded("Mumford u does not split over the ambient field");
    for (const Fq& x0 : roots) D.add(PointX::affine(x0, v_.eval(x0)), 1);
  }
  D.add(PointX::infinity(), n_ - u_.degree());
  return D;
}

std::string PicClass::str() const {
  std::ostringstream os;
  os << "[deg " << n_ << ", u = " << u_.str() << ", v = " << v_.str() << "]";
  return os.str();
}

PicClass class_of_divisor(const HyperCurve& C, const DivisorX& D) {
  Mumford acc = mumford_identity(C.field());
  for (auto& [P, m] : D.coeffs()) {
    if (P.is_infinity()) continue;
    C.require_on_curve(P);
    Mumford mp = mumford_of_point(C, P);
    if (m < 0) mp = mumford_neg(mp);
    for (int64_t i = 0; i < std::abs(m); ++i) acc = cantor_add(C, acc, mp);
  }
  return PicClass(C, D.degree(), acc.u, acc.v);
}

PicClass pic_add(const PicClass& a, const PicClass& b) {
  if (&a.curve() != &b.curve()) throw CurveMismatch("classes on different curves");
  Mumford m = cantor_add(a.curve(), {a.u(), a.v()}, {b.u(), b.v()});
  return PicClass(a.curve(), a.degree() + b.degree(), m.u, m.v);
}

TwoTorsionIndex canonical_two_torsion_index(std::set<int> S, int num_weierstrass) {
  std::set<int> comp;
  for (int i = 0; i < num_weierstrass; ++i)
    if (!S.count(i)) comp.insert(i);
  if (comp.size() < S.size()) return {comp};
  if (S.size() < comp.size()) return {S};
  return {std::min(S, comp)};
}

std::vector<std::pair<TwoTorsionIndex, PicClass>> enumerate_two_torsion(const HyperCurve& C) {
  auto ws = C.weierstrass_points();
  int n = 2 * C.genus() + 1;
  if (static_cast<int>(ws.size()) != n)
    throw RootsNotRational("f does not split over the ambient field");
  for (const PointX& W : ws)
    if (!W.x().in_subfield(1))
      throw RootsNotRational("Weierstrass point " + W.str() + " is not rational");

  std::vector<std::pair<TwoTorsionIndex, PicClass>> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::set<int> S;
    DivisorX D;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        S.insert(i);
        D.add(ws[i], 1);
        D.add(PointX::infinity(), -1);
      }
    }
    out.emplace_back(canonical_two_torsion_index(S, n), class_of_divisor(C, D));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

EffectivityResult is_effective_class(const PicClass& c) {
  DivisorX rep = c.representative();
  auto basis = c.curve().rr_basis(rep);
  if (basis.empty()) return {false, std::nullopt};
  DivisorX witness = c.curve().divisor_of_function(basis.front()) + rep;
  if (!witness.is_effective()) throw Error("effectivity witness not effective (internal)");
  return {true, witness};
}

}  // namespace hitchin
