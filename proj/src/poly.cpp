#include "hitchin/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hitchin {

Poly::Poly(const FieldCtx& F, std::vector<Fq> coeffs) : F_(&F), c_(std::move(coeffs)) {
  normalize();
}

Poly Poly::from_ints(const FieldCtx& F, const std::vector<int64_t>& coeffs) {
  std::vector<Fq> c;
  c.reserve(coeffs.size());
  for (auto n : coeffs) c.emplace_back(F, n);
  return Poly(F, std::move(c));
}

Poly Poly::constant(const Fq& c) { return Poly(c.ctx(), {c}); }

Poly Poly::linear_root(const Fq& r) { return Poly(r.ctx(), {-r, Fq::one(r.ctx())}); }

const FieldCtx& Poly::ctx() const {
  if (!F_) throw Error("uninitialized polynomial");
  return *F_;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fq Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Fq::zero(ctx());
  return c_[i];
}

Fq Poly::lead() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return c_.back();
}

static void check_same(const Poly& a, const Poly& b) {
  if (&a.ctx() != &b.ctx()) throw FieldMismatch("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same(*this, o);
  std::vector<Fq> r(std::max(c_.size(), o.c_.size()), Fq::zero(*F_));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(*F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Fq> r(c_.size(), Fq::zero(ctx()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Poly(*F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return Poly(*F_);
  std::vector<Fq> r(c_.size() + o.c_.size() - 1, Fq::zero(*F_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return Poly(*F_, std::move(r));
}

Poly Poly::operator*(const Fq& s) const {
  std::vector<Fq> r(c_.size(), Fq::zero(ctx()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return Poly(*F_, std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& o) const {
  check_same(*this, o);
  if (o.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  Poly q(*F_), r = *this;
  Fq li = o.lead().inv();
  std::vector<Fq> qc(std::max(0, degree() - o.degree() + 1), Fq::zero(*F_));
  while (r.degree() >= o.degree()) {
    int d = r.degree() - o.degree();
    Fq c = r.lead() * li;
    qc[d] = c;
    std::vector<Fq> sub(d, Fq::zero(*F_));
    sub.push_back(c);
    r = r - o * Poly(*F_, std::move(sub));
  }
  return {Poly(*F_, std::move(qc)), r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(ctx());
  std::vector<Fq> r(c_.size() - 1, Fq::zero(*F_));
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Fq(*F_, static_cast<int64_t>(i));
  return Poly(*F_, std::move(r));
}

Fq Poly::eval(const Fq& x) const {
  Fq r = Fq::zero(ctx());
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

Poly Poly::pow(int64_t e) const {
  Poly r = Poly::one(ctx()), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::shift(const Fq& a) const {
  // Horner on q(x) with x replaced by (t + a).
  Poly r(ctx());
  Poly lin = Poly(ctx(), {a, Fq::one(ctx())});
  for (int i = degree(); i >= 0; --i) r = r * lin + Poly::constant(c_[i]);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same(*this, o);
  return c_ == o.c_;
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  check_same(*this, o);
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (int i = degree(); i >= 0; --i)
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) os << c_[i].str();
    if (i >= 1) {
      if (!c_[i].is_one()) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0)");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

std::multiset<Fq> poly_roots_in_ctx(const Poly& q, int j) {
  if (q.is_zero()) throw ZeroPolynomial("root search on zero polynomial");
  const FieldCtx& F = q.ctx();
  if (F.k() % j != 0) throw Error("subfield degree must divide ambient degree");
  if (F.order() > kRootSearchBound)
    throw SearchBoundExceeded("field order " + std::to_string(F.order()) +
                              " above exhaustive search bound");
  std::multiset<Fq> roots;
  Poly rem = q;
  for (int64_t i = 0; i < F.order(); ++i) {
    Fq x = Fq::from_index(F, i);
    if (!x.in_subfield(j)) continue;
    if (!q.eval(x).is_zero()) continue;
    Poly lin = Poly::linear_root(x);
    while (true) {
      auto [quo, r] = rem.divrem(lin);
      if (!r.is_zero()) break;
      roots.insert(x);
      rem = quo;
    }
  }
  return roots;
}

std::multiset<Fq> poly_roots(const Poly& q, int j) {
  if (q.is_zero()) throw ZeroPolynomial("root search on zero polynomial");
  const FieldCtx& Fsrc = q.ctx();
  if (Fsrc.k() == j) return poly_roots_in_ctx(q, j);
  const FieldCtx& Ftgt = FieldCtx::get(Fsrc.p(), j);
  if (Ftgt.order() > kRootSearchBound)
    throw SearchBoundExceeded("field order above exhaustive search bound");
  // Carry coefficients across: prime-field coefficients map directly, and
  // otherwise the source power basis embeds via the smallest root of the
  // source modulus in the target field (requires k | j).
  std::vector<Fq> basis_pow;  // powers of the embedded generator
  bool need_embed = false;
  for (const Fq& c : q.coeffs())
    if (!c.in_subfield(1)) need_embed = true;
  Fq gen = Fq::zero(Ftgt);
  if (need_embed) {
    if (j % Fsrc.k() != 0)
      throw Error("no canonical embedding between the given fields");
    Poly m = Poly::from_ints(Ftgt, Fsrc.modulus());
    auto roots = poly_roots_in_ctx(m, j);
    if (roots.empty()) throw Error("modulus has no root in target field");
    gen = *roots.begin();
  }
  basis_pow.push_back(Fq::one(Ftgt));
  for (int i = 1; i < Fsrc.k(); ++i) basis_pow.push_back(basis_pow.back() * gen);
  std::vector<Fq> mapped;
  for (const Fq& c : q.coeffs()) {
    Fq v = Fq::zero(Ftgt);
    for (int i = 0; i < Fsrc.k(); ++i)
      v = v + basis_pow[i] * Fq(Ftgt, c.coords()[i]);
    mapped.push_back(v);
  }
  return poly_roots_in_ctx(Poly(Ftgt, std::move(mapped)), j);
}

}  // namespace hitchin
