#ifndef HITCHIN_POLY_HPP
#define HITCHIN_POLY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/field.hpp"

namespace hitchin {

/// Dense univariate polynomial over F_q. Coefficients low to high with no
/// stored trailing zeros; the zero polynomial has an empty coefficient
/// vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldCtx& F) : F_(&F) {}
  Poly(const FieldCtx& F, std::vector<Fq> coeffs);
  /// Convenience for small integer coefficient lists (low to high).
  static Poly from_ints(const FieldCtx& F, const std::vector<int64_t>& coeffs);
  static Poly zero(const FieldCtx& F) { return Poly(F); }
  static Poly one(const FieldCtx& F) { return from_ints(F, {1}); }
  static Poly x(const FieldCtx& F) { return from_ints(F, {0, 1}); }
  static Poly constant(const Fq& c);
  /// x - r
  static Poly linear_root(const Fq& r);

  const FieldCtx& ctx() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Fq>& coeffs() const { return c_; }
  Fq coeff(int i) const;
  Fq lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Fq& c) const;
  /// Euclidean division; second component is the remainder.
  std::pair<Poly, Poly> divrem(const Poly& o) const;
  Poly operator/(const Poly& o) const { return divrem(o).first; }
  Poly operator%(const Poly& o) const { return divrem(o).second; }

  Poly monic() const;
  Poly derivative() const;
  Fq eval(const Fq& x) const;
  Poly pow(int64_t e) const;
  /// q(x + a), exact shift of the argument.
  Poly shift(const Fq& a) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order: by degree, then coefficient vectors high to low.
  std::strong_ordering operator<=>(const Poly& o) const;

  std::string str() const;

 private:
  void normalize();
  const FieldCtx* F_ = nullptr;
  std::vector<Fq> c_;
};

/// Monic gcd. Errors with BothZero if both inputs vanish.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Bound on the field orders an exhaustive root scan will walk.
inline constexpr int64_t kRootSearchBound = 1000000;

/// All roots of q in F_{p^j}, with multiplicity, found by exhaustive scan.
/// The returned roots live in the canonical context FieldCtx::get(p, j);
/// coefficients of q are carried over via the canonical embedding when the
/// contexts differ (requires deg(ctx) | j).
std::multiset<Fq> poly_roots(const Poly& q, int j);

/// Roots of q inside the subfield F_{p^j} of q's own context (j | k), with
/// multiplicity, as elements of that context.
std::multiset<Fq> poly_roots_in_ctx(const Poly& q, int j);

}  // namespace hitchin

#endif
