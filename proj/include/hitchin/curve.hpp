#ifndef HITCHIN_CURVE_HPP
#define HITCHIN_CURVE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hitchin/poly.hpp"

namespace hitchin {

class HyperCurve;

/// Point of the odd-degree hyperelliptic model y^2 = f(x): either affine
/// or the single point at infinity.
class PointX {
 public:
  static PointX infinity() { return PointX(); }
  static PointX affine(Fq x, Fq y) { return PointX(std::move(x), std::move(y)); }

  bool is_infinity() const { return inf_; }
  const Fq& x() const;
  const Fq& y() const;
  bool is_weierstrass() const { return !inf_ && y_.is_zero(); }

  bool operator==(const PointX& o) const;
  bool operator!=(const PointX& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const PointX& o) const;

  std::string str() const;

 private:
  PointX() : inf_(true) {}
  PointX(Fq x, Fq y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}
  bool inf_;
  Fq x_, y_;
};

/// Formal Z-linear combination of points; only nonzero coefficients stored.
class DivisorX {
 public:
  DivisorX() = default;

  void add(const PointX& P, int64_t mult);
  int64_t coeff(const PointX& P) const;
  int64_t degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;
  /// All coefficients in {0, 1}.
  bool is_reduced() const;
  const std::map<PointX, int64_t>& coeffs() const { return coeffs_; }
  std::vector<PointX> support() const;

  DivisorX operator+(const DivisorX& o) const;
  DivisorX operator-(const DivisorX& o) const;
  DivisorX operator*(int64_t n) const;
  bool operator==(const DivisorX& o) const { return coeffs_ == o.coeffs_; }
  /// Pointwise <=, i.e. o - *this is effective.
  bool leq(const DivisorX& o) const;

  std::string str() const;

 private:
  std::map<PointX, int64_t> coeffs_;
};

/// Element (u(x) + v(x) y) / den(x) of the function field.
struct CurveFunction {
  Poly u, v, den;

  static CurveFunction from_poly(const Poly& u);
  bool is_zero() const { return u.is_zero() && v.is_zero(); }

  CurveFunction operator+(const CurveFunction& o) const;
  CurveFunction operator-(const CurveFunction& o) const;
  CurveFunction scaled(const Fq& c) const;
  /// Product on the curve y^2 = f; needs the curve for the y^2 reduction.
  CurveFunction mul(const CurveFunction& o, const HyperCurve& C) const;

  std::string str() const;
};

/// y^2 = f(x), deg f = 2g+1 odd, f squarefree, genus g >= 2. All point
/// coordinates live in the ambient field of the defining context, which
/// should be an extension F_{p^k} large enough for the divisor supports in
/// play (configurable, default k = 4 at desk scale).
class HyperCurve {
 public:
  HyperCurve(const FieldCtx& F, Poly f, int genus);

  const FieldCtx& field() const { return *F_; }
  const Poly& f() const { return f_; }
  int genus() const { return g_; }

  bool on_curve(const PointX& P) const;
  void require_on_curve(const PointX& P) const;

  /// iota: (x, y) -> (x, -y), fixing infinity.
  PointX involution(const PointX& P) const;

  /// Weierstrass points (e_i, 0), e_i the roots of f in the ambient field,
  /// sorted. At most 2g+1; fewer if f does not split over the ambient field.
  std::vector<PointX> weierstrass_points() const;

  /// All points rational over F_{p^j} (j | k), including infinity.
  std::vector<PointX> rational_points(int j) const;

  /// (2g-2) * infinity.
  DivisorX canonical_divisor() const;

  /// Exact local order ord_P(c) of a nonzero function at a point.
  int64_t local_order(const CurveFunction& c, const PointX& P) const;

  /// Degree-0 divisor of zeros minus poles. Fails with SearchBoundExceeded
  /// when a zero or pole lies outside the ambient field.
  DivisorX divisor_of_function(const CurveFunction& c) const;

  /// Basis of L(D) = {c : div(c) + D >= 0} by exact linear algebra.
  std::vector<CurveFunction> rr_basis(const DivisorX& D) const;
  int rr_dim(const DivisorX& D) const;

  Fq eval_function(const CurveFunction& c, const PointX& P) const;

 private:
  const FieldCtx* F_;
  Poly f_;
  int g_;
};

/// Validates and constructs; errors: BadCharacteristic, EvenDegree,
/// NotSquarefree, GenusTooSmall, GenusMismatch.
HyperCurve validate_curve(const FieldCtx& F, const Poly& f, int genus);

}  // namespace hitchin

#endif
