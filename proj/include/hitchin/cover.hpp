#ifndef HITCHIN_COVER_HPP
#define HITCHIN_COVER_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "hitchin/picard.hpp"

namespace hitchin {

class CoverModel;

/// Point of the unramified double cover: a base point plus a sheet label.
/// Where h does not vanish the sheets carry the two square roots of h(x0)
/// (sheet 0 the smaller root); over zeros of h and over infinity the labels
/// are abstract but fixed per model, and only sheet-swapping by sigma and
/// distinctness carry meaning there.
struct CoverPoint {
  PointX base;
  int sheet;  // 0 or 1
  std::optional<Fq> sheet_value;

  bool operator==(const CoverPoint& o) const {
    return base == o.base && sheet == o.sheet;
  }
  bool operator!=(const CoverPoint& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const CoverPoint& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    return sheet <=> o.sheet;
  }

  std::string str() const;
};

/// Formal Z-linear combination of cover points.
class CoverDivisor {
 public:
  CoverDivisor() = default;

  void add(const CoverPoint& Q, int64_t mult);
  int64_t coeff(const CoverPoint& Q) const;
  int64_t degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;
  const std::map<CoverPoint, int64_t>& coeffs() const { return coeffs_; }

  CoverDivisor operator+(const CoverDivisor& o) const;
  CoverDivisor operator*(int64_t n) const;
  bool operator==(const CoverDivisor& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;

 private:
  std::map<CoverPoint, int64_t> coeffs_;
};

/// The double cover of y^2 = f(x) cut out by t^2 = h(x), h the monic
/// product of (x - e_i) over a nonempty even subset S of the Weierstrass
/// roots. The subset determines a nontrivial 2-torsion class and the cover
/// is unramified of genus 2g - 1.
class CoverModel {
 public:
  CoverModel(const HyperCurve& C, std::set<int> S);

  const HyperCurve& curve() const { return *C_; }
  const std::set<int>& subset() const { return S_; }
  const Poly& h() const { return h_; }
  /// The 2-torsion class of sum_{i in S} W_i - |S| * infinity.
  const PicClass& torsion_class() const { return T_; }
  /// sum_{i in S} W_i - |S| * infinity as a divisor on the base curve.
  const DivisorX& twist_divisor() const { return DT_; }

  int genus() const { return 2 * C_->genus() - 1; }

  /// The two points over P, sigma-swapped, in sheet order (0 then 1).
  std::pair<CoverPoint, CoverPoint> points_above(const PointX& P) const;

  CoverPoint sigma(const CoverPoint& Q) const;
  CoverDivisor sigma_star(const CoverDivisor& R) const;

  /// Pushforward sum a_i p(x_i).
  DivisorX norm_divisor(const CoverDivisor& R) const;
  /// Each point replaced by both preimages; degree doubles.
  CoverDivisor pullback_divisor(const DivisorX& D) const;

  /// supp(R) and supp(sigma* R) share no point. Requires R effective.
  bool disjoint_from_involute(const CoverDivisor& R) const;

  /// Cached basis of L((2g-2)inf), the sections of K; dimension g.
  const std::vector<CurveFunction>& a_sections() const { return asec_; }
  /// Cached basis of L((2g-2)inf + D_T), the sections of KT; dimension g-1.
  const std::vector<CurveFunction>& b_sections() const { return bsec_; }

 private:
  const HyperCurve* C_;
  std::set<int> S_;
  Poly h_;
  PicClass T_;
  DivisorX DT_;
  std::vector<CurveFunction> asec_, bsec_;
};

}  // namespace hitchin

#endif
