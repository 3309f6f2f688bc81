#ifndef HITCHIN_PICARD_HPP
#define HITCHIN_PICARD_HPP

#include <optional>
#include <set>
#include <vector>

#include "hitchin/curve.hpp"

namespace hitchin {

/// Divisor class on Pic(X), odd hyperelliptic model. The degree-0 part is
/// held in reduced Mumford form (u monic, deg u <= g, deg v < deg u,
/// u | v^2 - f) against the point at infinity; the total degree n rides
/// alongside. Classes are equal iff (n, u, v) agree.
class PicClass {
 public:
  PicClass(const HyperCurve& C, int64_t n, Poly u, Poly v);

  static PicClass trivial(const HyperCurve& C, int64_t degree = 0);
  /// [P - inf] shifted so the class has degree 0.
  static PicClass of_point(const HyperCurve& C, const PointX& P);

  const HyperCurve& curve() const { return *C_; }
  int64_t degree() const { return n_; }
  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  bool is_trivial() const { return n_ == 0 && u_.degree() == 0; }

  PicClass operator+(const PicClass& o) const;
  PicClass operator-() const;
  PicClass operator-(const PicClass& o) const { return *this + (-o); }
  PicClass times(int64_t m) const;
  /// Same class with the stated degree (shift by multiples of infinity).
  PicClass with_degree(int64_t n) const;

  bool operator==(const PicClass& o) const;
  bool operator!=(const PicClass& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const PicClass& o) const;

  /// Reduced representative A + (n - deg A) * infinity with A the affine
  /// divisor of the Mumford pair. Needs u to split over the ambient field.
  DivisorX representative() const;

  std::string str() const;

 private:
  const HyperCurve* C_;
  int64_t n_;
  Poly u_, v_;
};

PicClass class_of_divisor(const HyperCurve& C, const DivisorX& D);

PicClass pic_add(const PicClass& a, const PicClass& b);

/// Canonical index of a 2-torsion class: subset of Weierstrass indices,
/// stored as the smaller of S and its complement (ties impossible: the
/// model has an odd number of Weierstrass points).
struct TwoTorsionIndex {
  std::set<int> indices;
  bool operator==(const TwoTorsionIndex&) const = default;
  auto operator<=>(const TwoTorsionIndex&) const = default;
};

TwoTorsionIndex canonical_two_torsion_index(std::set<int> S, int num_weierstrass);

/// All 2^{2g} two-torsion classes. Requires every root of f to lie in the
/// prime field (RootsNotRational otherwise). Deterministic order: by the
/// canonical index.
std::vector<std::pair<TwoTorsionIndex, PicClass>> enumerate_two_torsion(const HyperCurve& C);

/// h^0 of the class; when positive, also an effective witness divisor in
/// the class.
struct EffectivityResult {
  bool effective;
  std::optional<DivisorX> witness;
};
EffectivityResult is_effective_class(const PicClass& c);

}  // namespace hitchin

#endif
