#ifndef HITCHIN_FIELD_HPP
#define HITCHIN_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/errors.hpp"

namespace hitchin {

/// Context for F_{p^k}, p an odd prime >= 5, k >= 1. Contexts are canonical
/// and immortal: FieldCtx::get(p, k) always returns the same instance, so
/// elements may compare their contexts by pointer. The modulus is the
/// lexicographically smallest monic irreducible of degree k over F_p
/// (coefficients ordered low to high), fixed per (p, k) across runs.
class FieldCtx {
 public:
  static const FieldCtx& get(int64_t p, int k);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  int64_t order() const { return q_; }  // p^k
  const std::vector<int64_t>& modulus() const { return mod_; }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx(int64_t p, int k);

  int64_t p_;
  int k_;
  int64_t q_;
  std::vector<int64_t> mod_;  // length k+1, monic
};

/// Element of F_{p^k}, stored as a coordinate vector in the power basis of
/// the fixed modulus. Immutable value semantics; all coordinates reduced
/// mod p.
class Fq {
 public:
  Fq() : F_(nullptr) {}
  Fq(const FieldCtx& F, int64_t n);           // image of the integer n
  Fq(const FieldCtx& F, std::vector<int64_t> coords);

  static Fq zero(const FieldCtx& F) { return Fq(F, 0); }
  static Fq one(const FieldCtx& F) { return Fq(F, 1); }

  const FieldCtx& ctx() const;
  bool is_zero() const;
  bool is_one() const;
  const std::vector<int64_t>& coords() const { return c_; }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator-() const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq inv() const;
  Fq pow(int64_t e) const;     // e may be negative for nonzero elements
  Fq frobenius() const;        // x -> x^p

  /// True iff the element lies in the subfield F_{p^j} (requires j | k).
  bool in_subfield(int j) const;

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }
  /// Lexicographic order on coordinate vectors; total within one context.
  std::strong_ordering operator<=>(const Fq& o) const;

  /// Index in [0, q): base-p digits of the coordinate vector.
  int64_t index() const;
  static Fq from_index(const FieldCtx& F, int64_t idx);

  std::string str() const;

 private:
  const FieldCtx* F_;
  std::vector<int64_t> c_;  // length k
};

/// Square roots in F_q: {r, -r} if a is a nonzero square, {0} for 0,
/// nullopt for non-squares. The first component is the smaller root.
std::optional<std::pair<Fq, Fq>> sqrt_fq(const Fq& a);

}  // namespace hitchin

#endif
