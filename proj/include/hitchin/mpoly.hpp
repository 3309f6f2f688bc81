#ifndef HITCHIN_MPOLY_HPP
#define HITCHIN_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace hitchin {

/// Multivariate polynomial with integer coefficients in the four fixed
/// indeterminates a, b, s, alpha — just enough to state the matrix
/// identities of the Higgs field symbolically and exactly.
class MPoly {
 public:
  static constexpr int kVars = 4;  // a, b, s, alpha
  using Expo = std::array<int, kVars>;

  MPoly() = default;
  static MPoly constant(int64_t c);
  static MPoly var(int i, int exp = 1);

  static MPoly a() { return var(0); }
  static MPoly b() { return var(1); }
  static MPoly s() { return var(2); }
  static MPoly alpha() { return var(3); }

  bool is_zero() const { return terms_.empty(); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(int64_t c) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Substitute the integer value v for variable i.
  MPoly substitute(int i, int64_t v) const;

  std::string str() const;

 private:
  void add_term(const Expo& e, int64_t c);
  std::map<Expo, int64_t> terms_;  // exponent vector -> nonzero coefficient
};

}  // namespace hitchin

#endif
