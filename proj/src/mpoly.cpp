#include "hitchin/mpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hitchin {

void MPoly::add_term(const Expo& e, int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

MPoly MPoly::constant(int64_t c) {
  MPoly r;
  r.add_term({0, 0, 0, 0}, c);
  return r;
}

MPoly MPoly::var(int i, int exp) {
  if (i < 0 || i >= kVars) throw std::out_of_range("MPoly variable index");
  MPoly r;
  Expo e{0, 0, 0, 0};
  e[i] = exp;
  r.add_term(e, 1);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      Expo e;
      for (int i = 0; i < kVars; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::operator*(int64_t c) const {
  MPoly r;
  for (auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

MPoly MPoly::substitute(int i, int64_t v) const {
  MPoly r;
  for (auto& [e, c] : terms_) {
    int64_t scale = 1;
    for (int j = 0; j < e[i]; ++j) scale *= v;
    Expo e2 = e;
    e2[i] = 0;
    r.add_term(e2, c * scale);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[kVars] = {"a", "b", "s", "alpha"};
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < kVars; ++i)
      if (e[i] > 0) {
        os << "*" << names[i];
        if (e[i] > 1) os << "^" << e[i];
      }
  }
  return os.str();
}

}  // namespace hitchin
