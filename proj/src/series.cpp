#include "hitchin/series.hpp"

namespace hitchin {

Series series_from_poly(const Poly& q, int prec) {
  Series s(prec, Fq::zero(q.ctx()));
  for (int i = 0; i < prec && i <= q.degree(); ++i) s[i] = q.coeff(i);
  return s;
}

static Fq at(const Series& a, int i, const FieldCtx& F) {
  return i < static_cast<int>(a.size()) ? a[i] : Fq::zero(F);
}

Series series_add(const Series& a, const Series& b, const FieldCtx& F, int prec) {
  Series r(prec, Fq::zero(F));
  for (int i = 0; i < prec; ++i) r[i] = at(a, i, F) + at(b, i, F);
  return r;
}

Series series_mul(const Series& a, const Series& b, const FieldCtx& F, int prec) {
  Series r(prec, Fq::zero(F));
  for (int i = 0; i < prec; ++i)
    for (int j = 0; j + i < prec; ++j) r[i + j] = r[i + j] + at(a, i, F) * at(b, j, F);
  return r;
}

Series series_inv(const Series& a, const FieldCtx& F, int prec) {
  if (a.empty() || a[0].is_zero()) throw Error("series inverse needs nonzero constant term");
  Series r(prec, Fq::zero(F));
  Fq inv0 = a[0].inv();
  r[0] = inv0;
  for (int n = 1; n < prec; ++n) {
    Fq acc = Fq::zero(F);
    for (int i = 1; i <= n; ++i) acc = acc + at(a, i, F) * r[n - i];
    r[n] = -acc * inv0;
  }
  return r;
}

Series series_sqrt(const Series& a, const Fq& y0, int prec) {
  const FieldCtx& F = y0.ctx();
  if (y0.is_zero() || !(y0 * y0 == at(a, 0, F)))
    throw Error("series sqrt needs y0^2 == a[0], y0 != 0");
  Series y(prec, Fq::zero(F));
  y[0] = y0;
  Fq half_inv = (y0 + y0).inv();  // 1/(2 y0), char is odd
  for (int n = 1; n < prec; ++n) {
    // a_n = sum_{i=0..n} y_i y_{n-i}  =>  2 y0 y_n = a_n - sum_{i=1..n-1}
    Fq acc = at(a, n, F);
    for (int i = 1; i < n; ++i) acc = acc - y[i] * y[n - i];
    y[n] = acc * half_inv;
  }
  return y;
}

int series_order(const Series& a, int prec) {
  for (int i = 0; i < prec && i < static_cast<int>(a.size()); ++i)
    if (!a[i].is_zero()) return i;
  return prec;
}

}  // namespace hitchin
