#ifndef HITCHIN_SERIES_HPP
#define HITCHIN_SERIES_HPP

#include <vector>

#include "hitchin/field.hpp"
#include "hitchin/poly.hpp"

namespace hitchin {

/// Truncated power series c_0 + c_1 t + ... + c_{prec-1} t^{prec-1}.
/// All helpers take an explicit precision; inputs shorter than prec are
/// zero-padded.
using Series = std::vector<Fq>;

Series series_from_poly(const Poly& q, int prec);
Series series_add(const Series& a, const Series& b, const FieldCtx& F, int prec);
Series series_mul(const Series& a, const Series& b, const FieldCtx& F, int prec);
/// Requires a[0] != 0.
Series series_inv(const Series& a, const FieldCtx& F, int prec);
/// Square root with prescribed constant term y0 (y0^2 = a[0], y0 != 0).
Series series_sqrt(const Series& a, const Fq& y0, int prec);
/// Index of the first nonzero coefficient, or prec if none.
int series_order(const Series& a, int prec);

}  // namespace hitchin

#endif
