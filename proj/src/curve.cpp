#include "hitchin/curve.hpp"

#include <algorithm>
#include <sstream>

#include "hitchin/linalg.hpp"
#include "hitchin/series.hpp"

namespace hitchin {

const Fq& PointX::x() const {
  if (inf_) throw Error("coordinate of the point at infinity");
  return x_;
}

const Fq& PointX::y() const {
  if (inf_) throw Error("coordinate of the point at infinity");
  return y_;
}

bool PointX::operator==(const PointX& o) const {
  if (inf_ != o.inf_) return false;
  if (inf_) return true;
  return x_ == o.x_ && y_ == o.y_;
}

std::strong_ordering PointX::operator<=>(const PointX& o) const {
  if (inf_ != o.inf_) return inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (inf_) return std::strong_ordering::equal;
  if (auto c = x_ <=> o.x_; c != 0) return c;
  return y_ <=> o.y_;
}

std::string PointX::str() const {
  if (inf_) return "inf";
  return "(" + x_.str() + "," + y_.str() + ")";
}

void DivisorX::add(const PointX& P, int64_t mult) {
  if (mult == 0) return;
  auto it = coeffs_.find(P);
  if (it == coeffs_.end()) {
    coeffs_.emplace(P, mult);
  } else {
    it->second += mult;
    if (it->second == 0) coeffs_.erase(it);
  }
}

int64_t DivisorX::coeff(const PointX& P) const {
  auto it = coeffs_.find(P);
  return it == coeffs_.end() ? 0 : it->second;
}

int64_t DivisorX::degree() const {
  int64_t d = 0;
  for (auto& [p, m] : coeffs_) d += m;
  return d;
}

bool DivisorX::is_effective() const {
  for (auto& [p, m] : coeffs_)
    if (m < 0) return false;
  return true;
}

bool DivisorX::is_reduced() const {
  for (auto& [p, m] : coeffs_)
    if (m != 1) return false;
  return true;
}

std::vector<PointX> DivisorX::support() const {
  std::vector<PointX> s;
  s.reserve(coeffs_.size());
  for (auto& [p, m] : coeffs_) s.push_back(p);
  return s;
}

DivisorX DivisorX::operator+(const DivisorX& o) const {
  DivisorX r = *this;
  for (auto& [p, m] : o.coeffs_) r.add(p, m);
  return r;
}

DivisorX DivisorX::operator-(const DivisorX& o) const {
  DivisorX r = *this;
  for (auto& [p, m] : o.coeffs_) r.add(p, -m);
  return r;
}

DivisorX DivisorX::operator*(int64_t n) const {
  DivisorX r;
  if (n == 0) return r;
  for (auto& [p, m] : coeffs_) r.add(p, m * n);
  return r;
}

bool DivisorX::leq(const DivisorX& o) const { return (o - *this).is_effective(); }

std::string DivisorX::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, m] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << p.str();
  }
  return os.str();
}

CurveFunction CurveFunction::from_poly(const Poly& u) {
  return CurveFunction{u, Poly::zero(u.ctx()), Poly::one(u.ctx())};
}

CurveFunction CurveFunction::operator+(const CurveFunction& o) const {
  return CurveFunction{u * o.den + o.u * den, v * o.den + o.v * den, den * o.den};
}

CurveFunction CurveFunction::operator-(const CurveFunction& o) const {
  return *this + o.scaled(-Fq::one(o.den.ctx()));
}

CurveFunction CurveFunction::scaled(const Fq& c) const {
  return CurveFunction{u * c, v * c, den};
}

CurveFunction CurveFunction::mul(const CurveFunction& o, const HyperCurve& C) const {
  return CurveFunction{u * o.u + v * o.v * C.f(), u * o.v + v * o.u, den * o.den};
}

std::string CurveFunction::str() const {
  std::string s = "(" + u.str() + ")";
  if (!v.is_zero()) s += " + (" + v.str() + ")*y";
  if (den.degree() > 0 || !(den.is_zero() || den.coeff(0).is_one()))
    s = "[" + s + "] / (" + den.str() + ")";
  return s;
}

HyperCurve::HyperCurve(const FieldCtx& F, Poly f, int genus)
    : F_(&F), f_(std::move(f)), g_(genus) {}

HyperCurve validate_curve(const FieldCtx& F, const Poly& f, int genus) {
  if (F.p() < 5) throw BadCharacteristic("characteristic must be >= 5");
  int d = f.degree();
  if (d < 0) throw NotSquarefree("zero polynomial");
  if (d % 2 == 0) throw EvenDegree("deg f = " + std::to_string(d) + " is even");
  Poly fp = f.derivative();
  if (fp.is_zero()) throw NotSquarefree("f' = 0, f is a p-th power");
  if (poly_gcd(f, fp).degree() != 0) throw NotSquarefree("gcd(f, f') is non-constant");
  int g = (d - 1) / 2;
  if (g < 2) throw GenusTooSmall("genus " + std::to_string(g) + " < 2");
  if (g != genus)
    throw GenusMismatch("claimed genus " + std::to_string(genus) + ", model has genus " +
                        std::to_string(g));
  if (!f.lead().is_one()) throw Error("f must be monic");
  return HyperCurve(F, f, g);
}

bool HyperCurve::on_curve(const PointX& P) const {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == f_.eval(P.x());
}

void HyperCurve::require_on_curve(const PointX& P) const {
  if (!on_curve(P)) throw PointNotOnCurve("point " + P.str() + " not on curve");
}

PointX HyperCurve::involution(const PointX& P) const {
  require_on_curve(P);
  if (P.is_infinity()) return P;
  return PointX::affine(P.x(), -P.y());
}

std::vector<PointX> HyperCurve::weierstrass_points() const {
  auto roots = poly_roots_in_ctx(f_, F_->k());
  std::vector<PointX> w;
  for (const Fq& e : roots) w.push_back(PointX::affine(e, Fq::zero(*F_)));
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<PointX> HyperCurve::rational_points(int j) const {
  std::vector<PointX> pts;
  pts.push_back(PointX::infinity());
  for (int64_t i = 0; i < F_->order(); ++i) {
    Fq x = Fq::from_index(*F_, i);
    if (!x.in_subfield(j)) continue;
    Fq fx = f_.eval(x);
    if (fx.is_zero()) {
      pts.push_back(PointX::affine(x, fx));
      continue;
    }
    auto r = sqrt_fq(fx);
    if (!r) continue;
    if (r->first.in_subfield(j)) {
      pts.push_back(PointX::affine(x, r->first));
      pts.push_back(PointX::affine(x, r->second));
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

DivisorX HyperCurve::canonical_divisor() const {
  DivisorX K;
  K.add(PointX::infinity(), 2 * g_ - 2);
  return K;
}

namespace {

// Order of vanishing of a nonzero polynomial at x = e.
int poly_order_at(const Poly& q, const Fq& e) {
  Poly lin = Poly::linear_root(e);
  Poly r = q;
  int ord = 0;
  while (true) {
    auto [quo, rem] = r.divrem(lin);
    if (!rem.is_zero()) return ord;
    r = quo;
    ++ord;
  }
}

}  // namespace

int64_t HyperCurve::local_order(const CurveFunction& c, const PointX& P) const {
  if (c.is_zero()) throw ZeroFunction("local order of zero function");
  if (c.den.is_zero()) throw ZeroFunction("zero denominator");
  require_on_curve(P);
  const FieldCtx& F = *F_;
  const int two_g1 = 2 * g_ + 1;

  if (P.is_infinity()) {
    int64_t num = INT64_MAX;
    if (!c.u.is_zero()) num = std::min<int64_t>(num, -2 * c.u.degree());
    if (!c.v.is_zero()) num = std::min<int64_t>(num, -2 * c.v.degree() - two_g1);
    return num - (-2 * c.den.degree());
  }

  const Fq& x0 = P.x();
  int64_t den_ord;
  int64_t num_ord;
  if (P.is_weierstrass()) {
    den_ord = 2 * poly_order_at(c.den, x0);
    num_ord = INT64_MAX;
    if (!c.u.is_zero()) num_ord = std::min<int64_t>(num_ord, 2 * poly_order_at(c.u, x0));
    if (!c.v.is_zero()) num_ord = std::min<int64_t>(num_ord, 2 * poly_order_at(c.v, x0) + 1);
  } else {
    den_ord = poly_order_at(c.den, x0);
    int prec = 2 * std::max({c.u.degree(), c.v.degree(), 0}) + f_.degree() + 2;
    Series A = series_from_poly(f_.shift(x0), prec);
    Series y = series_sqrt(A, P.y(), prec);
    Series us = series_from_poly(c.u.shift(x0), prec);
    Series vs = series_from_poly(c.v.shift(x0), prec);
    Series num = series_add(us, series_mul(vs, y, F, prec), F, prec);
    num_ord = series_order(num, prec);
    if (num_ord == prec) throw Error("series precision exhausted in local order");
  }
  return num_ord - den_ord;
}

DivisorX HyperCurve::divisor_of_function(const CurveFunction& c) const {
  if (c.is_zero()) throw ZeroFunction("divisor of zero function");
  if (c.den.is_zero()) throw ZeroFunction("zero denominator");
  const FieldCtx& F = *F_;
  DivisorX D;

  // Numerator norm u^2 - v^2 f collects all finite x-coordinates of zeros.
  Poly N = c.u * c.u - c.v * c.v * f_;
  if (N.is_zero()) throw Error("norm vanished: f is not squarefree");
  auto nroots = poly_roots_in_ctx(N, F.k());
  int64_t found = 0;
  for (auto& r : nroots) ++found;
  if (found != N.degree())
    throw SearchBoundExceeded("zero of function lies outside the ambient field");

  std::vector<Fq> distinct;
  for (auto it = nroots.begin(); it != nroots.end(); it = nroots.upper_bound(*it))
    distinct.push_back(*it);
  for (const Fq& x0 : distinct) {
    int64_t mult = static_cast<int64_t>(nroots.count(x0));
    Fq fx = f_.eval(x0);
    if (fx.is_zero()) {
      PointX W = PointX::affine(x0, fx);
      CurveFunction num{c.u, c.v, Poly::one(F)};
      D.add(W, local_order(num, W));
    } else {
      auto sq = sqrt_fq(fx);
      if (!sq) throw SearchBoundExceeded("zero of function lies outside the ambient field");
      PointX P1 = PointX::affine(x0, sq->first);
      PointX P2 = PointX::affine(x0, sq->second);
      CurveFunction num{c.u, c.v, Poly::one(F)};
      int64_t o1 = local_order(num, P1);
      int64_t o2 = local_order(num, P2);
      if (o1 + o2 != mult) throw Error("local orders inconsistent with norm multiplicity");
      D.add(P1, o1);
      D.add(P2, o2);
    }
  }

  // Denominator zeros subtract; den is a polynomial in x only.
  if (c.den.degree() > 0) {
    auto droots = poly_roots_in_ctx(c.den, F.k());
    int64_t dfound = static_cast<int64_t>(droots.size());
    if (dfound != c.den.degree())
      throw SearchBoundExceeded("pole of function lies outside the ambient field");
    std::vector<Fq> ddistinct;
    for (auto it = droots.begin(); it != droots.end(); it = droots.upper_bound(*it))
      ddistinct.push_back(*it);
    for (const Fq& x0 : ddistinct) {
      int64_t m = static_cast<int64_t>(droots.count(x0));
      Fq fx = f_.eval(x0);
      if (fx.is_zero()) {
        D.add(PointX::affine(x0, fx), -2 * m);
      } else {
        auto sq = sqrt_fq(fx);
        if (!sq) throw SearchBoundExceeded("pole of function lies outside the ambient field");
        D.add(PointX::affine(x0, sq->first), -m);
        D.add(PointX::affine(x0, sq->second), -m);
      }
    }
  }

  // Order at infinity balances the finite part.
  int64_t inf_ord = local_order(c, PointX::infinity());
  D.add(PointX::infinity(), inf_ord);
  if (D.degree() != 0) throw Error("divisor of function has nonzero degree (internal)");
  return D;
}

std::vector<CurveFunction> HyperCurve::rr_basis(const DivisorX& D) const {
  const FieldCtx& F = *F_;
  const int two_g1 = 2 * g_ + 1;

  // Clear the allowed finite poles with a polynomial w(x).
  std::map<Fq, int64_t> w_exp;  // x-coordinate -> exponent in w
  for (auto& [P, m] : D.coeffs()) {
    if (P.is_infinity() || m <= 0) continue;
    int64_t e = P.is_weierstrass() ? (m + 1) / 2 : m;
    auto it = w_exp.find(P.x());
    if (it == w_exp.end())
      w_exp.emplace(P.x(), e);
    else
      it->second = std::max(it->second, e);
  }
  Poly w = Poly::one(F);
  int64_t wdeg = 0;
  for (auto& [x0, e] : w_exp) {
    w = w * Poly::linear_root(x0).pow(e);
    wdeg += e;
  }

  int64_t dinf = 0;
  {
    PointX inf = PointX::infinity();
    dinf = D.coeff(inf);
  }
  int64_t bu = (dinf + 2 * wdeg) / 2;                    // deg u <= bu
  int64_t bv = (dinf + 2 * wdeg - two_g1);
  bv = bv >= 0 ? bv / 2 : -1;                            // deg v <= bv (or no v)
  if (dinf + 2 * wdeg < 0) bu = -1;
  int nu = static_cast<int>(bu + 1);
  int nv = static_cast<int>(bv + 1);
  int ncols = nu + nv;
  if (ncols == 0) return {};

  // Condition points: both points over every x-coordinate of w, plus every
  // point with negative coefficient in D.
  std::map<PointX, int64_t> req;  // P -> required vanishing order of u + v y
  auto add_req = [&](const PointX& P) {
    int64_t ow = 0;
    if (!w.is_zero() && wdeg > 0) {
      ow = poly_order_at(w, P.x());
      if (P.is_weierstrass()) ow *= 2;
    }
    int64_t r = ow - D.coeff(P);
    if (r > 0) req[P] = r;
  };
  for (auto& [x0, e] : w_exp) {
    Fq fx = f_.eval(x0);
    if (fx.is_zero()) {
      add_req(PointX::affine(x0, fx));
    } else {
      auto sq = sqrt_fq(fx);
      if (!sq) throw SearchBoundExceeded("divisor support outside the ambient field");
      add_req(PointX::affine(x0, sq->first));
      add_req(PointX::affine(x0, sq->second));
    }
  }
  for (auto& [P, m] : D.coeffs()) {
    if (P.is_infinity() || m >= 0) continue;
    require_on_curve(P);
    add_req(P);
  }

  Matrix rows;
  auto monomial_series = [&](const Fq& x0, int deg_bound, int prec) {
    // series of (x0 + t)^m for m = 0..deg_bound
    std::vector<Series> pows;
    Series cur(prec, Fq::zero(F));
    cur[0] = Fq::one(F);
    pows.push_back(cur);
    Series lin(prec, Fq::zero(F));
    lin[0] = x0;
    if (prec > 1) lin[1] = Fq::one(F);
    for (int m = 1; m <= deg_bound; ++m) {
      cur = series_mul(cur, lin, F, prec);
      pows.push_back(cur);
    }
    return pows;
  };

  for (auto& [P, r] : req) {
    const Fq& x0 = P.x();
    if (P.is_weierstrass()) {
      int64_t cu = (r + 1) / 2;       // u must vanish to order >= cu at x0
      int64_t cv = r / 2;             // v must vanish to order >= cv
      int prec = static_cast<int>(std::max(cu, cv));
      if (prec > 0) {
        auto upows = monomial_series(x0, nu - 1, prec);
        for (int64_t j = 0; j < cu; ++j) {
          Row row(ncols, Fq::zero(F));
          for (int m = 0; m < nu; ++m) row[m] = upows[m][j];
          rows.push_back(std::move(row));
        }
        auto vpows = nv > 0 ? monomial_series(x0, nv - 1, prec) : std::vector<Series>{};
        for (int64_t j = 0; j < cv; ++j) {
          Row row(ncols, Fq::zero(F));
          for (int m = 0; m < nv; ++m) row[nu + m] = vpows[m][j];
          rows.push_back(std::move(row));
        }
      }
    } else {
      int prec = static_cast<int>(r);
      Series A = series_from_poly(f_.shift(x0), prec);
      Series ys = series_sqrt(A, P.y(), prec);
      auto upows = monomial_series(x0, nu - 1, prec);
      auto vpows = nv > 0 ? monomial_series(x0, nv - 1, prec) : std::vector<Series>{};
      for (int64_t j = 0; j < r; ++j) {
        Row row(ncols, Fq::zero(F));
        for (int m = 0; m < nu; ++m) row[m] = upows[m][j];
        for (int m = 0; m < nv; ++m) {
          Series prod = series_mul(vpows[m], ys, F, prec);
          row[nu + m] = prod[j];
        }
        rows.push_back(std::move(row));
      }
    }
  }

  auto kern = kernel_basis(std::move(rows), ncols, F);
  std::vector<CurveFunction> basis;
  for (auto& vsol : kern) {
    std::vector<Fq> uc(vsol.begin(), vsol.begin() + nu);
    std::vector<Fq> vc(vsol.begin() + nu, vsol.end());
    basis.push_back(CurveFunction{Poly(F, std::move(uc)), Poly(F, std::move(vc)), w});
  }
  return basis;
}

int HyperCurve::rr_dim(const DivisorX& D) const {
  return static_cast<int>(rr_basis(D).size());
}

Fq HyperCurve::eval_function(const CurveFunction& c, const PointX& P) const {
  if (P.is_infinity()) throw BadTrivializationPoint("evaluation at infinity");
  Fq d = c.den.eval(P.x());
  if (d.is_zero()) throw BadTrivializationPoint("denominator vanishes at " + P.str());
  return (c.u.eval(P.x()) + c.v.eval(P.x()) * P.y()) / d;
}

}  // namespace hitchin
