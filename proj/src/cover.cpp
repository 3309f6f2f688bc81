#include "hitchin/cover.hpp"

#include <sstream>

namespace hitchin {

namespace {

Poly subset_poly(const HyperCurve& C, const std::set<int>& S) {
  auto ws = C.weierstrass_points();
  if (static_cast<int>(ws.size()) != 2 * C.genus() + 1)
    throw RootsNotRational("f does not split over the ambient field");
  if (S.empty() || S.size() % 2 != 0)
    throw Error("cover subset must be nonempty of even size");
  Poly h = Poly::one(C.field());
  for (int i : S) {
    if (i < 0 || i >= static_cast<int>(ws.size()))
      throw Error("cover subset index out of range");
    h = h * Poly::linear_root(ws[i].x());
  }
  return h;
}

DivisorX subset_divisor(const HyperCurve& C, const std::set<int>& S) {
  auto ws = C.weierstrass_points();
  DivisorX D;
  for (int i : S) {
    D.add(ws[i], 1);
    D.add(PointX::infinity(), -1);
  }
  return D;
}

}  // namespace

std::string CoverPoint::str() const {
  std::ostringstream os;
  os << base.str() << "#" << sheet;
  if (sheet_value) os << "(t=" << sheet_value->str() << ")";
  return os.str();
}

void CoverDivisor::add(const CoverPoint& Q, int64_t mult) {
  if (mult == 0) return;
  auto it = coeffs_.find(Q);
  if (it == coeffs_.end()) {
    coeffs_.emplace(Q, mult);
  } else if ((it->second += mult) == 0) {
    coeffs_.erase(it);
  }
}

int64_t CoverDivisor::coeff(const CoverPoint& Q) const {
  auto it = coeffs_.find(Q);
  return it == coeffs_.end() ? 0 : it->second;
}

int64_t CoverDivisor::degree() const {
  int64_t d = 0;
  for (auto& [Q, m] : coeffs_) d += m;
  return d;
}

bool CoverDivisor::is_effective() const {
  for (auto& [Q, m] : coeffs_)
    if (m < 0) return false;
  return true;
}

CoverDivisor CoverDivisor::operator+(const CoverDivisor& o) const {
  CoverDivisor r = *this;
  for (auto& [Q, m] : o.coeffs_) r.add(Q, m);
  return r;
}

CoverDivisor CoverDivisor::operator*(int64_t n) const {
  CoverDivisor r;
  if (n != 0)
    for (auto& [Q, m] : coeffs_) r.add(Q, m * n);
  return r;
}

std::string CoverDivisor::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [Q, m] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << Q.str();
  }
  return os.str();
}

CoverModel::CoverModel(const HyperCurve& C, std::set<int> S)
    : C_(&C),
      S_(std::move(S)),
      h_(subset_poly(C, S_)),
      T_(class_of_divisor(C, subset_divisor(C, S_))),
      DT_(subset_divisor(C, S_)) {
  if (T_.is_trivial()) throw Error("cover subset gives the trivial class");
  asec_ = C.rr_basis(C.canonical_divisor());
  bsec_ = C.rr_basis(C.canonical_divisor() + DT_);
}

std::pair<CoverPoint, CoverPoint> CoverModel::points_above(const PointX& P) const {
  C_->require_on_curve(P);
  if (!P.is_infinity()) {
    Fq hx = h_.eval(P.x());
    if (!hx.is_zero()) {
      auto r = sqrt_fq(hx);
      if (!r)
        throw SearchBoundExceeded("sheet value of " + P.str() +
                                  " lies outside the ambient field");
      return {CoverPoint{P, 0, r->first}, CoverPoint{P, 1, r->second}};
    }
  }
  // over zeros of h and over infinity the two local branches of sqrt(h) get
  // abstract but fixed labels
  return {CoverPoint{P, 0, std::nullopt}, CoverPoint{P, 1, std::nullopt}};
}

CoverPoint CoverModel::sigma(const CoverPoint& Q) const {
  CoverPoint r{Q.base, 1 - Q.sheet, std::nullopt};
  if (Q.sheet_value) r.sheet_value = -*Q.sheet_value;
  return r;
}

CoverDivisor CoverModel::sigma_star(const CoverDivisor& R) const {
  CoverDivisor out;
  for (auto& [Q, m] : R.coeffs()) out.add(sigma(Q), m);
  return out;
}

DivisorX CoverModel::norm_divisor(const CoverDivisor& R) const {
  DivisorX out;
  for (auto& [Q, m] : R.coeffs()) out.add(Q.base, m);
  return out;
}

CoverDivisor CoverModel::pullback_divisor(const DivisorX& D) const {
  CoverDivisor out;
  for (auto& [P, m] : D.coeffs()) {
    auto [q0, q1] = points_above(P);
    out.add(q0, m);
    out.add(q1, m);
  }
  return out;
}

bool CoverModel::disjoint_from_involute(const CoverDivisor& R) const {
  if (!R.is_effective()) throw NotEffective("R must be effective");
  for (auto& [Q, m] : R.coeffs())
    if (R.coeff(sigma(Q)) != 0) return false;
  return true;
}

}  // namespace hitchin
