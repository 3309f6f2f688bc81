#include "hitchin/strata.hpp"

#include <algorithm>

namespace hitchin {

namespace {

bool divisor_before(const DivisorX& a, const DivisorX& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

}  // namespace

StratumPoint make_stratum_point(const BasePoint& bp, const PicClass& M,
                                const DivisorX& D,
                                const std::map<PointX, Fq>& alpha) {
  const HyperCurve& C = bp.model->curve();
  if (!is_ni(bp))
    throw NotNodalIntegral("stratum points need a nodal-integral base point");
  if (M.degree() != C.genus() - 1)
    throw WrongDegree("M must have degree g - 1");
  if (!D.is_effective() || !D.is_reduced() || !D.leq(div_of_b(bp)))
    throw PreconditionViolated("D must be a reduced subdivisor of div(b)");
  auto supp = D.support();
  if (alpha.size() != supp.size())
    throw PreconditionViolated("alpha must be defined exactly on supp(D)");
  for (const PointX& P : supp)
    if (!alpha.count(P))
      throw PreconditionViolated("alpha missing at " + P.str());
  return StratumPoint{bp, M, D, alpha};
}

std::vector<std::pair<DivisorX, int>> enumerate_strata(const BasePoint& bp) {
  if (!is_ni(bp))
    throw NotNodalIntegral("stratification needs a nodal-integral base point");
  auto nodes = div_of_b(bp).support();
  std::vector<std::pair<DivisorX, int>> out;
  for (uint32_t mask = 0; mask < (1u << nodes.size()); ++mask) {
    DivisorX D;
    for (size_t i = 0; i < nodes.size(); ++i)
      if (mask & (1u << i)) D.add(nodes[i], 1);
    out.emplace_back(D, static_cast<int>(D.degree()));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return divisor_before(x.first, y.first); });
  return out;
}

DivisorX dprime_of(const StratumPoint& pt) {
  DivisorX Dp = div_of_b(pt.bp) - pt.D;
  for (auto& [P, v] : pt.alpha)
    if (!v.is_zero()) Dp.add(P, 1);
  return Dp;
}

bool strata_intersection_nonempty(const DivisorX& D, const DivisorX& Dprime,
                                  const DivisorX& div_b) {
  return div_b.leq(D + Dprime);
}

SemistabilityVerdict classify_semistability(const StratumPoint& pt) {
  const HyperCurve& C = pt.bp.model->curve();
  const int64_t gm1 = C.genus() - 1;
  const int64_t dD = pt.D.degree();
  DivisorX Dp = dprime_of(pt);
  const int64_t dDp = Dp.degree();
  using K = SemistabilityVerdict::Kind;
  using S = SemistabilityVerdict::Side;

  if (dD < gm1)
    return {K::Unstable, S::MSide, pt.M - class_of_divisor(C, pt.D)};
  if (dDp < gm1) {
    PicClass MT = pt.M + pt.bp.model->torsion_class();
    return {K::Unstable, S::MTSide, MT - class_of_divisor(C, Dp)};
  }
  if (dD == gm1) return {K::StrictlySemistable, S::MSide, std::nullopt};
  if (dDp == gm1) return {K::StrictlySemistable, S::MTSide, std::nullopt};
  return {K::Stable, std::nullopt, std::nullopt};
}

FixedPointVHS cstar_limit(const StratumPoint& pt) {
  const HyperCurve& C = pt.bp.model->curve();
  PicClass Kinv = PicClass::trivial(C, -(2 * C.genus() - 2));
  PicClass det = pt.M + pt.M + Kinv;
  SemistabilityVerdict v = classify_semistability(pt);
  if (v.is_semistable())
    return {FixedPointVHS::Tag::SemistableBundle, std::nullopt, std::nullopt,
            DivisorX{}, det};

  const bool mside = v.side == SemistabilityVerdict::Side::MSide;
  PicClass base = mside ? pt.M : pt.M + pt.bp.model->torsion_class();
  DivisorX D = mside ? pt.D : dprime_of(pt);
  PicClass cD = class_of_divisor(C, D);
  return {FixedPointVHS::Tag::VHS, base - cD, base + Kinv + cD, D * 2, det};
}

WobblyVerdict hh_wobbly_criterion(const FixedPointVHS& fp) {
  if (fp.tag != FixedPointVHS::Tag::VHS)
    throw NotAVHSFixedPoint("fixed point has no nonzero Higgs form");
  const int g = fp.L1->curve().genus();
  const int64_t d1 = fp.L1->degree();
  if (d1 < 1 || d1 > g - 1)
    throw NotAVHSFixedPoint("deg L1 outside [1, g-1]");
  if (d1 == g - 1) return WobblyVerdict::VeryStable;
  for (auto& [P, m] : fp.phi_divisor.coeffs())
    if (m >= 2) return WobblyVerdict::Wobbly;
  return WobblyVerdict::VeryStable;
}

CurveFunction nilpotent_witness_semistable(const StratumPoint& pt) {
  if (!classify_semistability(pt).is_semistable())
    throw PreconditionViolated("witness only defined for semistable points");
  const HyperCurve& C = pt.bp.model->curve();
  DivisorX bound = div_of_b(pt.bp) * 2 - pt.D * 2;
  auto basis = C.rr_basis(bound);
  if (basis.empty() || basis.front().is_zero())
    throw Error("empty nilpotent witness space (internal)");
  return basis.front();
}

LimitClass limit_classification(const StratumPoint& pt) {
  FixedPointVHS fp = cstar_limit(pt);
  if (fp.tag == FixedPointVHS::Tag::SemistableBundle)
    return LimitClass::WobblySemistableLimit;
  return hh_wobbly_criterion(fp) == WobblyVerdict::Wobbly
             ? LimitClass::WobblyVHS
             : LimitClass::VeryStableVHS;
}

StratumPoint cstar_scaling_closure(const StratumPoint& pt, const Fq& t) {
  if (t.is_zero()) throw ZeroScalar("scaling needs t != 0");
  const FieldCtx& F = pt.bp.model->curve().field();
  auto scale = [&](const std::vector<int64_t>& coeffs) {
    std::vector<int64_t> out;
    for (int64_t c : coeffs) out.push_back((Fq::from_index(F, c) * t).index());
    return out;
  };
  BasePoint scaled = base_point_from_coeffs(*pt.bp.model, scale(pt.bp.a_coeffs),
                                            scale(pt.bp.b_coeffs));
  std::map<PointX, Fq> alpha;
  for (auto& [P, v] : pt.alpha) alpha.emplace(P, v * t);
  return make_stratum_point(scaled, pt.M, pt.D, alpha);
}

SymbolicProofRecord symbolic_higgs_identity() {
  const MPoly a = MPoly::a(), b = MPoly::b(), s = MPoly::s(), al = MPoly::alpha();
  const MPoly s2 = s * s;

  // s^2 * phi, the Higgs field with the 1/s^2 denominator cleared
  const MPoly P00 = s2 * a - s2 * s * al;
  const MPoly P01 = b * b - s2 * al * al;
  const MPoly P10 = s2 * s2;
  const MPoly P11 = s2 * a + s2 * s * al;

  SymbolicProofRecord rec{};
  rec.trace_ok = (P00 + P11 == s2 * (a * 2));
  rec.det_ok = (P00 * P11 - P01 * P10 == s2 * s2 * (a * a - b * b));

  // Psi = (s alpha; 0 b/s), cleared to s*Psi; compatibility with
  // Phi = (a b; b a) reads (s Psi)(s^2 phi) = s^2 Phi (s Psi)
  const MPoly Q00 = s2, Q01 = s * al, Q10 = MPoly::constant(0), Q11 = b;
  const MPoly F00 = a, F01 = b, F10 = b, F11 = a;
  const MPoly L00 = Q00 * P00 + Q01 * P10, L01 = Q00 * P01 + Q01 * P11;
  const MPoly L10 = Q10 * P00 + Q11 * P10, L11 = Q10 * P01 + Q11 * P11;
  const MPoly R00 = s2 * (F00 * Q00 + F01 * Q10), R01 = s2 * (F00 * Q01 + F01 * Q11);
  const MPoly R10 = s2 * (F10 * Q00 + F11 * Q10), R11 = s2 * (F10 * Q01 + F11 * Q11);
  rec.hecke_ok = (L00 == R00 && L01 == R01 && L10 == R10 && L11 == R11);

  // alpha = 0, s = 1 specializes to the section matrix (a b^2; 1 a)
  auto sp = [](const MPoly& m) { return m.substitute(3, 0).substitute(2, 1); };
  rec.specialization_ok =
      sp(P00) == a && sp(P01) == b * b && sp(P10) == MPoly::constant(1) &&
      sp(P11) == a && (P00 + P11).substitute(0, 0).is_zero();
  return rec;
}

nlohmann::json stratum_record(const StratumPoint& pt) {
  auto points_of = [](const DivisorX& D) {
    std::vector<std::string> out;
    for (auto& [P, m] : D.coeffs())
      for (int64_t i = 0; i < m; ++i) out.push_back(P.str());
    return out;
  };

  SemistabilityVerdict v = classify_semistability(pt);
  FixedPointVHS fp = cstar_limit(pt);
  LimitClass lc = limit_classification(pt);

  nlohmann::json rec;
  rec["D"] = points_of(pt.D);
  rec["dim"] = pt.D.degree();
  rec["Dprime"] = points_of(dprime_of(pt));
  switch (v.kind) {
    case SemistabilityVerdict::Kind::Unstable: rec["verdict"] = "unstable"; break;
    case SemistabilityVerdict::Kind::StrictlySemistable:
      rec["verdict"] = "strictly-semistable";
      break;
    case SemistabilityVerdict::Kind::Stable: rec["verdict"] = "stable"; break;
  }
  if (v.side)
    rec["side"] = *v.side == SemistabilityVerdict::Side::MSide ? "M" : "MT";
  if (fp.tag == FixedPointVHS::Tag::SemistableBundle) {
    rec["limit"] = "semistable";
  } else {
    rec["limit"] = {{"L1_deg", fp.L1->degree()},
                    {"L2_deg", fp.L2->degree()},
                    {"phi_divisor", points_of(fp.phi_divisor)}};
  }
  rec["wobbly"] = lc != LimitClass::VeryStableVHS;
  return rec;
}

}  // namespace hitchin
