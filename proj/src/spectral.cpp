#include "hitchin/spectral.hpp"

namespace hitchin {

std::vector<CurveFunction> a_basis(const CoverModel& M) { return M.a_sections(); }

std::vector<CurveFunction> b_basis(const CoverModel& M) { return M.b_sections(); }

namespace {

CurveFunction combine(const HyperCurve& C, const std::vector<CurveFunction>& basis,
                      const std::vector<int64_t>& coeffs) {
  if (coeffs.size() != basis.size())
    throw PreconditionViolated("coefficient count does not match basis size");
  const FieldCtx& F = C.field();
  CurveFunction out = CurveFunction::from_poly(Poly::zero(F));
  for (size_t i = 0; i < basis.size(); ++i)
    out = out + basis[i].scaled(Fq::from_index(F, coeffs[i]));
  return out;
}

}  // namespace

BasePoint base_point_from_coeffs(const CoverModel& M,
                                 const std::vector<int64_t>& a_coeffs,
                                 const std::vector<int64_t>& b_coeffs) {
  const HyperCurve& C = M.curve();
  return BasePoint{&M, combine(C, a_basis(M), a_coeffs),
                   combine(C, b_basis(M), b_coeffs), a_coeffs, b_coeffs};
}

DivisorX div_of_b(const BasePoint& bp) {
  if (bp.b.is_zero()) throw ZeroSection("b = 0 has no zero divisor");
  if (bp.divb_cache) return *bp.divb_cache;
  const HyperCurve& C = bp.model->curve();
  DivisorX K = C.canonical_divisor();
  DivisorX D = C.divisor_of_function(bp.b) + K + bp.model->twist_divisor();
  if (!D.is_effective() || D.degree() != 2 * C.genus() - 2)
    throw Error("b is not a section of the twisted canonical bundle");
  bp.divb_cache = D;
  return D;
}

bool is_ni(const BasePoint& bp) {
  if (bp.b.is_zero()) return false;
  // SearchBoundExceeded propagates: a zero outside the ambient field is not
  // a verdict either way
  return div_of_b(bp).is_reduced();
}

SpectralInvariants spectral_invariants(const BasePoint& bp) {
  if (!is_ni(bp))
    throw NotNodalIntegral("spectral curve is not nodal-integral");
  const int g = bp.model->curve().genus();
  SpectralInvariants inv{div_of_b(bp), 4 * g - 3, 2 * g - 1};
  if (inv.arithmetic_genus - inv.nodes.degree() != inv.geometric_genus)
    throw Error("genus/node bookkeeping violated (internal)");
  return inv;
}

std::multiset<Fq> eigenvalues_at(const BasePoint& bp, const PointX& P) {
  const HyperCurve& C = bp.model->curve();
  if (P.is_infinity() || P.is_weierstrass())
    throw BadTrivializationPoint("dx does not trivialize K at " + P.str());
  Fq av = C.eval_function(bp.a, P);
  Fq bv = C.eval_function(bp.b, P);
  return {av + bv, av - bv};
}

std::pair<HitchinSectionPoint, HitchinSectionPoint> hitchin_section_points(
    const BasePoint& bp, const PicClass& M) {
  const HyperCurve& C = bp.model->curve();
  const int g = C.genus();
  if (M.degree() != g - 1)
    throw WrongDegree("section construction needs deg M = g - 1");
  PicClass Kinv = PicClass::trivial(C, -(2 * g - 2));
  CurveFunction one = CurveFunction::from_poly(Poly::one(C.field()));
  CurveFunction b2 = bp.b.mul(bp.b, C);

  auto make = [&](const PicClass& top) {
    return HitchinSectionPoint{top,  top + Kinv, bp.a, b2,
                               one,  bp.a,       M + M + Kinv};
  };
  return {make(M), make(M + bp.model->torsion_class())};
}

BasePoint sample_base_point(const CoverModel& M, std::mt19937_64& rng,
                            int max_tries) {
  const FieldCtx& F = M.curve().field();
  auto ab = a_basis(M), bb = b_basis(M);
  for (int t = 0; t < max_tries; ++t) {
    std::vector<int64_t> ac, bc;
    for (size_t i = 0; i < ab.size(); ++i)
      ac.push_back(static_cast<int64_t>(rng() % F.order()));
    for (size_t i = 0; i < bb.size(); ++i)
      bc.push_back(static_cast<int64_t>(rng() % F.order()));
    BasePoint bp = base_point_from_coeffs(M, ac, bc);
    try {
      if (is_ni(bp)) return bp;
    } catch (const SearchBoundExceeded&) {
      // div(b) leaves the ambient field; resample
    }
  }
  throw BudgetExhausted("no nodal-integral base point found in " +
                        std::to_string(max_tries) + " draws");
}

nlohmann::json base_point_record(const BasePoint& bp, uint64_t seed) {
  return nlohmann::json{{"seed", seed},
                        {"a_coeffs", bp.a_coeffs},
                        {"b_coeffs", bp.b_coeffs},
                        {"p", bp.model->curve().field().p()},
                        {"k", bp.model->curve().field().k()},
                        {"subset", std::vector<int>(bp.model->subset().begin(),
                                                    bp.model->subset().end())}};
}

}  // namespace hitchin
