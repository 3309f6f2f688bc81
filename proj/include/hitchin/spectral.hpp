#ifndef HITCHIN_SPECTRAL_HPP
#define HITCHIN_SPECTRAL_HPP

#include <cstdint>
#include <random>
#include <set>

#include <json.hpp>

#include "hitchin/cover.hpp"

namespace hitchin {

/// Point (a, b) of the twisted Hitchin base: a in L((2g-2)inf) and b in
/// L((2g-2)inf + D_T), i.e. a section of K and one of KT. The associated
/// characteristic data is (2a, a^2 - b^2). Coefficients are kept (as field
/// element indices against the basis returned by a_basis/b_basis) so a
/// sampled point can be serialized and replayed.
struct BasePoint {
  const CoverModel* model;
  CurveFunction a, b;
  std::vector<int64_t> a_coeffs, b_coeffs;
  /// Memoized div_of_b result; everything downstream asks for it repeatedly.
  mutable std::optional<DivisorX> divb_cache;
};

/// Basis of the a-space L((2g-2)inf); dimension g.
std::vector<CurveFunction> a_basis(const CoverModel& M);
/// Basis of the b-space L((2g-2)inf + D_T); dimension g-1.
std::vector<CurveFunction> b_basis(const CoverModel& M);

BasePoint base_point_from_coeffs(const CoverModel& M,
                                 const std::vector<int64_t>& a_coeffs,
                                 const std::vector<int64_t>& b_coeffs);

/// Zero divisor of b as a section of KT: div(b) + (2g-2)inf + D_T,
/// effective of degree 2g-2.
DivisorX div_of_b(const BasePoint& bp);

/// The spectral curve of (a, b) is nodal and integral iff b is nonzero
/// with 2g-2 distinct zeros.
bool is_ni(const BasePoint& bp);

struct SpectralInvariants {
  DivisorX nodes;
  int64_t arithmetic_genus;   // 4g - 3
  int64_t geometric_genus;    // 2g - 1
};

SpectralInvariants spectral_invariants(const BasePoint& bp);

/// Eigenvalues {a(P) + b(P), a(P) - b(P)} of the Higgs field at an affine
/// non-Weierstrass point where the dx-trivialization of K is regular.
std::multiset<Fq> eigenvalues_at(const BasePoint& bp, const PointX& P);

/// One of the two fixed points of the section construction over (a, b):
/// bundle M (+) M K^{-1} with Higgs matrix (a, b^2; 1, a).
struct HitchinSectionPoint {
  PicClass top, bottom;  // degrees g-1 and 1-g
  CurveFunction m00, m01, m10, m11;
  PicClass det_class;    // M^2 K^{-1}, degree 0
};

/// The pair of section points over (a, b) attached to M and MT.
std::pair<HitchinSectionPoint, HitchinSectionPoint> hitchin_section_points(
    const BasePoint& bp, const PicClass& M);

/// Draw coefficient vectors until the spectral curve is nodal-integral.
/// Throws BudgetExhausted after max_tries rejections.
BasePoint sample_base_point(const CoverModel& M, std::mt19937_64& rng,
                            int max_tries = 500);

/// Replayable record: the basis coefficients of a and b plus the seed that
/// produced them.
nlohmann::json base_point_record(const BasePoint& bp, uint64_t seed);

}  // namespace hitchin

#endif
