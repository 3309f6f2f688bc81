#ifndef HITCHIN_STRATA_HPP
#define HITCHIN_STRATA_HPP

#include <map>
#include <optional>

#include <json.hpp>

#include "hitchin/mpoly.hpp"
#include "hitchin/spectral.hpp"

namespace hitchin {

/// Point of the stratum V(D) of the Lagrangian fiber over (a, b): the
/// reduced subdivisor D of div(b) where the Hecke image departs from M,
/// together with the H^0(O_D) coordinate alpha (one residue-field value per
/// point of D). The pair (D, alpha-zero-set) determines every verdict
/// computed here.
struct StratumPoint {
  BasePoint bp;
  PicClass M;  // degree g-1
  DivisorX D;
  std::map<PointX, Fq> alpha;
};

/// Validates: is_ni, D reduced effective <= div(b), alpha keyed exactly by
/// supp(D), deg M = g-1.
StratumPoint make_stratum_point(const BasePoint& bp, const PicClass& M,
                                const DivisorX& D,
                                const std::map<PointX, Fq>& alpha);

/// All 2^{2g-2} reduced subdivisors D <= div(b), each with its stratum
/// dimension deg D; sorted with D = 0 first and D = div(b) last.
std::vector<std::pair<DivisorX, int>> enumerate_strata(const BasePoint& bp);

/// D' = (div(b) - D) + {x in D : alpha(x) != 0}: the departure divisor of
/// the same point measured against MT instead of M.
DivisorX dprime_of(const StratumPoint& pt);

/// Whether V(D) and V'(D') can share a point, i.e. div(b) <= D + D'.
bool strata_intersection_nonempty(const DivisorX& D, const DivisorX& Dprime,
                                  const DivisorX& div_b);

struct SemistabilityVerdict {
  enum class Kind { Unstable, StrictlySemistable, Stable };
  enum class Side { MSide, MTSide };
  Kind kind;
  std::optional<Side> side;             // set unless Stable
  std::optional<PicClass> destabilizer; // set iff Unstable

  bool is_semistable() const { return kind != Kind::Unstable; }
};

SemistabilityVerdict classify_semistability(const StratumPoint& pt);

/// The t -> 0 limit of (E, t phi): either the underlying semistable bundle
/// with zero Higgs field, or a fixed point L1 (+) L2 with phi supported on
/// an explicit divisor.
struct FixedPointVHS {
  enum class Tag { VHS, SemistableBundle };
  Tag tag;
  std::optional<PicClass> L1, L2;  // degrees g-1-deg D and deg D - (g-1)
  DivisorX phi_divisor;            // 2D (VHS case only)
  PicClass det_class;              // M^2 K^{-1} in every case
};

FixedPointVHS cstar_limit(const StratumPoint& pt);

enum class WobblyVerdict { Wobbly, VeryStable };

/// For a fixed point in VHS form: wobbly iff phi has a multiple zero;
/// deg L1 = g-1 (phi-divisor zero) is always very stable.
WobblyVerdict hh_wobbly_criterion(const FixedPointVHS& fp);

/// For a semistable stratum point, a nonzero section certifying that the
/// limit (E, 0) is wobbly: an element of L(2 div(b) - 2D).
CurveFunction nilpotent_witness_semistable(const StratumPoint& pt);

/// Three-way totality of the limit behaviour.
enum class LimitClass { WobblySemistableLimit, WobblyVHS, VeryStableVHS };

LimitClass limit_classification(const StratumPoint& pt);

/// The same stratum point over the scaled base point (t a, t b).
StratumPoint cstar_scaling_closure(const StratumPoint& pt, const Fq& t);

/// Exact symbolic verification of the Higgs-field matrix identities, with
/// the 1/s^2 denominator cleared throughout.
struct SymbolicProofRecord {
  bool trace_ok;           // tr = 2a
  bool det_ok;             // s^4 det identity = s^4 (a^2 - b^2)
  bool hecke_ok;           // Psi-compatibility with (a b; b a)
  bool specialization_ok;  // alpha=0, s=1 gives (a b^2; 1 a); a=0 gives tr 0
  bool all_ok() const { return trace_ok && det_ok && hecke_ok && specialization_ok; }
};

SymbolicProofRecord symbolic_higgs_identity();

/// {D, dim, Dprime, verdict, limit, wobbly} per the output schema.
nlohmann::json stratum_record(const StratumPoint& pt);

}  // namespace hitchin

#endif
