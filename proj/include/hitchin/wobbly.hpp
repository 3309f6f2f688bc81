#ifndef HITCHIN_WOBBLY_HPP
#define HITCHIN_WOBBLY_HPP

#include <random>
#include <string>

#include <json.hpp>

#include "hitchin/cover.hpp"

namespace hitchin {

/// Admissible values of the invariant delta = 2g - 2 - deg R and the
/// degree d0(delta) = 1 - g + delta/2 of the twisting line bundle.
struct DeltaInfo {
  int g;
  std::vector<int> admissible;  // all even values in [0, 2g-2]
  std::vector<int> absorbed;    // the admissible values above delta_max,
                                // whose loci sit inside the delta_max one
  int delta_max;                // g-1 for odd g, g-2 for even g

  int d0(int delta) const { return 1 - g + delta / 2; }
  bool is_admissible(int delta) const {
    return delta >= 0 && delta <= 2 * g - 2 && delta % 2 == 0;
  }
};

DeltaInfo delta_constraints(int g);

/// Certified member of the wobbly locus: E = p_*(p^* F0 (R)).
struct WobblyDatum {
  PicClass F0;
  CoverDivisor R;
  int delta;
  DivisorX witness;    // effective D with [D] = [K] + [T] - [Nm R]
  PicClass det_class;  // F0^2 T (Nm R), degree 0
  bool strict_flag;    // [D] = [K] or [D] = [K] + [T]
};

struct MembershipVerdict {
  bool accepted;
  std::string reject_reason;  // BadDelta | WrongDegree | InvoluteOverlap |
                              // NotEffectiveClass; empty on accept
  std::optional<WobblyDatum> datum;
};

/// The class-level membership test: deg F0 = 1-g+delta/2, R support-disjoint
/// from sigma* R, and [K]+[T]-[Nm R] effective. On accept the determinant
/// identity F0^2 T (Nm R) = F0^2 [K] - [D] is asserted against the witness.
MembershipVerdict check_membership(const CoverModel& M, const PicClass& F0,
                                   const CoverDivisor& R);

/// F0^2 + [T] + [Nm R]; always degree 0 for admissible inputs.
PicClass det_class_of(const CoverModel& M, const PicClass& F0,
                      const CoverDivisor& R);

/// Whether the accepted datum sits on the strictly semistable boundary.
bool strict_semistability_note(const CoverModel& M, const WobblyDatum& datum);

struct WobblySearchResult {
  std::vector<WobblyDatum> accepts;
  int64_t examined;
  int64_t skipped_out_of_field;  // candidates whose class left the ambient field
  bool budget_exhausted;
};

/// Enumerates effective R supported on cover points over rational base
/// points (size 2g-2-delta with repetition), pairs each with sampled F0
/// classes of degree d0, and collects every accept. Deterministic under the
/// seed; stops with budget_exhausted once `budget` membership checks ran.
WobblySearchResult search_wobbly(const CoverModel& M, int delta, uint64_t seed,
                                 int64_t budget);

nlohmann::json wobbly_datum_record(const WobblyDatum& datum);

}  // namespace hitchin

#endif
