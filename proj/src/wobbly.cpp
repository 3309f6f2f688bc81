#include "hitchin/wobbly.hpp"

#include <algorithm>

namespace hitchin {

DeltaInfo delta_constraints(int g) {
  if (g < 2) throw GenusTooSmall("need g >= 2");
  DeltaInfo info;
  info.g = g;
  info.delta_max = (g % 2 == 1) ? g - 1 : g - 2;
  for (int d = 0; d <= 2 * g - 2; d += 2) {
    info.admissible.push_back(d);
    if (d > info.delta_max) info.absorbed.push_back(d);
  }
  return info;
}

PicClass det_class_of(const CoverModel& M, const PicClass& F0,
                      const CoverDivisor& R) {
  const HyperCurve& C = M.curve();
  return F0 + F0 + M.torsion_class() + class_of_divisor(C, M.norm_divisor(R));
}

MembershipVerdict check_membership(const CoverModel& M, const PicClass& F0,
                                   const CoverDivisor& R) {
  const HyperCurve& C = M.curve();
  const int g = C.genus();
  if (!R.is_effective()) throw NotEffective("R must be effective");

  const int64_t delta = 2 * g - 2 - R.degree();
  if (delta < 0 || delta % 2 != 0)
    return {false, "BadDelta", std::nullopt};
  if (F0.degree() != 1 - g + delta / 2)
    return {false, "WrongDegree", std::nullopt};
  if (!M.disjoint_from_involute(R))
    return {false, "InvoluteOverlap", std::nullopt};

  PicClass K = PicClass::trivial(C, 2 * g - 2);
  PicClass cls = K + M.torsion_class() - class_of_divisor(C, M.norm_divisor(R));
  if (cls.degree() != delta) throw Error("delta bookkeeping broken (internal)");
  EffectivityResult eff = is_effective_class(cls);
  if (!eff.effective) return {false, "NotEffectiveClass", std::nullopt};

  PicClass det = det_class_of(M, F0, R);
  if (det.degree() != 0) throw Error("det class degree nonzero (internal)");
  PicClass via_witness = F0 + F0 + K - class_of_divisor(C, *eff.witness);
  if (det != via_witness)
    throw Error("determinant identity failed against the witness (internal)");

  WobblyDatum datum{F0, R, static_cast<int>(delta), *eff.witness, det, false};
  datum.strict_flag = strict_semistability_note(M, datum);
  return {true, "", datum};
}

bool strict_semistability_note(const CoverModel& M, const WobblyDatum& datum) {
  const HyperCurve& C = M.curve();
  PicClass D = class_of_divisor(C, datum.witness);
  PicClass K = PicClass::trivial(C, 2 * C.genus() - 2);
  return D == K || D == K + M.torsion_class();
}

WobblySearchResult search_wobbly(const CoverModel& M, int delta, uint64_t seed,
                                 int64_t budget) {
  const HyperCurve& C = M.curve();
  const int g = C.genus();
  DeltaInfo info = delta_constraints(g);
  if (!info.is_admissible(delta))
    throw ConfigError("delta " + std::to_string(delta) + " is not admissible");

  // cover points over rational base points, in canonical order
  std::vector<CoverPoint> cpts;
  for (const PointX& P : C.rational_points(1)) {
    auto [q0, q1] = M.points_above(P);
    cpts.push_back(q0);
    cpts.push_back(q1);
  }

  // sample of F0 classes of the required degree, deterministic in the seed
  std::mt19937_64 rng(seed);
  const int d0 = info.d0(delta);
  auto pts = C.rational_points(1);
  std::vector<PicClass> f0s;
  for (int i = 0; i < 4; ++i) {
    DivisorX D;
    int n = static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) D.add(pts[rng() % pts.size()], 1);
    PicClass cand = class_of_divisor(C, D).with_degree(d0);
    if (std::find(f0s.begin(), f0s.end(), cand) == f0s.end()) f0s.push_back(cand);
  }

  WobblySearchResult res{{}, 0, 0, false};
  const int r = 2 * g - 2 - delta;
  PicClass K = PicClass::trivial(C, 2 * g - 2);

  // the effectivity of [K]+[T]-[Nm R] depends on R only through the norm
  // class, shared by many sheet choices: memoize it
  std::map<PicClass, EffectivityResult> eff_memo;

  // multisets of size r over cpts, nondecreasing index vectors
  std::vector<size_t> idx(r, 0);
  bool done = false;
  while (!done) {
    CoverDivisor R;
    for (size_t i : idx) R.add(cpts[i], 1);
    if (res.examined + static_cast<int64_t>(f0s.size()) > budget) {
      res.budget_exhausted = true;
      return res;
    }
    res.examined += static_cast<int64_t>(f0s.size());
    if (M.disjoint_from_involute(R)) {
      try {
        PicClass cls = K + M.torsion_class() - class_of_divisor(C, M.norm_divisor(R));
        auto it = eff_memo.find(cls);
        if (it == eff_memo.end())
          it = eff_memo.emplace(cls, is_effective_class(cls)).first;
        if (it->second.effective) {
          for (const PicClass& F0 : f0s) {
            WobblyDatum datum{F0, R, delta, *it->second.witness,
                              det_class_of(M, F0, R), false};
            datum.strict_flag = strict_semistability_note(M, datum);
            res.accepts.push_back(datum);
          }
        }
      } catch (const SearchBoundExceeded&) {
        res.skipped_out_of_field += static_cast<int64_t>(f0s.size());
      }
    }
    // advance the nondecreasing index vector; r = 0 runs the single R = 0
    if (r == 0) break;
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == cpts.size() - 1) --pos;
    if (pos < 0) {
      done = true;
    } else {
      size_t v = ++idx[pos];
      for (int i = pos + 1; i < r; ++i) idx[i] = v;
    }
  }
  return res;
}

nlohmann::json wobbly_datum_record(const WobblyDatum& datum) {
  auto cover_points = [](const CoverDivisor& R) {
    std::vector<std::string> out;
    for (auto& [Q, m] : R.coeffs())
      for (int64_t i = 0; i < m; ++i) out.push_back(Q.str());
    return out;
  };
  std::vector<std::string> wit;
  for (auto& [P, m] : datum.witness.coeffs())
    for (int64_t i = 0; i < m; ++i) wit.push_back(P.str());
  return nlohmann::json{{"delta", datum.delta},
                        {"F0", datum.F0.str()},
                        {"R", cover_points(datum.R)},
                        {"witness_D", wit},
                        {"det_class", datum.det_class.str()},
                        {"strict_flag", datum.strict_flag}};
}

}  // namespace hitchin
