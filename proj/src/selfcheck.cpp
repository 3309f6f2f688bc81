#include "hitchin/selfcheck.hpp"

namespace hitchin {

namespace {

// Tiny harness: run `body(check)` where check(cond, what) tallies and
// records the first failure.
template <typename Body>
CheckGroup run_group(const std::string& name, Body body) {
  CheckGroup g{name, true, 0, ""};
  auto check = [&](bool ok, const std::string& what) {
    ++g.checks;
    if (!ok && g.passed) {
      g.passed = false;
      g.detail = what;
    }
  };
  try {
    body(check);
  } catch (const std::exception& e) {
    g.passed = false;
    g.detail = std::string("exception: ") + e.what();
  }
  return g;
}

}  // namespace

SelfCheckReport run_selfcheck(const Instance& inst, uint64_t seed) {
  const HyperCurve& C = *inst.curve;
  const CoverModel& M = *inst.cover;
  const FieldCtx& F = C.field();
  const int g = C.genus();
  SelfCheckReport rep;

  rep.groups.push_back(run_group("field-axioms", [&](auto check) {
    std::mt19937_64 rng(seed + 1);
    for (int i = 0; i < 100; ++i) {
      Fq a = Fq::from_index(F, static_cast<int64_t>(rng() % F.order()));
      Fq b = Fq::from_index(F, static_cast<int64_t>(rng() % F.order()));
      Fq c = Fq::from_index(F, static_cast<int64_t>(rng() % F.order()));
      check((a + b) + c == a + (b + c), "associativity of +");
      check((a * b) * c == a * (b * c), "associativity of *");
      check(a * (b + c) == a * b + a * c, "distributivity");
      if (!a.is_zero()) check(a * a.inv() == Fq::one(F), "inverses");
    }
  }));

  rep.groups.push_back(run_group("riemann-roch", [&](auto check) {
    std::mt19937_64 rng(seed + 2);
    auto pts = C.rational_points(1);
    DivisorX K = C.canonical_divisor();
    for (int i = 0; i < 10; ++i) {
      DivisorX D;
      int n = static_cast<int>(rng() % 4);
      for (int j = 0; j < n; ++j)
        D.add(pts[rng() % pts.size()], 1 - static_cast<int64_t>(rng() % 3));
      int64_t target = static_cast<int64_t>(rng() % (2 * g + 4)) - 2;
      D.add(PointX::infinity(), target - D.degree());
      check(C.rr_dim(D) - C.rr_dim(K - D) == static_cast<int>(target) - g + 1,
            "dim L(D) - dim L(K-D) = deg D - g + 1");
    }
  }));

  rep.groups.push_back(run_group("jacobian", [&](auto check) {
    std::mt19937_64 rng(seed + 3);
    auto pts = C.rational_points(1);
    auto rand_class = [&] {
      DivisorX D;
      int n = static_cast<int>(rng() % 3);
      for (int j = 0; j < n; ++j)
        D.add(pts[rng() % pts.size()], 1 - static_cast<int64_t>(rng() % 3));
      return class_of_divisor(C, D);
    };
    for (int i = 0; i < 25; ++i) {
      PicClass a = rand_class(), b = rand_class(), c = rand_class();
      check((a + b) + c == a + (b + c), "class associativity");
      check(a + b == b + a, "class commutativity");
      check((a + (-a)).with_degree(0).is_trivial(), "class inverses");
    }
    auto tt = enumerate_two_torsion(C);
    check(static_cast<int64_t>(tt.size()) == (int64_t{1} << (2 * g)),
          "2-torsion count 2^{2g}");
    for (auto& [idx, T] : tt) check((T + T).is_trivial(), "2-torsion squares to 0");
  }));

  rep.groups.push_back(run_group("cover", [&](auto check) {
    std::mt19937_64 rng(seed + 4);
    auto pts = C.rational_points(1);
    for (const PointX& P : pts) {
      auto [q0, q1] = M.points_above(P);
      check(q0 != q1, "fibers have two points");
      check(M.sigma(q0) == q1 && M.sigma(q1) == q0, "sigma swaps the fiber");
      check(M.sigma(M.sigma(q0)) == q0, "sigma is an involution");
    }
    for (int i = 0; i < 25; ++i) {
      DivisorX D;
      int n = static_cast<int>(rng() % 4);
      for (int j = 0; j < n; ++j)
        D.add(pts[rng() % pts.size()], 1 - static_cast<int64_t>(rng() % 3));
      CoverDivisor pD = M.pullback_divisor(D);
      check(M.norm_divisor(pD) == D * 2, "Nm of pullback doubles");
      check(M.sigma_star(pD) == pD, "pullback is sigma-invariant");
    }
    check(M.genus() == 2 * g - 1, "cover genus 2g-1");
    check(static_cast<int>(M.a_sections().size()) == g, "h0(K) = g");
    check(static_cast<int>(M.b_sections().size()) == g - 1, "h0(KT) = g-1");
  }));

  rep.groups.push_back(run_group("spectral", [&](auto check) {
    std::mt19937_64 rng(seed + 5);
    for (int i = 0; i < 5; ++i) {
      BasePoint bp = sample_base_point(M, rng);
      DivisorX D = div_of_b(bp);
      check(D.degree() == 2 * g - 2, "deg div(b) = 2g-2");
      check(D.is_reduced(), "div(b) reduced");
      SpectralInvariants inv = spectral_invariants(bp);
      check(inv.arithmetic_genus == 4 * g - 3, "p_a = 4g-3");
      check(inv.geometric_genus == 2 * g - 1, "geometric genus 2g-1");
      int tested = 0;
      for (const PointX& P : C.rational_points(1)) {
        if (P.is_infinity() || P.is_weierstrass()) continue;
        auto ev = eigenvalues_at(bp, P);
        Fq av = C.eval_function(bp.a, P), bv = C.eval_function(bp.b, P);
        Fq sum = Fq::zero(F), prod = Fq::one(F);
        for (const Fq& e : ev) {
          sum = sum + e;
          prod = prod * e;
        }
        check(sum == av + av && prod == av * av - bv * bv,
              "eigenvalue sum/product");
        if (++tested == 5) break;
      }
    }
  }));

  rep.groups.push_back(run_group("strata", [&](auto check) {
    std::mt19937_64 rng(seed + 6);
    BasePoint bp = sample_base_point(M, rng);
    PicClass Kinv = PicClass::trivial(C, -(2 * g - 2));
    PicClass expected_det = *inst.M + *inst.M + Kinv;
    auto strata = enumerate_strata(bp);
    check(static_cast<int64_t>(strata.size()) == (int64_t{1} << (2 * g - 2)),
          "2^{2g-2} strata");
    int very_stable = 0;
    for (auto& [D, dim] : strata) {
      check(dim == D.degree(), "dim V(D) = deg D");
      auto supp = D.support();
      for (uint32_t pat = 0; pat < (1u << supp.size()); ++pat) {
        std::map<PointX, Fq> alpha;
        for (size_t i = 0; i < supp.size(); ++i)
          alpha.emplace(supp[i], (pat & (1u << i)) ? Fq::one(F) : Fq::zero(F));
        StratumPoint pt = make_stratum_point(bp, *inst.M, D, alpha);
        DivisorX Dp = dprime_of(pt);
        check(!(D.degree() < g - 1 && Dp.degree() < g - 1),
              "never both departures below g-1");
        check(cstar_limit(pt).det_class == expected_det, "det class M^2 K^{-1}");
        if (limit_classification(pt) == LimitClass::VeryStableVHS) ++very_stable;
      }
    }
    check(very_stable == 2, "exactly two very stable points");
    check(symbolic_higgs_identity().all_ok(), "symbolic matrix identities");
  }));

  rep.groups.push_back(run_group("wobbly", [&](auto check) {
    std::mt19937_64 rng(seed + 7);
    DeltaInfo info = delta_constraints(g);
    check(info.delta_max == (g % 2 ? g - 1 : g - 2), "delta_max rule");
    for (int d : info.admissible) check(d % 2 == 0 && d <= 2 * g - 2, "delta range");
    auto pts = C.rational_points(1);
    for (int i = 0; i < 10; ++i) {
      int r = 2 * static_cast<int>(rng() % g);
      CoverDivisor R;
      for (int j = 0; j < r; ++j) {
        auto [q0, q1] = M.points_above(pts[rng() % pts.size()]);
        R.add(rng() % 2 ? q0 : q1, 1);
      }
      int delta = 2 * g - 2 - r;
      PicClass F0 = PicClass::trivial(C, 1 - g + delta / 2);
      try {
        MembershipVerdict v1 = check_membership(M, F0, R);
        MembershipVerdict v2 = check_membership(M, F0, M.sigma_star(R));
        check(v1.accepted == v2.accepted, "sigma invariance of membership");
        if (v1.accepted)
          check(v1.datum->det_class == v2.datum->det_class,
                "sigma invariance of det class");
      } catch (const SearchBoundExceeded&) {
        // candidate left the ambient field; not a verdict
      }
    }
  }));

  return rep;
}

}  // namespace hitchin
