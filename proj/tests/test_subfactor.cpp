#include <gtest/gtest.h>

#include <set>

#include "wzw/subfactor.hpp"

using namespace wzw;

TEST(FixedPoint, Examples) {
  const TheoryParams t2(2, 8);
  EXPECT_EQ(fixed_point_test(t2, Weight({4})).exponent, 1);
  EXPECT_TRUE(fixed_point_test(t2, Weight({4})).nontrivial);
  for (int n = 2; n <= 5; ++n) {
    const TheoryParams tp(n, 2 * n);
    EXPECT_EQ(fixed_point_test(tp, tp.v()).exponent, n);
    EXPECT_FALSE(fixed_point_test(tp, tp.v()).nontrivial);
  }
  const TheoryParams t4(4, 8);
  EXPECT_EQ(fixed_point_test(t4, Weight({2, 2, 2})).exponent, 1);
  // extended labels (2,0,2,0) have period 2
  EXPECT_EQ(fixed_point_test(TheoryParams(4, 4), Weight({0, 2, 0})).exponent, 2);
}

TEST(Maximality, SU2ClosingExample) {
  for (int k : {1, 3, 4, 5, 6, 7, 8, 10, 12}) {
    const ModularData md(TheoryParams(2, k));
    for (const auto& r : maximality_table(md)) {
      const bool middle = 2 * r.weight[0] == k;
      EXPECT_EQ(r.verdict, middle ? Verdict::NotMaximal : Verdict::Maximal) << k << " " << r.weight.str();
      if (middle) {
        EXPECT_EQ(r.reason, MaximalityRule::FixedPoint);
      }
    }
  }
}

TEST(Maximality, SpecialCaseK2N2) {
  const ModularData md(TheoryParams(2, 2));
  for (const auto& r : maximality_table(md)) {
    EXPECT_EQ(r.verdict, Verdict::Maximal);
    EXPECT_EQ(r.reason, MaximalityRule::SpecialCase_k_n_2);
  }
}

TEST(Maximality, CoprimeGenericLevelsAllMaximal) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{3, 5}, {4, 3}, {3, 7}, {5, 2}, {4, 7}}) {
    const ModularData md(TheoryParams(n, k));
    for (const auto& r : maximality_table(md)) EXPECT_EQ(r.verdict, Verdict::Maximal) << n << "," << k;
  }
}

TEST(Maximality, ReasonsFollowDecisionOrder) {
  const ModularData md(TheoryParams(3, 6));  // generic: 6 not in {1, 3, 5}
  for (const auto& r : maximality_table(md)) {
    const bool fixed = fixed_point_test(md.params(), r.weight).nontrivial;
    EXPECT_EQ(r.reason, fixed ? MaximalityRule::FixedPoint : MaximalityRule::GenericLevel);
  }
  const ModularData ex(TheoryParams(3, 5));  // k = n + 2
  for (const auto& r : maximality_table(ex)) EXPECT_EQ(r.reason, MaximalityRule::SvNonzero);
}

TEST(Maximality, ConjugationSymmetric) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {4, 4}, {4, 6}, {3, 6}}) {
    const ModularData md(TheoryParams(n, k));
    for (const Weight& x : md.params().alcove()) {
      const auto a = is_maximal(md, x);
      const auto b = is_maximal(md, conjugate(x));
      EXPECT_EQ(a.verdict, b.verdict) << x.str();
      if (a.verdict == Verdict::NotMaximal) {
        EXPECT_EQ(a.reason, MaximalityRule::FixedPoint);
      }
    }
  }
}

TEST(Maximality, UndeterminedOnlyAtExceptionalLevels) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 8; ++k) {
      const ModularData md(TheoryParams(n, k));
      for (const auto& r : maximality_table(md)) {
        if (r.verdict == Verdict::Undetermined) {
          EXPECT_TRUE(exceptional_level(n, k));
          EXPECT_FALSE(fixed_point_test(md.params(), r.weight).nontrivial);
          EXPECT_LT(std::abs(r.s_v_value), 1e-8 * md.max_abs_s());
        }
        if (!exceptional_level(n, k) && !(n == 2 && k == 2)) {
          EXPECT_EQ(r.verdict == Verdict::NotMaximal, fixed_point_test(md.params(), r.weight).nontrivial);
        }
      }
    }
  }
}

TEST(PrimePower, Examples) {
  {
    const ModularData md(TheoryParams(2, 6));
    const PrimePowerReport r = prime_power_consistency(md);
    EXPECT_EQ(r.prime, 2);
    EXPECT_EQ(r.s_v_zeros, std::vector<Weight>{Weight({3})});
    EXPECT_TRUE(r.consistent());
  }
  {
    const ModularData md(TheoryParams(3, 5));
    const PrimePowerReport r = prime_power_consistency(md);
    EXPECT_TRUE(r.s_v_zeros.empty());
    EXPECT_TRUE(r.fixed_points.empty());
    EXPECT_TRUE(r.consistent());
  }
  EXPECT_THROW(prime_power_consistency(ModularData(TheoryParams(2, 2))), ValidationError);
  EXPECT_THROW(prime_power_consistency(ModularData(TheoryParams(2, 4))), ValidationError);
  EXPECT_EQ(prime_power_base(27), 3);
  EXPECT_EQ(prime_power_base(13), 13);
  EXPECT_EQ(prime_power_base(12), 0);
  EXPECT_EQ(prime_power_base(1), 0);
}

TEST(LatticeEvidence, SU2Level8) {
  const ModularData md(TheoryParams(2, 8));
  const LatticeEvidence e = lattice_evidence(md, 4);
  EXPECT_EQ(e.u, Weight({5}));
  EXPECT_EQ(e.orbit_of_u, (std::vector<Weight>{Weight({5}), Weight({3})}));
  EXPECT_EQ(e.v_times_fixed, (SectorSum{{Weight({3}), 1}, {Weight({5}), 1}}));
  EXPECT_TRUE(e.passed()) << (e.failures.empty() ? "" : e.failures.front());
}

TEST(LatticeEvidence, SU3Level9) {
  const ModularData md(TheoryParams(3, 9));
  const LatticeEvidence e = lattice_evidence(md, 3);
  EXPECT_EQ(e.u, Weight({4, 3}));
  const std::set<Weight> orbit(e.orbit_of_u.begin(), e.orbit_of_u.end());
  EXPECT_EQ(orbit, (std::set<Weight>{Weight({4, 3}), Weight({2, 4}), Weight({3, 2})}));
  EXPECT_TRUE(e.passed());
  EXPECT_EQ(md.params().color(e.u), 1);
}

TEST(LatticeEvidence, RejectsInvalidLevels) {
  EXPECT_THROW(lattice_evidence(ModularData(TheoryParams(2, 6)), 3), ValidationError);
  EXPECT_THROW(lattice_evidence(ModularData(TheoryParams(3, 9)), 4), ValidationError);
}

TEST(FactorizationScan, SU2Level8Survivors) {
  const ModularData md(TheoryParams(2, 8));
  const FusionTensor fusion = verlinde_tensor(md);
  const auto got = factorization_scan(md, fusion, 4);
  const std::set<std::pair<Weight, Weight>> survivors(got.begin(), got.end());
  const std::set<std::pair<Weight, Weight>> expected{{Weight({1}), Weight({4})},
                                                     {Weight({7}), Weight({4})},
                                                     {Weight({4}), Weight({1})},
                                                     {Weight({4}), Weight({7})}};
  EXPECT_EQ(survivors, expected);
  EXPECT_EQ(expected_survivors(md.params(), 4), expected);
}

TEST(FactorizationScan, SurvivorsClosedUnderOmega) {
  for (const auto& [n, nprime] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {2, 6}}) {
    const ModularData md(TheoryParams(n, n * nprime));
    const TheoryParams& tp = md.params();
    const FusionTensor fusion = verlinde_tensor(md);
    const auto got = factorization_scan(md, fusion, nprime);
    const std::set<std::pair<Weight, Weight>> s(got.begin(), got.end());
    for (const auto& [a, b] : s) {
      EXPECT_NE(a, tp.vacuum());
      for (int j = 0; j < n; ++j) {
        EXPECT_TRUE(s.count({tp.omega(a, j), b}));
        EXPECT_TRUE(s.count({a, tp.omega(b, j)}));
      }
    }
  }
}
