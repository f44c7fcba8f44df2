#include <gtest/gtest.h>

#include "ads2/reps.hpp"

using namespace ads2;

namespace {

const cplx I{0.0, 1.0};

}  // namespace

TEST(Ladder, LowestDirichletIModeIsAnnihilated) {
  FamilyModes fam(Family::DirichletI, 0.25);
  LadderResult r = apply_ladder(fam, 0, -1);
  EXPECT_FALSE(r.target.has_value());
  EXPECT_LT(r.image_norm, 1e-8);
  LadderResult h = apply_ladder(fam, -1, +1);
  EXPECT_LT(h.image_norm, 1e-8);
}

TEST(Ladder, RaisingTheLowestDirichletIMode) {
  FamilyModes fam(Family::DirichletI, 0.25);
  LadderResult r = apply_ladder(fam, 0, +1);
  ASSERT_TRUE(r.target.has_value());
  EXPECT_EQ(*r.target, 1);
  EXPECT_LT(std::abs(r.coefficient - (-I * std::sqrt(1.5))), 1e-8);
  EXPECT_LT(std::abs(r.printed - r.coefficient), 1e-8);
  EXPECT_LT(r.residual, 1e-8);
}

TEST(Ladder, DirichletIIIZeroModeLinks) {
  FamilyModes fam(Family::DirichletIII, 0.25);
  const double c0 = std::sqrt(0.25 - 0.0625);
  LadderResult up = apply_ladder(fam, 0, +1);
  EXPECT_LT(std::abs(up.coefficient - (-I * c0)), 1e-8);
  EXPECT_LT(up.residual, 1e-8);
  // the lowering link has the same magnitude and is tied to the raising
  // link from n = -1 by L_-^dagger = -L_+
  LadderResult down = apply_ladder(fam, 0, -1);
  EXPECT_NEAR(std::abs(down.coefficient), c0, 1e-8);
  EXPECT_LT(down.residual, 1e-8);
  cplx from_below = apply_ladder(fam, -1, +1).coefficient;
  EXPECT_LT(std::abs(down.coefficient + std::conj(from_below)), 1e-8);
}

TEST(Ladder, MasslessCoefficientsMatchClosedForm) {
  BetaPair bp{0.3, 0.5};
  FamilyModes fam(Family::MasslessBeta, 0.0, bp);
  for (int j = -2; j <= 2; ++j)
    for (int s : {-1, +1}) {
      LadderResult r = apply_ladder(fam, j, s);
      double w = mode_frequency(Family::MasslessBeta, 0.0, j, bp);
      cplx want = I * ((j + 1) % 2 == 0 ? 1.0 : -1.0) * (0.5 + s * w);
      EXPECT_LT(std::abs(r.coefficient - want), 1e-8) << j << " " << s;
      EXPECT_LT(r.residual, 1e-8);
    }
}

TEST(Ladder, RealizationIsUnitaryAndSatisfiesTheCommutator) {
  for (auto [f, M] : std::vector<std::pair<Family, double>>{
           {Family::DirichletI, 0.25}, {Family::DirichletII, 0.1}, {Family::DirichletIII, 0.4}, {Family::DirichletI, 1.3}}) {
    FamilyModes fam(f, M);
    for (int n = -2; n <= 2; ++n) {
      cplx cp = realized_coefficient(fam, n, +1), cm_next = realized_coefficient(fam, n + 1, -1);
      EXPECT_LT(std::abs(cp + std::conj(cm_next)), 1e-8) << to_string(f) << " n=" << n;
      cplx lhs = realized_coefficient(fam, n - 1, +1) * realized_coefficient(fam, n, -1) - cm_next * cp;
      EXPECT_LT(std::abs(lhs - 2.0 * fam[n].omega), 1e-8) << to_string(f) << " n=" << n;
    }
  }
}

TEST(Casimir, MatchesMassRelation) {
  struct C {
    Family f;
    double M;
    BetaPair bp;
  };
  for (C c : std::vector<C>{{Family::MasslessBeta, 0.0, {0.4, 0.9}},
                            {Family::DirichletI, 0.25, {}},
                            {Family::DirichletII, 0.25, {}},
                            {Family::DirichletIII, 0.25, {}},
                            {Family::DirichletIV, 0.25, {}},
                            {Family::DirichletI, 1.3, {}},
                            {Family::HalfIntegerV, 1.5, {}}}) {
    FamilyModes fam(c.f, c.M, c.bp);
    CasimirReport r = casimir_check(fam);
    EXPECT_LT(r.spread, 1e-9) << to_string(c.f);
    EXPECT_NEAR(r.mean, c.M * c.M - 0.25, 1e-9) << to_string(c.f);
  }
}

TEST(Classification, DiscreteSeries) {
  Classification c = classify(Family::DirichletI, 1.0);
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(c.parts[0], (UIRLabel{Series::DiscretePlus, 1.5, 0.0, 0.0}));
  EXPECT_EQ(c.parts[1], (UIRLabel{Series::DiscreteMinus, 1.5, 0.0, 0.0}));
  EXPECT_NEAR(c.q, 0.75, 1e-9);
  Classification d = classify(Family::DirichletII, 0.25);
  EXPECT_EQ(d.parts[0], (UIRLabel{Series::DiscretePlus, 0.25, 0.0, 0.0}));
  Classification v = classify(Family::HalfIntegerV, 1.5);
  ASSERT_EQ(v.parts.size(), 1u);
  EXPECT_EQ(v.parts[0], (UIRLabel{Series::DiscretePlus, 2.0, 0.0, 0.0}));
}

TEST(Classification, ComplementarySeries) {
  for (Family f : {Family::DirichletIII, Family::DirichletIV}) {
    Classification c = classify(f, 0.25);
    ASSERT_EQ(c.parts.size(), 1u);
    EXPECT_EQ(c.parts[0], (UIRLabel{Series::Complementary, 0.75, 0.0, 0.0}));
    EXPECT_FALSE(c.split);
  }
}

TEST(Classification, MasslessSeries) {
  Classification mock = classify(Family::MasslessBeta, 0.0, {0.25 * pi, 0.25 * pi});
  ASSERT_EQ(mock.parts.size(), 2u);
  EXPECT_EQ(mock.parts[0].series, Series::MockDiscretePlus);
  EXPECT_EQ(mock.parts[1].series, Series::MockDiscreteMinus);
  EXPECT_EQ(mock.notation(), "D+(1/2) mock + D-(1/2) mock");
  Classification p = classify(Family::MasslessBeta, 0.0, {0.15 * pi, 0.15 * pi});
  ASSERT_EQ(p.parts.size(), 1u);
  EXPECT_EQ(p.parts[0], (UIRLabel{Series::PrincipalS0, 0.0, -0.3, 0.0}));
}

TEST(Classification, FrequencySplitting) {
  EXPECT_TRUE(invariant_frequency_splitting(Family::DirichletI, 2.5));
  EXPECT_FALSE(invariant_frequency_splitting(Family::DirichletIII, 0.25));
  EXPECT_FALSE(invariant_frequency_splitting(Family::MasslessBeta, 0.0, {0.15 * pi, 0.15 * pi}));
  EXPECT_TRUE(invariant_frequency_splitting(Family::MasslessBeta, 0.0, {0.7 * pi, 0.8 * pi}));
}

TEST(MuParameter, Rows) {
  EXPECT_NEAR(mu_parameter(0.3), -0.3, 1e-15);
  EXPECT_NEAR(mu_parameter(0.9), 0.1, 1e-15);
  EXPECT_NEAR(mu_parameter(1.7), 0.3, 1e-15);
  EXPECT_THROW(mu_parameter(0.5), ads2::domain_error);
  EXPECT_THROW(mu_parameter(2.0), ads2::domain_error);
}

TEST(MuParameter, Reduction) {
  EXPECT_DOUBLE_EQ(reduce_mu(0.5), 0.5);
  EXPECT_DOUBLE_EQ(reduce_mu(-0.5), 0.5);
  EXPECT_DOUBLE_EQ(reduce_mu(1.25), 0.25);
  EXPECT_DOUBLE_EQ(reduce_mu(-2.0), 0.0);
  EXPECT_NEAR(reduce_mu(0.7), -0.3, 1e-15);
}
