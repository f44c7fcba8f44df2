#include <gtest/gtest.h>

#include "ads2/fock.hpp"

using namespace ads2;

namespace {

double vec_norm(const Eigen::VectorXcd& v) { return v.norm(); }

}  // namespace

TEST(TruncatedFock, CanonicalAnticommutators) {
  for (FockModel m : {FockModel::Massless, FockModel::TypeIII})
    for (int N : {3, 4, 5}) {
      TruncatedFock F(m, N);
      EXPECT_EQ(F.dim(), 1 << (2 * N));
      EXPECT_EQ(anticommutator_defect(F), 0.0);
    }
}

TEST(TruncatedFock, VacuumIsAnnihilated) {
  TruncatedFock F(FockModel::TypeIII, 4);
  Eigen::VectorXcd v = F.vacuum();
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(vec_norm(F.a(j) * v), 0.0);
    EXPECT_EQ(vec_norm(F.b(j + 1) * v), 0.0);
  }
  EXPECT_THROW(F.b(0), ads2::domain_error);
  EXPECT_THROW(TruncatedFock(FockModel::Massless, 2), ads2::domain_error);
  EXPECT_THROW(TruncatedFock(FockModel::Massless, 7), ads2::domain_error);
}

TEST(TruncatedFock, ChargeCountsParticlesMinusAntiparticles) {
  TruncatedFock F(FockModel::Massless, 3);
  Eigen::VectorXcd s = F.ad(1) * F.ad(0) * F.bd(2) * F.vacuum();
  int idx;
  s.cwiseAbs().maxCoeff(&idx);
  EXPECT_EQ(F.charge(idx), 1);
}

TEST(Charges, MasslessVacuum) {
  FockSystem fs = build_fock(FockModel::Massless, 0.25, 4);
  Eigen::VectorXcd v = fs.space.vacuum();
  EXPECT_EQ(vec_norm(fs.ops.Lm * v), 0.0);
  EXPECT_LT(vec_norm(fs.ops.L0 * v - 0.03125 * v), 1e-15);
  EXPECT_NEAR(fs.ops.lambda, 0.03125, 1e-15);
}

TEST(Charges, TypeIIIZeroModeState) {
  FockSystem fs = build_fock(FockModel::TypeIII, 0.25, 4);
  Eigen::VectorXcd s = fs.space.ad(0) * fs.space.vacuum();
  EXPECT_LT(vec_norm(fs.ops.L0 * s - 0.09375 * s), 1e-15);
}

TEST(Charges, CommutatorHoldsBelowTheEdge) {
  for (auto [m, p] : std::vector<std::pair<FockModel, double>>{
           {FockModel::Massless, 0.25}, {FockModel::Massless, 0.1}, {FockModel::TypeIII, 0.0}, {FockModel::TypeIII, 0.4}}) {
    FockSystem fs = build_fock(m, p, 5);
    CommutatorReport r = commutator_check(fs);
    EXPECT_LT(r.max_admissible, 1e-12) << p;
    EXPECT_GT(r.admissible_states, 0);
    EXPECT_GT(r.max_edge, 1e-3) << p;
  }
}

TEST(Charges, PairStateCommutator) {
  FockSystem fs = build_fock(FockModel::Massless, 0.25, 5);
  const auto& F = fs.space;
  Eigen::VectorXcd s = F.ad(1) * F.bd(0) * F.vacuum();
  Eigen::VectorXcd d = (fs.ops.Lp * fs.ops.Lm - fs.ops.Lm * fs.ops.Lp) * s - 2.0 * (fs.ops.L0 * s);
  EXPECT_LT(d.norm(), 1e-12);
  Eigen::VectorXcd edge = F.ad(4) * F.vacuum();
  Eigen::VectorXcd e = (fs.ops.Lp * fs.ops.Lm - fs.ops.Lm * fs.ops.Lp) * edge - 2.0 * (fs.ops.L0 * edge);
  EXPECT_GT(e.norm(), 1e-3);
}

TEST(Charges, RaisingIsMinusAdjointOfLowering) {
  for (FockModel m : {FockModel::Massless, FockModel::TypeIII}) {
    FockSystem fs = build_fock(m, 0.3, 4);
    EXPECT_LT(adjoint_defect(fs), 1e-15);
  }
}

TEST(Vacuum, WeightsAndDegeneracy) {
  struct C {
    FockModel m;
    double p, weight;
    int deg;
  };
  for (C c : std::vector<C>{{FockModel::Massless, 0.25, 0.03125, 1},
                            // effective mu of -0.25 is 0.75
                            {FockModel::Massless, -0.25, 0.03125, 1},
                            {FockModel::Massless, 0.1, 0.08, 1},
                            {FockModel::Massless, 0.0, 0.125, 2},
                            {FockModel::TypeIII, 0.0, 0.125, 2},
                            {FockModel::TypeIII, 0.25, 0.09375, 2},
                            {FockModel::TypeIII, 0.4, 0.045, 2}}) {
    VacuumSector v = vacuum_sector(build_fock(c.m, c.p, 5));
    EXPECT_NEAR(v.weight, c.weight, 1e-14) << c.p;
    EXPECT_EQ(v.degeneracy, c.deg) << c.p;
    EXPECT_EQ(v.label.series, Series::DiscretePlus);
    EXPECT_NEAR(v.label.weight, c.weight, 1e-14);
  }
}

TEST(Vacuum, NeutralLevelsAreLambdaPlusIntegers) {
  FockSystem fs = build_fock(FockModel::Massless, 0.25, 5);
  std::vector<double> lv = l0_levels(fs, 0);
  ASSERT_FALSE(lv.empty());
  EXPECT_NEAR(lv.front(), fs.ops.lambda, 1e-14);
  for (double x : lv) {
    double k = x - fs.ops.lambda;
    EXPECT_NEAR(k, std::round(k), 1e-12);
    EXPECT_GE(std::round(k), 0.0);
  }
}

TEST(Vacuum, EffectiveMu) {
  EXPECT_NEAR(massless_lowest_frequency(0.25), 0.25, 1e-15);
  EXPECT_NEAR(massless_lowest_frequency(-0.25), 0.75, 1e-15);
  EXPECT_NEAR(massless_lowest_frequency(1.5), 0.5, 1e-15);
}
