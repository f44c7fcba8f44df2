#include <gtest/gtest.h>

#include "ads2/algebra.hpp"

using namespace ads2;
using namespace ads2::algebra;

namespace {

Spinor sample() {
  Spinor s;
  s << cplx(0.3, -1.2), cplx(-0.7, 0.4);
  return s;
}

}  // namespace

TEST(Clifford, AnticommutatorsGiveMetric) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Mat2 ac = gamma(a) * gamma(b) + gamma(b) * gamma(a);
      EXPECT_LT((ac - 2.0 * eta()(a, b) * Mat2::Identity()).norm(), 1e-15) << a << b;
    }
}

TEST(Clifford, SpinGenerator) {
  EXPECT_LT((sigma01() - 0.5 * gamma0() * gamma1()).norm(), 1e-15);
  EXPECT_LT((charge_matrix() * charge_matrix() - Mat2::Identity()).norm(), 1e-15);
}

TEST(Killing, CommutatorsCloseOnSl2) {
  auto close = [](std::array<double, 3> a, std::array<double, 3> b, double sign) {
    double d = 0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - sign * b[i]));
    return d;
  };
  for (double t : {-1.1, 0.0, 0.4, 2.5})
    for (double r : {-1.2, -0.3, 0.3, 1.4}) {
      EXPECT_LT(close(commutator_coefficients(xi0(), xi1(), t, r), coefficients(xi2(), t, r), 1.0), 1e-14);
      EXPECT_LT(close(commutator_coefficients(xi0(), xi2(), t, r), coefficients(xi1(), t, r), -1.0), 1e-14);
      EXPECT_LT(close(commutator_coefficients(xi1(), xi2(), t, r), coefficients(xi0(), t, r), -1.0), 1e-14);
    }
}

TEST(Killing, PartialsMatchFiniteDifferences) {
  const double h = 1e-6;
  for (int id = 0; id < 3; ++id) {
    KillingField k = killing(id);
    for (const Coefficient* c : {&k.a_t, &k.a_rho, &k.a_sigma}) {
      double t = 0.7, r = -0.2;
      EXPECT_NEAR(c->dt(t, r), (c->f(t + h, r) - c->f(t - h, r)) / (2 * h), 1e-8);
      EXPECT_NEAR(c->drho(t, r), (c->f(t, r + h) - c->f(t, r - h)) / (2 * h), 1e-8);
    }
  }
  EXPECT_THROW(killing(3), ads2::domain_error);
}

TEST(Symmetries, ChargeConjugationIsInvolution) {
  Spinor s = sample();
  EXPECT_LT((charge_conjugate(charge_conjugate(s)) - s).norm(), 1e-15);
  Spinor want = -gamma1() * s.conjugate();
  EXPECT_LT((charge_conjugate(s) - want).norm(), 1e-15);
}

TEST(Symmetries, ParitySquaresToIdentity) {
  Spinor s = sample();
  EXPECT_LT((parity_at(parity_at(s)) - s).norm(), 1e-15);
}

TEST(Symmetries, ChiralRotationComposes) {
  Spinor s = sample();
  Spinor twice = chiral_rotation(0.3, chiral_rotation(0.5, s));
  EXPECT_LT((twice - chiral_rotation(0.8, s)).norm(), 1e-15);
  Mat2 gen = -2.0 * I * sigma01();
  Mat2 small = chiral_rotation(1e-7);
  EXPECT_LT(((small - Mat2::Identity()) / 1e-7 - gen).norm(), 1e-6);
  // conjugation reverses the rotation angle
  EXPECT_LT((charge_conjugate(chiral_rotation(0.4, s)) - chiral_rotation(-0.4, charge_conjugate(s))).norm(), 1e-15);
}
