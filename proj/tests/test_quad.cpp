#include <gtest/gtest.h>

#include "ads2/quad.hpp"

using namespace ads2;

namespace {

SpinorFn plane(int n) {
  return [n](const Point& p) {
    Spinor s;
    s << std::exp(cplx(0.0, 2.0 * n * p.rho)) / std::sqrt(pi), 0.0;
    return s;
  };
}

SpinorFn power(double r) {
  return [r](const Point& p) {
    Spinor s;
    s << std::pow(p.eps, r), 0.5 * std::pow(p.eps, r);
    return s;
  };
}

}  // namespace

TEST(Integrate, SmoothIntegrands) {
  for (QuadScheme sch : {QuadScheme::DoubleExponential, QuadScheme::GaussLegendreComposite}) {
    QuadratureSpec spec;
    spec.scheme = sch;
    QuadResult r = integrate([](const Point& p) { return cplx(p.c); }, spec);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), 2.0, 1e-12);
    r = integrate([](const Point& p) { return cplx(p.s * p.s, p.rho); }, spec);
    EXPECT_NEAR(r.value.real(), 0.5 * pi, 1e-12);
    EXPECT_NEAR(r.value.imag(), 0.0, 1e-12);
  }
}

TEST(Integrate, EndpointSingularity) {
  // int (pi/2 - rho)^{-1/2} = 2 sqrt(pi)
  QuadResult r = integrate([](const Point& p) { return cplx(1.0 / std::sqrt(p.upper ? p.eps : pi - p.eps)); });
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), 2.0 * std::sqrt(pi), 1e-10);
}

TEST(Integrate, DivergentIntegralIsFlagged) {
  QuadResult r = integrate([](const Point& p) { return cplx(1.0 / p.eps); });
  EXPECT_FALSE(r.converged);
  EXPECT_THROW(inner_product(power(-0.5), power(-0.5)), convergence_error);
}

TEST(InnerProduct, PlaneWavesAreOrthonormal) {
  std::vector<SpinorFn> fs;
  for (int n = -3; n <= 3; ++n) fs.push_back(plane(n));
  Eigen::MatrixXcd g = gram_matrix(fs);
  EXPECT_LT((g - Eigen::MatrixXcd::Identity(7, 7)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(norm_squared(plane(2)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(inner_product(plane(1), plane(-1))), 0.0, 1e-12);
}

TEST(InnerProduct, ConjugateLinearInFirstSlot) {
  SpinorFn a = plane(1);
  SpinorFn ia = [&](const Point& p) { return Spinor(cplx(0, 1) * a(p)); };
  cplx base = inner_product(a, a);
  EXPECT_NEAR(std::abs(inner_product(ia, a) - cplx(0, -1) * base), 0.0, 1e-12);
}

TEST(DivergenceProbe, SeparatesIntegrableFromDivergent) {
  EXPECT_FALSE(divergence_probe(power(-0.4), Endpoint::Plus).divergent);
  EXPECT_TRUE(divergence_probe(power(-0.5), Endpoint::Minus).divergent);
  EXPECT_TRUE(divergence_probe(power(-0.8), Endpoint::Plus).divergent);
  DivergenceVerdict v = divergence_probe(power(0.2), Endpoint::Plus);
  EXPECT_FALSE(v.divergent);
  EXPECT_EQ(v.increments.size(), 4u);
  EXPECT_LT(v.last_ratio, 1e-3);
}

TEST(ExponentFit, RecoversPowerLaws) {
  for (double r : {-0.7, -0.3, 0.0, 0.45}) {
    ExponentFit f = endpoint_exponent_fit(power(r), Endpoint::Plus);
    EXPECT_NEAR(f.exponent, 2 * r, 1e-10) << r;
    EXPECT_FALSE(f.log_flag);
  }
  ExponentFit c = endpoint_exponent_fit(power(0.25), Endpoint::Minus, 1e-8, 1e-3, 24, 2);
  EXPECT_NEAR(c.exponent, 0.5, 1e-10);
}

TEST(ExponentFit, FlagsLogarithm) {
  SpinorFn f = [](const Point& p) {
    Spinor s;
    s << std::log(p.eps), 0.0;
    return s;
  };
  ExponentFit r = endpoint_exponent_fit(f, Endpoint::Plus);
  EXPECT_TRUE(r.log_flag);
  EXPECT_NEAR(r.log_coefficient, 2.0, 1e-8);
  EXPECT_NEAR(r.log_exponent, 0.0, 1e-8);
  EXPECT_THROW(endpoint_exponent_fit(f, Endpoint::Plus, 1e-3, 1e-8), ads2::domain_error);
}
