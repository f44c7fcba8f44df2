#pragma once

// Fixed 2x2 spinor algebra and the Killing-field coefficient functions.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "ads2/error.hpp"
#include "ads2/specfun.hpp"

namespace ads2 {

using Mat2 = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;

namespace algebra {

inline const cplx I{0.0, 1.0};

/// Minkowski metric diag(-1, 1).
inline Mat2 eta() {
  Mat2 m;
  m << -1.0, 0.0, 0.0, 1.0;
  return m;
}

inline Mat2 gamma0() {
  Mat2 m;
  m << 0.0, I, I, 0.0;
  return m;
}

inline Mat2 gamma1() {
  Mat2 m;
  m << -1.0, 0.0, 0.0, 1.0;
  return m;
}

inline Mat2 gamma(int a) { return a == 0 ? gamma0() : gamma1(); }

/// Sigma^{01} = [gamma^0, gamma^1]/4.
inline Mat2 sigma01() { return 0.25 * (gamma0() * gamma1() - gamma1() * gamma0()); }

/// C = -2 Sigma^{01}.
inline Mat2 charge_matrix() { return -2.0 * sigma01(); }

/// R(theta) = exp(-2 i theta Sigma^{01}), a real rotation.
inline Mat2 chiral_rotation(double theta) {
  Mat2 m;
  m << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return m;
}

/// Phi^c = C (gamma^0)^T conj(Phi) = -gamma^1 conj(Phi).
inline Spinor charge_conjugate(const Spinor& phi) {
  return charge_matrix() * gamma0().transpose() * phi.conjugate();
}

inline Spinor chiral_rotation(double theta, const Spinor& phi) { return chiral_rotation(theta) * phi; }

/// (p Phi)(rho) = i gamma^0 Phi(-rho), given the value at -rho.
inline Spinor parity_at(const Spinor& phi_at_minus_rho) { return I * gamma0() * phi_at_minus_rho; }

/// Parity over a sampled grid.  The grid must be symmetric about rho = 0.
inline std::vector<Spinor> parity(const std::vector<double>& grid, const std::vector<Spinor>& values,
                                  double tol = 1e-14) {
  if (grid.size() != values.size()) throw domain_error("parity: grid and values differ in size");
  const std::size_t n = grid.size();
  std::vector<Spinor> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    if (std::abs(grid[i] + grid[j]) > tol) throw domain_error("parity: grid is not symmetric about 0");
    out[i] = parity_at(values[j]);
  }
  return out;
}

// ------------------------------------------------------------ Killing fields

/// Scalar coefficient a(t, rho) with both first partials.
struct Coefficient {
  std::function<double(double, double)> f, dt, drho;
};

/// Spinorial Lie derivative  a_t d/dt + a_rho d/drho + a_sigma Sigma^{01}.
struct KillingField {
  Coefficient a_t, a_rho, a_sigma;
};

inline KillingField xi0() {
  auto zero = [](double, double) { return 0.0; };
  auto one = [](double, double) { return 1.0; };
  return {{one, zero, zero}, {zero, zero, zero}, {zero, zero, zero}};
}

inline KillingField xi1() {
  using std::cos, std::sin;
  return {{[](double t, double r) { return cos(t) * sin(r); }, [](double t, double r) { return -sin(t) * sin(r); },
           [](double t, double r) { return cos(t) * cos(r); }},
          {[](double t, double r) { return sin(t) * cos(r); }, [](double t, double r) { return cos(t) * cos(r); },
           [](double t, double r) { return -sin(t) * sin(r); }},
          {[](double t, double r) { return cos(t) * cos(r); }, [](double t, double r) { return -sin(t) * cos(r); },
           [](double t, double r) { return -cos(t) * sin(r); }}};
}

inline KillingField xi2() {
  using std::cos, std::sin;
  return {{[](double t, double r) { return -sin(t) * sin(r); }, [](double t, double r) { return -cos(t) * sin(r); },
           [](double t, double r) { return -sin(t) * cos(r); }},
          {[](double t, double r) { return cos(t) * cos(r); }, [](double t, double r) { return -sin(t) * cos(r); },
           [](double t, double r) { return -cos(t) * sin(r); }},
          {[](double t, double r) { return -sin(t) * cos(r); }, [](double t, double r) { return -cos(t) * cos(r); },
           [](double t, double r) { return sin(t) * sin(r); }}};
}

inline KillingField killing(int id) {
  switch (id) {
    case 0: return xi0();
    case 1: return xi1();
    case 2: return xi2();
  }
  throw domain_error("killing: id must be 0, 1 or 2");
}

/// Coefficients (t, rho, sigma) of the commutator [X, Y] at (t, rho).
/// The Sigma terms commute with each other, so only the derivative parts act.
inline std::array<double, 3> commutator_coefficients(const KillingField& x, const KillingField& y, double t,
                                                     double r) {
  auto act = [&](const KillingField& v, const Coefficient& c) {
    return v.a_t.f(t, r) * c.dt(t, r) + v.a_rho.f(t, r) * c.drho(t, r);
  };
  return {act(x, y.a_t) - act(y, x.a_t), act(x, y.a_rho) - act(y, x.a_rho),
          act(x, y.a_sigma) - act(y, x.a_sigma)};
}

inline std::array<double, 3> coefficients(const KillingField& x, double t, double r) {
  return {x.a_t.f(t, r), x.a_rho.f(t, r), x.a_sigma.f(t, r)};
}

}  // namespace algebra
}  // namespace ads2
