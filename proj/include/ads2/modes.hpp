#pragma once

// General spatial solutions of the coupled first-order system
//   Phi1' + M sec(rho) Phi1 = w Phi2,   -Phi2' + M sec(rho) Phi2 = w Phi1
// and the normalized mode families of the invariant boundary conditions.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "ads2/algebra.hpp"
#include "ads2/error.hpp"
#include "ads2/geometry.hpp"
#include "ads2/quad.hpp"
#include "ads2/specfun.hpp"

namespace ads2 {

enum class MassRegime { Massless, Low, Generic, HalfInteger };

inline const char* to_string(MassRegime r) {
  switch (r) {
    case MassRegime::Massless: return "massless";
    case MassRegime::Low: return "low";
    case MassRegime::Generic: return "generic";
    case MassRegime::HalfInteger: return "halfInteger";
  }
  return "?";
}

/// k if M = k + 1/2 with k a nonnegative integer.
inline std::optional<int> half_integer_index(double M) {
  double k = M - 0.5;
  if (k < -1e-12) return std::nullopt;
  if (std::abs(k - std::round(k)) > 1e-12) return std::nullopt;
  return static_cast<int>(std::round(k));
}

inline MassRegime mass_regime(double M) {
  if (!(M >= 0.0) || !std::isfinite(M)) throw domain_error("mass must be finite and >= 0");
  if (M == 0.0) return MassRegime::Massless;
  if (half_integer_index(M)) return MassRegime::HalfInteger;
  if (M < 0.5) return MassRegime::Low;
  return MassRegime::Generic;
}

// ------------------------------------------------------------ coefficients

/// Gamma-ratio coefficients of the hypergeometric connection at -pi/2.
struct TransitionCoefficients {
  cplx A1, A2, B1, B2;
};

inline TransitionCoefficients transition_coefficients(double M, cplx w) {
  TransitionCoefficients t;
  t.A1 = gamma(0.5 + M) * gamma(0.5 + M) * rgamma(0.5 + M + w) * rgamma(0.5 + M - w);
  t.A2 = gamma(0.5 + M) * gamma(-0.5 - M) * rgamma(w) * rgamma(-w);
  t.B1 = gamma(1.5 - M) * gamma(-M - 0.5) * rgamma(0.5 - M + w) * rgamma(0.5 - M - w);
  t.B2 = gamma(1.5 - M) * gamma(0.5 + M) * rgamma(1.0 + w) * rgamma(1.0 - w);
  return t;
}

/// A3 = 2^k Gamma(k) Gamma(w - k) / Gamma(w + k + 1), k >= 1.
inline cplx a3_coefficient(int k, cplx w) {
  return std::pow(2.0, k) * gamma(double(k)) * gamma(w - double(k)) * rgamma(w + double(k) + 1.0);
}

// ------------------------------------------------------------ general solution

struct GeneralSolution {
  double M = 0.0;
  cplx omega{}, C1{}, C2{};
  MassRegime regime = MassRegime::Massless;
  int k = 0;  // half-integer index

  Spinor operator()(const Point& p) const {
    Spinor v;
    const cplx w = omega;
    switch (regime) {
      case MassRegime::Massless: {
        cplx cw = std::cos(w * p.rho), sw = std::sin(w * p.rho);
        v << C1 * cw + C2 * sw, -C1 * sw + C2 * cw;
        return v;
      }
      case MassRegime::HalfInteger: {
        auto f0 = ferrers_pq<cplx>(w, k, p.zm, p.zp);
        auto f1 = ferrers_pq<cplx>(w - 1.0, k, p.zm, p.zp);
        double sq = std::sqrt(p.sigma);
        cplx a = C1 * (f0.p + f1.p) + C2 * (f0.q + f1.q);
        cplx b = C1 * (f1.p - f0.p) + C2 * (f1.q - f0.q);
        v << sq * a, b / sq;
        return v;
      }
      default: {
        double sm = std::pow(p.sigma, M), sminv = 1.0 / sm;
        cplx t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
        if (C1 != 0.0) {
          t1 = (2 * M + 1) * C1 * sm * hyp2f1<cplx>(w, -w, 0.5 + M, p.zm, p.zp);
          t3 = w * C1 * p.c * sm * hyp2f1<cplx>(1.0 + w, 1.0 - w, 1.5 + M, p.zm, p.zp);
        }
        if (C2 != 0.0) {
          t2 = w * C2 * p.c * sminv * hyp2f1<cplx>(1.0 + w, 1.0 - w, 1.5 - M, p.zm, p.zp);
          t4 = (2 * M - 1) * C2 * sminv * hyp2f1<cplx>(w, -w, 0.5 - M, p.zm, p.zp);
        }
        v << t1 + t2, t3 + t4;
        return v;
      }
    }
  }

  /// (sigma^{-M} Phi1, sigma^{M} Phi2).
  Spinor weighted(const Point& p) const {
    Spinor v = (*this)(p);
    if (M == 0.0) return v;
    double sm = std::pow(p.sigma, M);
    v(0) /= sm;
    v(1) *= sm;
    return v;
  }

  SpinorFn fn() const {
    return [s = *this](const Point& p) { return s(p); };
  }
};

inline GeneralSolution general_solution(double M, cplx omega, cplx C1, cplx C2) {
  GeneralSolution s;
  s.M = M;
  s.omega = omega;
  s.C1 = C1;
  s.C2 = C2;
  s.regime = mass_regime(M);
  if (s.regime == MassRegime::HalfInteger) s.k = *half_integer_index(M);
  return s;
}

/// Residual of the coupled system at an interior point, derivatives by
/// Richardson-extrapolated central differences.  Scaled by the largest term.
inline double system_residual(const SpinorFn& f, double M, cplx w, double rho, double h = 1e-3) {
  auto d = [&](double hh) {
    return ((f(Point::at(rho + hh)) - f(Point::at(rho - hh))) / (2.0 * hh)).eval();
  };
  Spinor dv = ((4.0 * d(0.5 * h) - d(h)) / 3.0).eval();
  Spinor v = f(Point::at(rho));
  double sec = 1.0 / std::cos(rho);
  cplx r1 = dv(0) + M * sec * v(0) - w * v(1);
  cplx r2 = -dv(1) + M * sec * v(1) - w * v(0);
  double scale = std::max({1.0, std::abs(dv(0)), std::abs(dv(1)), std::abs(M * sec * v(0)), std::abs(M * sec * v(1)),
                           std::abs(w * v(0)), std::abs(w * v(1))});
  return std::max(std::abs(r1), std::abs(r2)) / scale;
}

// ------------------------------------------------------------ boundary data

/// Weighted endpoint values (Phi1~(pi/2), Phi2~(pi/2), Phi1~(-pi/2), Phi2~(-pi/2)).
struct BoundaryData {
  cplx phi1_plus{}, phi2_plus{}, phi1_minus{}, phi2_minus{};

  Eigen::Vector4cd vec() const {
    Eigen::Vector4cd v;
    v << phi1_plus, phi2_plus, phi1_minus, phi2_minus;
    return v;
  }
  static BoundaryData from(const Eigen::Vector4cd& v) { return {v(0), v(1), v(2), v(3)}; }
};

/// 4x2 matrix taking (C1, C2) to the weighted boundary data, 0 <= M < 1/2.
inline Eigen::Matrix<cplx, 4, 2> boundary_matrix(double M, cplx w) {
  if (!(M >= 0.0 && M < 0.5)) throw domain_error("boundary data needs 0 <= M < 1/2");
  Eigen::Matrix<cplx, 4, 2> B;
  if (M == 0.0) {
    cplx c = std::cos(0.5 * pi * w), s = std::sin(0.5 * pi * w);
    B << c, s, -s, c, c, -s, s, c;
    return B;
  }
  TransitionCoefficients tp = transition_coefficients(M, w), tm = transition_coefficients(-M, w);
  B << 2 * M + 1, 0.0,                                    //
      0.0, 2 * M - 1,                                     //
      (2 * M + 1) * tp.A1, 2.0 * w * tp.B2,               //
      2.0 * w * tm.B2, (2 * M - 1) * tm.A1;
  return B;
}

inline BoundaryData boundary_data(const GeneralSolution& s) {
  Eigen::Vector2cd c;
  c << s.C1, s.C2;
  return BoundaryData::from(boundary_matrix(s.M, s.omega) * c);
}

/// Weighted values sampled at endpoint distance eps, for cross-checks.
inline BoundaryData weighted_near_boundary(const GeneralSolution& s, double eps) {
  if (!(s.M >= 0.0 && s.M < 0.5)) throw domain_error("weighted components need 0 <= M < 1/2");
  Spinor a = s.weighted(Point::near(Endpoint::Plus, eps));
  Spinor b = s.weighted(Point::near(Endpoint::Minus, eps));
  return {a(0), a(1), b(0), b(1)};
}

// ------------------------------------------------------------ mode families

enum class Family { DirichletI, DirichletII, DirichletIII, DirichletIV, MasslessBeta, HalfIntegerV, HalfMassVI };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::DirichletI: return "dirichlet1";
    case Family::DirichletII: return "dirichlet2";
    case Family::DirichletIII: return "dirichlet3";
    case Family::DirichletIV: return "dirichlet4";
    case Family::MasslessBeta: return "beta";
    case Family::HalfIntegerV: return "v";
    case Family::HalfMassVI: return "vi";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  for (Family f : {Family::DirichletI, Family::DirichletII, Family::DirichletIII, Family::DirichletIV,
                   Family::MasslessBeta, Family::HalfIntegerV, Family::HalfMassVI})
    if (s == to_string(f)) return f;
  throw domain_error("unknown family '" + s + "'");
}

struct BetaPair {
  double plus = 0.0, minus = 0.0;
  double beta() const { return (plus + minus) / pi; }
  double shift() const { return 0.5 * (plus - minus); }
};

/// Throws domain_error unless (family, M, n) is admissible.
inline void check_admissible(Family f, double M, int n, BetaPair bp = {}) {
  mass_regime(M);
  switch (f) {
    case Family::DirichletI: return;
    case Family::DirichletII:
    case Family::DirichletIII:
    case Family::DirichletIV:
      if (!(M < 0.5)) throw domain_error(std::string(to_string(f)) + " requires 0 <= M < 1/2");
      return;
    case Family::MasslessBeta:
      if (M != 0.0) throw domain_error("beta family requires M = 0");
      if (!(bp.plus >= 0.0 && bp.plus <= pi && bp.minus >= 0.0 && bp.minus <= pi))
        throw domain_error("beta angles must lie in [0, pi]");
      return;
    case Family::HalfIntegerV: {
      auto k = half_integer_index(M);
      if (!k || *k < 1) throw domain_error("family v requires M = k + 1/2 with k >= 1");
      if (n < 0) throw domain_error("family v has indices n >= 0 only");
      return;
    }
    case Family::HalfMassVI:
      if (!half_integer_index(M) || *half_integer_index(M) != 0) throw domain_error("family vi requires M = 1/2");
      if (n < 0) throw domain_error("family vi has indices n >= 0 only");
      return;
  }
}

/// Frequency of index n.  For I, II and beta, n < 0 labels the negative tower
/// with n = -1 the highest negative-frequency mode.
inline double mode_frequency(Family f, double M, int n, BetaPair bp = {}) {
  switch (f) {
    case Family::DirichletI: return n >= 0 ? 0.5 + M + n : -(0.5 + M + (-n - 1));
    case Family::DirichletII: return n >= 0 ? 0.5 - M + n : -(0.5 - M + (-n - 1));
    case Family::DirichletIII:
    case Family::DirichletIV: return n;
    case Family::MasslessBeta: return n + 1.0 - bp.beta();
    case Family::HalfIntegerV: return *half_integer_index(M) + n + 1.0;
    case Family::HalfMassVI: return n + 1.0;
  }
  return 0.0;
}

/// Normalization constant as printed for the family.
inline double printed_normalization(Family f, double M, int n) {
  switch (f) {
    case Family::DirichletI: {
      int m = n >= 0 ? n : -n - 1;
      return std::exp(0.5 * (std::lgamma(m + 1.0) + std::lgamma(m + 2 * M + 1.0)) - std::lgamma(0.5 + M + m)) /
             std::pow(2.0, M + 0.5);
    }
    case Family::DirichletII: {
      int m = n >= 0 ? n : -n - 1;
      return std::exp(0.5 * (std::lgamma(m + 1.0) + std::lgamma(m - 2 * M + 1.0)) - std::lgamma(0.5 - M + m)) /
             std::pow(2.0, 0.5 - M);
    }
    case Family::DirichletIII:
    case Family::DirichletIV: {
      int m = std::abs(n);
      return 0.5 * std::exp(std::lgamma(m + 1.0) - 0.5 * (std::lgamma(0.5 + M + m) + std::lgamma(0.5 - M + m)));
    }
    case Family::MasslessBeta: return 1.0 / std::sqrt(pi);
    case Family::HalfIntegerV: {
      int k = *half_integer_index(M);
      return std::exp(0.5 * (std::lgamma(n + 1.0) + std::lgamma(2.0 * k + n + 2.0)) - std::lgamma(n + k + 1.0)) /
             std::pow(2.0, k + 1);
    }
    case Family::HalfMassVI: return std::sqrt(n + 0.5);
  }
  return 0.0;
}

namespace mode_detail {

// value and cos(rho) * d/d rho, so endpoint powers never overflow
struct VD {
  double v, d;
};
inline VD mul(VD a, VD b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline VD scale(double s, VD a) { return {s * a.v, s * a.d}; }

inline VD cos_pow(const Point& p, double a) {
  double v = std::pow(p.c, a);
  return {v, -a * p.s * v};
}
inline VD cos1(const Point& p) { return {p.c, -p.s * p.c}; }
inline VD sqrt_1ps(const Point& p) {
  double r = p.sqrt_1ps();
  return {r, 0.5 * p.c * p.c / r};
}
inline VD sqrt_1ms(const Point& p) {
  double r = p.sqrt_1ms();
  return {r, -0.5 * p.c * p.c / r};
}
inline VD sigma_pow(const Point& p, double a) {
  double v = std::pow(p.sigma, a);
  return {v, -a * v};
}
inline VD jac(const Point& p, int n, double a, double b) {
  if (n < 0) return {0.0, 0.0};
  return {jacobi_p(n, a, b, p.s), p.c * p.c * jacobi_dp(n, a, b, p.s)};
}

}  // namespace mode_detail

/// One normalized mode.  `raw` is the printed shape without its constant;
/// the stored normalization is computed by quadrature.
class SpinorMode {
 public:
  Family family = Family::DirichletI;
  double M = 0.0;
  int n = 0;
  double omega = 0.0;
  BetaPair beta{};
  double printed_norm = 0.0;
  double numeric_norm = 0.0;
  double raw_norm_error = 0.0;

  /// Shape value and cos(rho) times its rho-derivative.
  std::pair<Spinor, Spinor> raw_with_cderivative(const Point& p) const {
    using namespace mode_detail;
    VD a{0, 0}, b{0, 0};
    switch (family) {
      case Family::DirichletI:
      case Family::HalfIntegerV:
      case Family::HalfMassVI: {
        int m = n >= 0 ? n : -n - 1;
        double sg = n >= 0 ? 1.0 : -1.0;
        VD cm = cos_pow(p, M);
        a = mul(mul(cm, sqrt_1ps(p)), jac(p, m, -0.5 + M, 0.5 + M));
        b = scale(sg, mul(mul(cm, sqrt_1ms(p)), jac(p, m, 0.5 + M, -0.5 + M)));
        break;
      }
      case Family::DirichletII: {
        int m = n >= 0 ? n : -n - 1;
        double sg = n >= 0 ? -1.0 : 1.0;
        VD cm = cos_pow(p, -M);
        a = mul(mul(cm, sqrt_1ms(p)), jac(p, m, 0.5 - M, -0.5 - M));
        b = scale(sg, mul(mul(cm, sqrt_1ps(p)), jac(p, m, -0.5 - M, 0.5 - M)));
        break;
      }
      case Family::DirichletIII: {
        int m = std::abs(n);
        VD sm = sigma_pow(p, -M);
        double sg = n > 0 ? -2.0 : (n < 0 ? 2.0 : -2.0);
        a = n == 0 ? VD{0, 0} : mul(mul(sm, cos1(p)), jac(p, m - 1, 0.5 - M, 0.5 + M));
        b = scale(sg, n == 0 ? sm : mul(sm, jac(p, m, -0.5 - M, -0.5 + M)));
        break;
      }
      case Family::DirichletIV: {
        int m = std::abs(n);
        VD sm = sigma_pow(p, M);
        double sg = n >= 0 ? 1.0 : -1.0;
        a = scale(2.0, n == 0 ? sm : mul(sm, jac(p, m, -0.5 + M, -0.5 - M)));
        b = n == 0 ? VD{0, 0} : scale(sg, mul(mul(sm, cos1(p)), jac(p, m - 1, 0.5 + M, 0.5 - M)));
        break;
      }
      case Family::MasslessBeta: {
        double th = omega * p.rho - beta.shift();
        double cs = std::cos(th), sn = std::sin(th);
        const double wc = omega * p.c;
        if (((n % 2) + 2) % 2 == 0) {
          a = {cs, -wc * sn};
          b = {-sn, -wc * cs};
        } else {
          a = {sn, wc * cs};
          b = {cs, -wc * sn};
        }
        break;
      }
    }
    Spinor v, d;
    v << a.v, b.v;
    d << a.d, b.d;
    return {v, d};
  }

  std::pair<Spinor, Spinor> raw_with_derivative(const Point& p) const {
    auto [v, cd] = raw_with_cderivative(p);
    return {v, cd / p.c};
  }

  Spinor raw(const Point& p) const { return raw_with_cderivative(p).first; }
  Spinor operator()(const Point& p) const { return numeric_norm * raw(p); }
  Spinor derivative(const Point& p) const { return numeric_norm * raw_with_derivative(p).second; }
  Spinor printed(const Point& p) const { return printed_norm * raw(p); }

  SpinorFn fn() const {
    return [m = *this](const Point& p) { return m(p); };
  }
  SpinorFn raw_fn() const {
    return [m = *this](const Point& p) { return m.raw(p); };
  }
  SpinorFn printed_fn() const {
    return [m = *this](const Point& p) { return m.printed(p); };
  }
};

inline SpinorMode make_mode(Family f, double M, int n, BetaPair bp = {}, const QuadratureSpec& spec = {}) {
  check_admissible(f, M, n, bp);
  SpinorMode m;
  m.family = f;
  m.M = M;
  m.n = n;
  m.beta = bp;
  m.omega = mode_frequency(f, M, n, bp);
  m.printed_norm = printed_normalization(f, M, n);
  QuadResult r = inner_product_result(m.raw_fn(), m.raw_fn(), spec);
  if (!r.converged) throw convergence_error("mode normalization did not converge");
  m.numeric_norm = 1.0 / std::sqrt(r.value.real());
  m.raw_norm_error = r.error / r.value.real();
  return m;
}

/// i Sigma^{01} Phi, which maps mass-M solutions to mass -M solutions.
inline Spinor mass_sign_map(const Spinor& phi) { return algebra::I * algebra::sigma01() * phi; }

}  // namespace ads2
