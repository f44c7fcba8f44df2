#pragma once

// Self-adjoint extensions: unitary boundary conditions, invariance under the
// ladder transformations, deficiency probes, spectra and endpoint asymptotics.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ads2/algebra.hpp"
#include "ads2/error.hpp"
#include "ads2/geometry.hpp"
#include "ads2/modes.hpp"
#include "ads2/quad.hpp"
#include "ads2/specfun.hpp"

namespace ads2 {

// ------------------------------------------------------------ boundary conditions

enum class BcTag { DirichletI, DirichletII, DirichletIII, DirichletIV, Diagonal, General };

inline const char* to_string(BcTag t) {
  switch (t) {
    case BcTag::DirichletI: return "dirichlet1";
    case BcTag::DirichletII: return "dirichlet2";
    case BcTag::DirichletIII: return "dirichlet3";
    case BcTag::DirichletIV: return "dirichlet4";
    case BcTag::Diagonal: return "diagonal";
    case BcTag::General: return "general";
  }
  return "?";
}

inline double unitarity_defect(const Mat2& U) { return (U.adjoint() * U - Mat2::Identity()).cwiseAbs().maxCoeff(); }

struct BoundaryCondition {
  Mat2 U = Mat2::Identity();
  BcTag tag = BcTag::General;

  static BoundaryCondition dirichlet(int type) {
    BoundaryCondition b;
    switch (type) {
      case 1: b.U << -1.0, 0.0, 0.0, 1.0; b.tag = BcTag::DirichletI; break;
      case 2: b.U << 1.0, 0.0, 0.0, -1.0; b.tag = BcTag::DirichletII; break;
      case 3: b.U = Mat2::Identity(); b.tag = BcTag::DirichletIII; break;
      case 4: b.U = -Mat2::Identity(); b.tag = BcTag::DirichletIV; break;
      default: throw domain_error("Dirichlet type must be 1..4");
    }
    return b;
  }

  /// diag(e^{2i beta+}, e^{2i beta-}).
  static BoundaryCondition diagonal(double beta_plus, double beta_minus) {
    BoundaryCondition b;
    b.U << std::polar(1.0, 2.0 * beta_plus), 0.0, 0.0, std::polar(1.0, 2.0 * beta_minus);
    b.tag = BcTag::Diagonal;
    return b;
  }

  static BoundaryCondition general(const Mat2& U, double tol = 1e-10) {
    double d = unitarity_defect(U);
    if (!(d <= tol)) {
      std::ostringstream os;
      os << "U is not unitary (max |U^H U - I| = " << d << ")";
      throw domain_error(os.str());
    }
    BoundaryCondition b;
    b.U = U;
    b.tag = BcTag::General;
    return b;
  }

  /// Row-major re/im pairs: u11r,u11i,u12r,u12i,u21r,u21i,u22r,u22i.
  static BoundaryCondition from_reals(const std::array<double, 8>& r, double tol = 1e-10) {
    Mat2 U;
    U << cplx(r[0], r[1]), cplx(r[2], r[3]), cplx(r[4], r[5]), cplx(r[6], r[7]);
    return general(U, tol);
  }

  bool is_diagonal(double tol = 1e-12) const { return std::abs(U(0, 1)) <= tol && std::abs(U(1, 0)) <= tol; }

  /// (beta+, beta-) in [0, pi) for a diagonal U.
  std::pair<double, double> betas() const {
    if (!is_diagonal()) throw domain_error("betas: U is not diagonal");
    auto b = [](cplx z) {
      double v = 0.5 * std::arg(z);
      if (v < 0.0) v += pi;
      if (v >= pi) v -= pi;
      return v;
    };
    return {b(U(0, 0)), b(U(1, 1))};
  }
};

/// (I - U)(Phi2~(+), Phi2~(-)) - i (I + U)(Phi1~(+), -Phi1~(-)).
inline Eigen::Vector2cd boundary_residual(const BoundaryCondition& bc, const BoundaryData& d) {
  Eigen::Vector2cd a, b;
  a << d.phi1_plus, -d.phi1_minus;
  b << d.phi2_plus, d.phi2_minus;
  const Mat2 I2 = Mat2::Identity();
  return (I2 - bc.U) * b - algebra::I * (I2 + bc.U) * a;
}

/// Boundary term of <D Phi_a, Phi_b> - <Phi_a, D Phi_b>.
inline cplx boundary_form(const BoundaryData& a, const BoundaryData& b) {
  return (std::conj(a.phi1_plus) * b.phi2_plus - std::conj(a.phi2_plus) * b.phi1_plus) -
         (std::conj(a.phi1_minus) * b.phi2_minus - std::conj(a.phi2_minus) * b.phi1_minus);
}

/// Boundary data of the ladder-transformed solution; sign = -1 for delta_-.
inline BoundaryData transformed_boundary_data(const BoundaryData& d, double M, cplx w, int sign) {
  cplx h = sign < 0 ? 0.5 - w : 0.5 + w;
  return {-(M + h) * d.phi1_plus, (M - h) * d.phi2_plus, -(M - h) * d.phi1_minus, (M + h) * d.phi2_minus};
}

/// Boundary data satisfying the condition: b + i a = phi, b - i a = U phi.
inline BoundaryData probe_data(const BoundaryCondition& bc, const Eigen::Vector2cd& phi) {
  Eigen::Vector2cd psi = bc.U * phi;
  Eigen::Vector2cd b = 0.5 * (phi + psi);
  Eigen::Vector2cd a = (phi - psi) / (2.0 * algebra::I);
  return {a(0), b(0), -a(1), b(1)};
}

struct InvarianceViolation {
  int transform;  // +1 or -1
  double omega;
  int probe;      // 0 or 1
  Endpoint endpoint;
  double residual;
};

struct InvarianceReport {
  bool invariant = true;
  double max_residual = 0.0;
  std::vector<InvarianceViolation> violations;
  std::vector<std::string> failed_constraints;
};

/// Numerical invariance test: transform probe data satisfying the condition
/// and test the condition again.
inline InvarianceReport invariance_test(const BoundaryCondition& bc, double M,
                                        const std::vector<double>& omegas = {0.3, 0.7, 1.1}, double tol = 1e-12) {
  if (!(M >= 0.0 && M < 0.5)) throw domain_error("invariance_test needs 0 <= M < 1/2");
  InvarianceReport r;
  bool bad_plus = false, bad_minus = false;
  for (int probe = 0; probe < 2; ++probe) {
    Eigen::Vector2cd phi = Eigen::Vector2cd::Zero();
    phi(probe) = 1.0;
    BoundaryData d = probe_data(bc, phi);
    double scale = d.vec().cwiseAbs().maxCoeff();
    for (double w : omegas)
      for (int sign : {-1, 1}) {
        BoundaryData t = transformed_boundary_data(d, M, w, sign);
        Eigen::Vector2cd res = boundary_residual(bc, t);
        double s = std::max(scale, t.vec().cwiseAbs().maxCoeff());
        for (int e = 0; e < 2; ++e) {
          double v = std::abs(res(e)) / s;
          r.max_residual = std::max(r.max_residual, v);
          if (v > tol) {
            r.invariant = false;
            r.violations.push_back({sign, w, probe, e == 0 ? Endpoint::Plus : Endpoint::Minus, v});
            (e == 0 ? bad_plus : bad_minus) = true;
          }
        }
      }
  }
  if (!bc.is_diagonal()) r.failed_constraints.push_back("U must be diagonal (off-diagonal entries couple the endpoints)");
  auto endpoint_msg = [&](const char* name, cplx u) {
    std::ostringstream os;
    os << "endpoint " << name << ": transformed weighted data violate the diagonal condition with e^{i alpha} = " << u.real()
       << (u.imag() < 0 ? "" : "+") << u.imag() << "i; need e^{i alpha} = +-1 when M > 0";
    return os.str();
  };
  if (bc.is_diagonal()) {
    if (bad_plus) r.failed_constraints.push_back(endpoint_msg("+pi/2", bc.U(0, 0)));
    if (bad_minus) r.failed_constraints.push_back(endpoint_msg("-pi/2", bc.U(1, 1)));
  }
  return r;
}

// ------------------------------------------------------------ deficiency indices

/// Coefficient functional (over (C1, C2)) of the non-integrable leading term.
inline Eigen::Vector2cd leading_functional(Endpoint e, double M, cplx w) {
  Eigen::Vector2cd f;
  if (e == Endpoint::Plus) {
    f << 0.0, 1.0;
    return f;
  }
  if (auto k = half_integer_index(M)) {
    cplx x = pi * (w - double(*k));
    f << (2.0 / pi) * std::sin(x), std::cos(x);
    return f;
  }
  TransitionCoefficients t = transition_coefficients(M, w);
  f << (2 * M + 1) * t.A1, 2.0 * w * t.B2;
  return f;
}

struct EndpointVerdict {
  Endpoint endpoint;
  cplx omega;
  Eigen::Vector2cd coefficients;  // (C1, C2) tested
  bool integrable = false;
  double last_ratio = 0.0;
  double exponent = std::numeric_limits<double>::quiet_NaN();
};

struct DeficiencyReport {
  double M = 0.0;
  int n_plus = 0, n_minus = 0;
  std::vector<EndpointVerdict> verdicts;
};

namespace ext_detail {

inline EndpointVerdict probe_solution(double M, cplx w, const Eigen::Vector2cd& C, Endpoint e, const ShellProbe& sp,
                                      double fit_lo = 1e-8, double fit_hi = 1e-3) {
  GeneralSolution s = general_solution(M, w, C(0), C(1));
  EndpointVerdict v{e, w, C};
  DivergenceVerdict dv = divergence_probe(s.fn(), e, sp);
  v.integrable = !dv.divergent;
  v.last_ratio = dv.last_ratio;
  try {
    v.exponent = endpoint_exponent_fit(s.fn(), e, fit_lo, fit_hi).exponent;
  } catch (const std::exception&) {
  }
  return v;
}

inline int rank_of(const Eigen::MatrixXcd& A, double tol = 1e-8) {
  if (A.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * std::max(1.0, s(0))) ++r;
  return r;
}

/// Dimension of the L2 solution space at frequency w.
inline int l2_dimension(double M, cplx w, std::vector<EndpointVerdict>& log) {
  const ShellProbe deep{};
  // The cancelling combination keeps a rounding remnant of the dominant
  // eps^{-M} term; stay above eps ~ 10^{-4/M} where it is still negligible.
  const double depth = std::min(10.0, 4.0 / std::max(M, 0.4) - 1.0);
  const ShellProbe shallow{1e-1, depth / 4.0, 4, 0.85};
  const double fit_lo = std::pow(10.0, -1.0 - depth), fit_hi = std::pow(10.0, -1.0 - 0.25 * depth);
  std::vector<Eigen::Vector2cd> V[2];
  for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
    auto& Ve = V[e == Endpoint::Plus ? 0 : 1];
    for (int j = 0; j < 2; ++j) {
      Eigen::Vector2cd C = Eigen::Vector2cd::Zero();
      C(j) = 1.0;
      EndpointVerdict v = probe_solution(M, w, C, e, deep);
      log.push_back(v);
      if (v.integrable) Ve.push_back(C);
    }
    if (Ve.empty()) {
      // only the combination killing the leading term can survive
      Eigen::Vector2cd f = leading_functional(e, M, w);
      Eigen::Vector2cd C;
      C << f(1), -f(0);
      C.normalize();
      EndpointVerdict v = probe_solution(M, w, C, e, shallow, fit_lo, fit_hi);
      log.push_back(v);
      if (v.integrable) Ve.push_back(C);
    }
  }
  const int dp = static_cast<int>(V[0].size()), dm = static_cast<int>(V[1].size());
  Eigen::MatrixXcd A(2, dp + dm);
  for (int i = 0; i < dp; ++i) A.col(i) = V[0][i];
  for (int i = 0; i < dm; ++i) A.col(dp + i) = V[1][i];
  return dp + dm - rank_of(A);
}

}  // namespace ext_detail

inline DeficiencyReport deficiency_indices(double M) {
  mass_regime(M);
  DeficiencyReport r;
  r.M = M;
  r.n_plus = ext_detail::l2_dimension(M, cplx(0.0, 1.0), r.verdicts);
  r.n_minus = ext_detail::l2_dimension(M, cplx(0.0, -1.0), r.verdicts);
  return r;
}

// ------------------------------------------------------------ spectra

struct SpectrumResult {
  std::vector<double> omegas;
  std::vector<int> multiplicity;
  std::vector<double> closed_form;  // empty when none is known
  double max_deviation = 0.0;       // root finder against closed form
  bool exploratory = false;         // non-invariant condition
};

namespace ext_detail {

/// 2x2 matrix taking (C1, C2) to the boundary-condition residual.
inline Eigen::Matrix2cd condition_matrix(const BoundaryCondition& bc, double M, cplx w) {
  Eigen::Matrix<cplx, 4, 2> B = boundary_matrix(M, w);
  Eigen::Matrix2cd Ma, Mb;
  Ma.row(0) = B.row(0);
  Ma.row(1) = -B.row(2);
  Mb.row(0) = B.row(1);
  Mb.row(1) = B.row(3);
  const Mat2 I2 = Mat2::Identity();
  return (I2 - bc.U) * Mb - algebra::I * (I2 + bc.U) * Ma;
}

/// Real determinant of the diagonal condition rows.
inline double diagonal_determinant(double bp, double bm, double M, double w) {
  Eigen::Matrix<cplx, 4, 2> B = boundary_matrix(M, w);
  double r00 = std::sin(bp) * B(1, 0).real() + std::cos(bp) * B(0, 0).real();
  double r01 = std::sin(bp) * B(1, 1).real() + std::cos(bp) * B(0, 1).real();
  double r10 = std::sin(bm) * B(3, 0).real() - std::cos(bm) * B(2, 0).real();
  double r11 = std::sin(bm) * B(3, 1).real() - std::cos(bm) * B(2, 1).real();
  return r00 * r11 - r01 * r10;
}

template <class F>
std::vector<double> bracket_roots(F f, double lo, double hi, double step = 0.05) {
  std::vector<double> roots;
  const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
  double xa = lo, fa = f(xa);
  if (fa == 0.0) roots.push_back(xa);
  for (int i = 1; i <= n; ++i) {
    double xb = std::min(hi, lo + i * step), fb = f(xb);
    if (fb == 0.0) {
      roots.push_back(xb);
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      double a = xa, b = xb, ga = fa;
      for (int it = 0; it < 200 && b - a > 0.0; ++it) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        double gm = f(m);
        if (gm == 0.0) {
          a = b = m;
          break;
        }
        if ((gm < 0.0) == (ga < 0.0)) {
          a = m;
          ga = gm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    xa = xb;
    fa = fb;
  }
  return roots;
}

inline void add_root(std::vector<double>& v, double x, double tol = 1e-8) {
  for (double y : v)
    if (std::abs(x - y) <= tol) return;
  v.push_back(x);
}

inline int nullity(const Eigen::Matrix2cd& R, double tol) {
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(R);
  const auto& s = svd.singularValues();
  double big = std::max(s(0), 1.0);
  return (s(0) <= tol * big ? 1 : 0) + (s(1) <= tol * big ? 1 : 0);
}

inline std::vector<double> closed_form_spectrum(const BoundaryCondition& bc, double M, double lo, double hi) {
  std::vector<double> out;
  auto push = [&](double w) {
    if (w >= lo - 1e-12 && w <= hi + 1e-12) out.push_back(w);
  };
  const int span = static_cast<int>(std::ceil(std::abs(lo) + std::abs(hi))) + 4;
  if (M == 0.0 && bc.is_diagonal()) {
    auto [bp, bm] = bc.betas();
    double beta = (bp + bm) / pi;
    for (int j = -span; j <= span; ++j) push(j + 1.0 - beta);
  } else if (bc.tag == BcTag::DirichletI) {
    for (int n = 0; n <= span; ++n) {
      push(0.5 + M + n);
      push(-(0.5 + M + n));
    }
  } else if (bc.tag == BcTag::DirichletII) {
    for (int n = 0; n <= span; ++n) {
      push(0.5 - M + n);
      push(-(0.5 - M + n));
    }
  } else if (bc.tag == BcTag::DirichletIII || bc.tag == BcTag::DirichletIV) {
    for (int n = -span; n <= span; ++n) push(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ext_detail

/// Frequencies of the extension D_U in [lo, hi].
inline SpectrumResult spectrum(const BoundaryCondition& bc, double M, double lo, double hi, double step = 0.05) {
  mass_regime(M);
  if (!(lo < hi)) throw domain_error("spectrum: empty window");
  SpectrumResult r;
  if (M >= 0.5) {
    if (bc.tag != BcTag::DirichletI && !(bc.U - BoundaryCondition::dirichlet(1).U).isZero(1e-12))
      throw domain_error("for M >= 1/2 the only self-adjoint extension is the Dirichlet type I closure");
    auto f = [M](double w) { return rgamma(0.5 + M - w) * rgamma(0.5 + M + w); };
    for (double x : ext_detail::bracket_roots(f, lo, hi, step)) ext_detail::add_root(r.omegas, x);
    std::sort(r.omegas.begin(), r.omegas.end());
    r.multiplicity.assign(r.omegas.size(), 1);
  } else if (bc.is_diagonal()) {
    auto [bp, bm] = bc.betas();
    auto f = [&](double w) { return ext_detail::diagonal_determinant(bp, bm, M, w); };
    if (lo <= 0.0 && hi >= 0.0 && ext_detail::nullity(ext_detail::condition_matrix(bc, M, 0.0), 1e-12) > 0)
      r.omegas.push_back(0.0);
    for (double x : ext_detail::bracket_roots(f, lo, hi, step)) ext_detail::add_root(r.omegas, x);
    std::sort(r.omegas.begin(), r.omegas.end());
    for (double w : r.omegas)
      r.multiplicity.push_back(std::max(1, ext_detail::nullity(ext_detail::condition_matrix(bc, M, w), 1e-7)));
    r.exploratory = M > 0.0 && !invariance_test(bc, M).invariant;
  } else {
    // exploratory: local minima of the smallest singular value
    r.exploratory = true;
    auto smin = [&](double w) {
      Eigen::JacobiSVD<Eigen::Matrix2cd> svd(ext_detail::condition_matrix(bc, M, w));
      return svd.singularValues()(1) / std::max(1.0, svd.singularValues()(0));
    };
    const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)));
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
      xs[i] = lo + (hi - lo) * i / n;
      ys[i] = smin(xs[i]);
    }
    for (int i = 1; i < n; ++i) {
      if (!(ys[i] <= ys[i - 1] && ys[i] <= ys[i + 1])) continue;
      double a = xs[i - 1], b = xs[i + 1];
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 120; ++it) {
        double c = b - g * (b - a), d = a + g * (b - a);
        if (smin(c) < smin(d)) b = d;
        else a = c;
      }
      double x = 0.5 * (a + b);
      if (smin(x) <= 1e-7) ext_detail::add_root(r.omegas, x);
    }
    std::sort(r.omegas.begin(), r.omegas.end());
    r.multiplicity.assign(r.omegas.size(), 1);
  }
  r.closed_form = ext_detail::closed_form_spectrum(bc, M, lo, hi);
  if (!r.closed_form.empty()) {
    if (r.closed_form.size() != r.omegas.size()) {
      r.max_deviation = std::numeric_limits<double>::infinity();
    } else {
      for (std::size_t i = 0; i < r.omegas.size(); ++i)
        r.max_deviation = std::max(r.max_deviation, std::abs(r.omegas[i] - r.closed_form[i]));
    }
  }
  return r;
}

// ------------------------------------------------------------ asymptotics

struct AsymptoticTerm {
  std::string name;
  Endpoint endpoint;
  int component;  // 1, 2, or 0 for |Phi|^2
  double eps;
  cplx numeric;
  cplx predicted;  // leading terms with the evaluator's normalisation
  cplx printed;    // leading terms as printed
  double rel_error;
  cplx printed_ratio;  // printed / numeric
};

struct AsymptoticReport {
  double M = 0.0;
  cplx omega, C1, C2;
  std::vector<AsymptoticTerm> terms;
  double max_rel_error_finest = 0.0;
  bool pass = false;
};

namespace ext_detail {

struct Leading {
  cplx printed1, printed2, predicted1, predicted2;
  bool squared = false;  // k = 0: compare |Phi|^2 only
};

inline Leading leading_terms(const GeneralSolution& s, Endpoint e, double eps) {
  const double M = s.M;
  const cplx w = s.omega, C1 = s.C1, C2 = s.C2;
  Leading L;
  if (s.regime == MassRegime::HalfInteger && s.k == 0) {
    L.squared = true;
    cplx amp = e == Endpoint::Plus ? C2 / w
                                   : C1 * (2.0 / (pi * w)) * std::sin(pi * w) + C2 * std::cos(pi * w) / w;
    L.printed1 = std::norm(amp) / eps;
    L.predicted1 = 2.0 * std::norm(amp) / eps;
    return L;
  }
  if (s.regime == MassRegime::HalfInteger) {
    const int k = s.k;
    const double kk = k;
    cplx A3 = a3_coefficient(k, w);
    if (e == Endpoint::Plus) {
      L.printed1 = C2 * w * A3 * std::pow(eps, -kk + 0.5);
      L.printed2 = C2 * kk * A3 * std::pow(eps, -kk - 0.5);
      double h = 0.5 * eps;
      L.predicted1 = std::pow(2.0, -0.5) * C2 * w * A3 * std::pow(eps, -kk + 0.5) +
                     2.0 * C1 * std::pow(h, kk + 0.5) / factorial(k);
      L.predicted2 = std::sqrt(2.0) * C2 * kk * A3 * std::pow(eps, -kk - 0.5) +
                     2.0 * w * C1 * std::pow(h, kk + 1.5) / factorial(k + 1);
    } else {
      cplx x = pi * (w - kk);
      cplx br = C1 * (2.0 / pi) * std::sin(x) + C2 * std::cos(x);
      L.printed1 = kk * A3 * br * std::pow(eps, -kk - 0.5);
      L.printed2 = w * A3 * br * std::pow(eps, -kk + 0.5);
      L.predicted1 = std::sqrt(2.0) * L.printed1;
      L.predicted2 = std::pow(2.0, -0.5) * L.printed2;
    }
    return L;
  }
  const double pM = std::pow(2.0, M), mM = 1.0 / pM;
  if (e == Endpoint::Plus) {
    cplx a = (2 * M + 1) * C1 * std::pow(eps, M), b = w * C2 * std::pow(eps, 1 - M);
    cplx c = w * C1 * std::pow(eps, 1 + M), d = (2 * M - 1) * C2 * std::pow(eps, -M);
    L.printed1 = a + b;
    L.printed2 = c + d;
    L.predicted1 = mM * a + pM * b;
    L.predicted2 = mM * c + pM * d;
    return L;
  }
  TransitionCoefficients tp = transition_coefficients(M, w), tm = transition_coefficients(-M, w);
  cplx lead1 = (2 * M + 1) * C1 * tp.A1, lead1b = w * C2 * tp.B2;
  cplx sub1 = (2 * M + 1) * C1 * tp.A2, sub1b = w * C2 * tp.B1;
  cplx lead2 = w * C1 * tm.B1, lead2b = (2 * M - 1) * C2 * tm.A2;
  cplx sub2 = w * C1 * tm.B2, sub2b = (2 * M - 1) * C2 * tm.A1;
  L.printed1 = (lead1 + lead1b) * std::pow(eps, -M) + (sub1 + sub1b) * std::pow(eps, M + 1);
  L.printed2 = (lead2 + lead2b) * std::pow(eps, 1 - M) + (sub2 + sub2b) * std::pow(eps, M);
  L.predicted1 = pM * (lead1 + 2.0 * lead1b) * std::pow(eps, -M) + mM * (0.5 * sub1 + sub1b) * std::pow(eps, M + 1);
  L.predicted2 = pM * (lead2 + 0.5 * lead2b) * std::pow(eps, 1 - M) + mM * (2.0 * sub2 + sub2b) * std::pow(eps, M);
  return L;
}

}  // namespace ext_detail

/// Compares the general solution near both endpoints with the leading-order
/// formulas; `pass` gates on the finest eps at 1%.
inline AsymptoticReport asymptotic_verifier(double M, cplx w, cplx C1, cplx C2,
                                            const std::vector<double>& eps_list = {1e-3, 1e-4, 1e-5},
                                            double tol = 1e-2) {
  if (mass_regime(M) == MassRegime::Massless) throw domain_error("asymptotic_verifier: massless solutions are bounded");
  GeneralSolution s = general_solution(M, w, C1, C2);
  AsymptoticReport r;
  r.M = M;
  r.omega = w;
  r.C1 = C1;
  r.C2 = C2;
  const double finest = *std::min_element(eps_list.begin(), eps_list.end());
  for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
    for (double eps : eps_list) {
      Spinor v = s(Point::near(e, eps));
      ext_detail::Leading L = ext_detail::leading_terms(s, e, eps);
      auto push = [&](int comp, cplx num, cplx pred, cplx pr) {
        AsymptoticTerm t;
        t.name = std::string(e == Endpoint::Plus ? "plus" : "minus") + (comp == 0 ? ".norm2" : comp == 1 ? ".phi1" : ".phi2");
        t.endpoint = e;
        t.component = comp;
        t.eps = eps;
        t.numeric = num;
        t.predicted = pred;
        t.printed = pr;
        t.rel_error = std::abs(num - pred) / std::max(std::abs(num), std::abs(pred));
        if (!(std::abs(num) > 0.0 || std::abs(pred) > 0.0)) t.rel_error = 0.0;
        t.printed_ratio = num != 0.0 ? pr / num : cplx(0.0);
        r.terms.push_back(t);
        if (eps == finest) r.max_rel_error_finest = std::max(r.max_rel_error_finest, t.rel_error);
      };
      if (L.squared) {
        push(0, v.squaredNorm(), L.predicted1, L.printed1);
      } else {
        push(1, v(0), L.predicted1, L.printed1);
        push(2, v(1), L.predicted2, L.printed2);
      }
    }
  }
  r.pass = r.max_rel_error_finest <= tol;
  return r;
}

}  // namespace ads2
