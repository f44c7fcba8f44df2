#pragma once

// Inner products on (-pi/2, pi/2) with the flat measure d rho.  Nodes carry
// their endpoint distance so integrands with eps^{-2M} behaviour stay accurate.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "ads2/algebra.hpp"
#include "ads2/error.hpp"
#include "ads2/geometry.hpp"

namespace ads2 {

enum class QuadScheme { DoubleExponential, GaussLegendreComposite };

struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::DoubleExponential;
  double endpoint_inset = 1e-280;  // smallest endpoint distance sampled
  double tolerance = 1e-11;
  int max_levels = 4;
};

struct QuadResult {
  cplx value{};
  double error = 0.0;
  int levels = 0;
  bool converged = false;
};

struct QuadNode {
  Point p;
  double w;
};

using SpinorFn = std::function<Spinor(const Point&)>;
using ScalarFn = std::function<cplx(const Point&)>;

namespace quad_detail {

// Tanh-sinh nodes t = k h for k with parity filter (0: all, 1: odd only).
inline std::vector<QuadNode> de_nodes(double h, bool odd_only, double inset) {
  std::vector<QuadNode> out;
  const double hp = 0.5 * pi;
  auto push = [&](double t) {
    double u = hp * std::sinh(std::abs(t));
    double e2u = std::exp(2.0 * u);
    double eps = pi / (1.0 + e2u);
    if (!(eps >= inset)) return false;
    double sech = 2.0 / (std::exp(u) + std::exp(-u));
    double w = hp * hp * std::cosh(t) * sech * sech * h;
    out.push_back({Point::near(t >= 0 ? Endpoint::Plus : Endpoint::Minus, eps), w});
    return true;
  };
  if (!odd_only) {
    out.push_back({Point::at(0.0), hp * hp * h});
  }
  for (int k = 1;; ++k) {
    if (odd_only && k % 2 == 0) continue;
    double t = k * h;
    bool a = push(t);
    bool b = push(-t);
    if (!a && !b) break;
  }
  return out;
}

inline std::vector<double> gl_points(int n, std::vector<double>& w) {
  // Golub-Welsch on the Legendre Jacobi matrix.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<double> x(n);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    x[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    w[i] = 2.0 * v * v;
  }
  return x;
}

}  // namespace quad_detail

/// All nodes of a rule at refinement level `level` (0 = coarsest).
inline std::vector<QuadNode> quadrature_nodes(const QuadratureSpec& spec, int level) {
  if (spec.scheme == QuadScheme::DoubleExponential) {
    double h = std::ldexp(1.0, -(level + 2));
    return quad_detail::de_nodes(h, false, spec.endpoint_inset);
  }
  // Composite Gauss-Legendre in the endpoint distance, geometric panels
  // toward each endpoint, 16 points per panel, panels doubling with level.
  std::vector<double> gw;
  std::vector<double> gx = quad_detail::gl_points(16, gw);
  std::vector<QuadNode> out;
  int per_decade = 1 << level;
  double lo = std::max(spec.endpoint_inset, 1e-300);
  for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
    // eps in [lo, pi/2]: log-uniform panels
    double la = std::log(lo), lb = std::log(0.5 * pi);
    int panels = static_cast<int>(std::ceil((lb - la) / std::log(10.0))) * per_decade;
    for (int j = 0; j < panels; ++j) {
      double a = la + (lb - la) * j / panels, b = la + (lb - la) * (j + 1) / panels;
      for (int i = 0; i < 16; ++i) {
        double v = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
        double eps = std::exp(v);
        out.push_back({Point::near(e, eps), 0.5 * (b - a) * gw[i] * eps});
      }
    }
  }
  return out;
}

/// Integral of f over (-pi/2, pi/2) with refinement.  Never throws on
/// non-convergence; the flag reports it.
inline QuadResult integrate(const ScalarFn& f, const QuadratureSpec& spec = {}) {
  QuadResult r;
  if (spec.scheme == QuadScheme::DoubleExponential) {
    double h = 0.25;
    cplx sum = 0.0;
    for (const auto& n : quad_detail::de_nodes(h, false, spec.endpoint_inset)) sum += n.w * f(n.p);
    cplx prev = sum;
    for (int level = 1; level <= spec.max_levels; ++level) {
      // halving h: old nodes weigh half, new odd nodes added
      h *= 0.5;
      cplx add = 0.0;
      for (const auto& n : quad_detail::de_nodes(h, true, spec.endpoint_inset)) add += n.w * f(n.p);
      sum = 0.5 * sum + add;
      r.error = std::abs(sum - prev);
      r.levels = level;
      prev = sum;
    }
    r.value = sum;
  } else {
    cplx prev = 0.0;
    for (int level = 0; level <= spec.max_levels; ++level) {
      cplx sum = 0.0;
      for (const auto& n : quadrature_nodes(spec, level)) sum += n.w * f(n.p);
      if (level > 0) r.error = std::abs(sum - prev);
      prev = sum;
      r.value = sum;
      r.levels = level;
    }
  }
  r.converged = std::isfinite(r.value.real()) && std::isfinite(r.value.imag()) &&
                r.error <= spec.tolerance * std::max(1.0, std::abs(r.value));
  return r;
}

/// <a, b> = int conj(a1) b1 + conj(a2) b2 d rho.
inline QuadResult inner_product_result(const SpinorFn& a, const SpinorFn& b, const QuadratureSpec& spec = {}) {
  return integrate([&](const Point& p) { return a(p).dot(b(p)); }, spec);
}

inline cplx inner_product(const SpinorFn& a, const SpinorFn& b, const QuadratureSpec& spec = {}) {
  QuadResult r = inner_product_result(a, b, spec);
  if (!r.converged) throw convergence_error("inner_product: quadrature did not converge");
  return r.value;
}

inline double norm_squared(const SpinorFn& a, const QuadratureSpec& spec = {}) {
  return inner_product(a, a, spec).real();
}

/// Gram matrix of a family, sampling every function once per node.
inline Eigen::MatrixXcd gram_matrix(const std::vector<SpinorFn>& fs, const QuadratureSpec& spec = {}) {
  const int m = static_cast<int>(fs.size());
  std::vector<QuadNode> nodes = quadrature_nodes(spec, spec.max_levels);
  Eigen::MatrixXcd vals(2 * m, static_cast<int>(nodes.size()));
  for (int j = 0; j < static_cast<int>(nodes.size()); ++j)
    for (int i = 0; i < m; ++i) {
      Spinor v = fs[i](nodes[j].p);
      vals(2 * i, j) = v(0) * std::sqrt(nodes[j].w);
      vals(2 * i + 1, j) = v(1) * std::sqrt(nodes[j].w);
    }
  Eigen::MatrixXcd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      g(i, k) = (vals.row(2 * i).conjugate().cwiseProduct(vals.row(2 * k))).sum() +
                (vals.row(2 * i + 1).conjugate().cwiseProduct(vals.row(2 * k + 1))).sum();
  return g;
}

// ------------------------------------------------------------ endpoint probes

/// Integrals of |Phi|^2 over nested shells [d_{l+1}, d_l] near one endpoint,
/// with d_l = d0 * 10^{-step l}.
struct ShellProbe {
  double d0 = 1e-2;
  double step = 20.0;  // decades per shell
  int shells = 4;
  double ratio_threshold = 0.85;
};

struct DivergenceVerdict {
  bool divergent = false;
  std::vector<double> increments;  // shell integrals, outermost first
  double last_ratio = 0.0;
};

inline DivergenceVerdict divergence_probe(const SpinorFn& f, Endpoint e, const ShellProbe& sp = {}) {
  std::vector<double> gw;
  std::vector<double> gx = quad_detail::gl_points(12, gw);
  DivergenceVerdict v;
  const double ln10 = std::log(10.0);
  for (int l = 0; l < sp.shells; ++l) {
    double a = std::log(sp.d0) - ln10 * sp.step * (l + 1);
    double b = std::log(sp.d0) - ln10 * sp.step * l;
    int panels = std::max(4, static_cast<int>(std::ceil(sp.step)));
    double acc = 0.0;
    for (int j = 0; j < panels; ++j) {
      double pa = a + (b - a) * j / panels, pb = a + (b - a) * (j + 1) / panels;
      for (std::size_t i = 0; i < gx.size(); ++i) {
        double eps = std::exp(0.5 * (pa + pb) + 0.5 * (pb - pa) * gx[i]);
        acc += 0.5 * (pb - pa) * gw[i] * eps * f(Point::near(e, eps)).squaredNorm();
      }
    }
    v.increments.push_back(acc);
    if (!std::isfinite(acc)) {
      v.divergent = true;
      return v;
    }
  }
  const std::size_t n = v.increments.size();
  double last = v.increments[n - 1], prev = v.increments[n - 2];
  v.last_ratio = prev > 0.0 ? last / prev : (last > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  v.divergent = v.last_ratio >= sp.ratio_threshold;
  return v;
}

struct ExponentFit {
  double exponent = 0.0;      // slope of log|Phi|^2 against log eps
  double log_exponent = 0.0;  // slope in the fit with a ln|ln eps| term
  double log_coefficient = 0.0;
  bool log_flag = false;
};

/// Least-squares fit of log(|Phi|^2) (or a single component) against log eps
/// on a geometric grid in [eps_lo, eps_hi].  component: 0 both, 1 or 2.
inline ExponentFit endpoint_exponent_fit(const SpinorFn& f, Endpoint e, double eps_lo = 1e-8, double eps_hi = 1e-3,
                                         int points = 24, int component = 0) {
  if (!(eps_lo > 0.0 && eps_lo < eps_hi)) throw domain_error("endpoint_exponent_fit: bad eps grid");
  Eigen::MatrixXd A2(points, 2), A3(points, 3);
  Eigen::VectorXd y(points);
  for (int i = 0; i < points; ++i) {
    double L = std::log(eps_lo) + (std::log(eps_hi) - std::log(eps_lo)) * i / (points - 1);
    Spinor v = f(Point::near(e, std::exp(L)));
    double m2 = component == 1 ? std::norm(v(0)) : component == 2 ? std::norm(v(1)) : v.squaredNorm();
    if (!(m2 > 0.0) || !std::isfinite(m2)) throw convergence_error("endpoint_exponent_fit: signal underflows");
    y(i) = std::log(m2);
    A2(i, 0) = A3(i, 0) = 1.0;
    A2(i, 1) = A3(i, 1) = L;
    A3(i, 2) = std::log(std::abs(L));
  }
  ExponentFit r;
  Eigen::VectorXd c2 = A2.colPivHouseholderQr().solve(y);
  Eigen::VectorXd c3 = A3.colPivHouseholderQr().solve(y);
  r.exponent = c2(1);
  r.log_exponent = c3(1);
  r.log_coefficient = c3(2);
  r.log_flag = std::abs(c3(2)) > 0.5;
  return r;
}

}  // namespace ads2
