#pragma once

// Special functions on the argument ranges used by the spinor solutions:
// gamma family, Gauss 2F1 with its 1-x connection, Jacobi and Chebyshev
// polynomials, Ferrers functions of integer order.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <utility>

#include "ads2/error.hpp"

namespace ads2 {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

namespace detail {

inline double nearest_int_gap(double x) { return std::abs(x - std::round(x)); }

inline bool is_nonpositive_int(double x) { return x <= 0.0 && nearest_int_gap(x) == 0.0; }
inline bool is_nonpositive_int(cplx z) { return z.imag() == 0.0 && is_nonpositive_int(z.real()); }

inline bool near_integer(double x, double tol) { return nearest_int_gap(x) < tol; }
inline bool near_integer(cplx z, double tol) {
  return std::abs(z.imag()) < tol && nearest_int_gap(z.real()) < tol;
}

// Lanczos g=7, n=9.
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(z) for Re z >= 0.5
inline cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx x = lanczos_coef[0];
  for (int i = 1; i < 9; ++i) x += lanczos_coef[i] / (z + double(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

// ---------------------------------------------------------------- gamma family

/// log|Gamma(x)|.  Throws at the poles.
inline double gamma_ln(double x) {
  if (detail::is_nonpositive_int(x)) throw domain_error("gamma_ln: pole at nonpositive integer");
  return std::lgamma(x);
}

inline double gamma(double x) {
  if (detail::is_nonpositive_int(x)) throw domain_error("gamma: pole at nonpositive integer");
  return std::tgamma(x);
}

/// 1/Gamma(x), entire; zero at the poles of Gamma.
inline double rgamma(double x) {
  if (detail::is_nonpositive_int(x)) return 0.0;
  if (x > 170.0) return std::exp(-std::lgamma(x));
  if (x < 0.5) return std::sin(pi * x) * std::tgamma(1.0 - x) / pi;
  return 1.0 / std::tgamma(x);
}

inline cplx gamma(cplx z) {
  if (z.imag() == 0.0) return gamma(z.real());
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * std::exp(detail::lgamma_right(1.0 - z)));
  return std::exp(detail::lgamma_right(z));
}

inline cplx rgamma(cplx z) {
  if (z.imag() == 0.0) return rgamma(z.real());
  if (z.real() < 0.5) return std::sin(pi * z) * std::exp(detail::lgamma_right(1.0 - z)) / pi;
  return std::exp(-detail::lgamma_right(z));
}

/// Digamma psi(x); reflection below zero, recurrence then asymptotic series above.
inline double digamma(double x) {
  if (detail::is_nonpositive_int(x)) throw domain_error("digamma: pole at nonpositive integer");
  if (x < 0.0) return digamma(1.0 - x) - pi / std::tan(pi * x);
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double r = 1.0 / (x * x);
  double tail = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12.0))))));
  return acc + std::log(x) - 0.5 / x - tail;
}

inline cplx digamma(cplx z) {
  if (z.imag() == 0.0) return digamma(z.real());
  if (z.real() < 0.5) return digamma(1.0 - z) - pi / std::tan(pi * z);
  cplx acc = 0.0;
  while (std::abs(z) < 14.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  cplx r = 1.0 / (z * z);
  cplx tail = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12.0))))));
  return acc + std::log(z) - 0.5 / z - tail;
}

/// Rising factorial (a)_n.
template <class T>
T pochhammer(T a, int n) {
  T p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + double(i);
  return p;
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

// ---------------------------------------------------------------- 2F1

/// Stopping rule and iteration cap shared by the power series below.
struct SeriesControl {
  double rel_tol = 1e-16;
  int max_terms = 10000;
};

/// Plain Gauss series, any |x| < 1.  Terminates exactly on polynomial parameters.
template <class T>
T hyp2f1_series(T a, T b, T c, double x, SeriesControl ctl = {}) {
  if (detail::is_nonpositive_int(c)) throw domain_error("hyp2f1: c is a nonpositive integer");
  if (!(std::abs(x) < 1.0)) throw domain_error("hyp2f1_series: |x| must be < 1");
  T sum = 1.0, term = 1.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    T ratio = (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * x;
    term *= ratio;
    sum += term;
    if (term == T(0.0)) return sum;
    T next = (a + double(n + 1)) * (b + double(n + 1)) / ((c + double(n + 1)) * double(n + 2)) * x;
    if (std::abs(term) < ctl.rel_tol * std::abs(sum) && std::abs(next) < 1.0) return sum;
  }
  throw convergence_error("hyp2f1: series did not converge within the iteration cap");
}

/// F(a,b;c;x) through the x -> 1-x transformation.  `omx` is 1-x supplied
/// separately so callers near x=1 keep full relative accuracy.
template <class T>
T hyp2f1_connected(T a, T b, T c, double x, double omx, SeriesControl ctl = {}) {
  if (!(x > 0.0 && x <= 1.0)) throw domain_error("hyp2f1_connected: x must lie in (0,1]");
  if (detail::is_nonpositive_int(c)) throw domain_error("hyp2f1: c is a nonpositive integer");
  T gap = c - a - b;
  if (detail::near_integer(gap, 1e-9))
    throw branch_error("hyp2f1_connected: c-a-b is an integer; use the Ferrers path");
  T g1 = gamma(c) * gamma(gap) * rgamma(c - a) * rgamma(c - b);
  T g2 = gamma(c) * gamma(-gap) * rgamma(a) * rgamma(b);
  T f1 = g1 == T(0.0) ? T(0.0) : hyp2f1_series(a, b, 1.0 - gap, omx, ctl);
  T f2 = T(0.0);
  if (g2 != T(0.0)) {
    T pw = omx == 0.0 ? T(std::real(gap) > 0 ? 0.0 : std::numeric_limits<double>::infinity())
                      : T(std::pow(T(omx), gap));
    f2 = pw == T(0.0) ? T(0.0) : pw * hyp2f1_series(c - a, c - b, 1.0 + gap, omx, ctl);
  }
  return g1 * f1 + g2 * f2;
}

template <class T>
T hyp2f1_connected(T a, T b, T c, double x, SeriesControl ctl = {}) {
  return hyp2f1_connected(a, b, c, x, 1.0 - x, ctl);
}

/// F(a,b;c;x) for x in [0,1).  Direct series up to 0.5, connection beyond
/// unless c-a-b is an integer.
template <class T>
T hyp2f1(T a, T b, T c, double x, double omx, SeriesControl ctl = {}) {
  // x may round to 1 when the complement omx is still resolved
  if (!(x >= 0.0 && x <= 1.0 && omx > 0.0)) throw domain_error("hyp2f1: x must lie in [0,1)");
  if (x <= 0.5 || detail::near_integer(c - a - b, 1e-9)) return hyp2f1_series(a, b, c, x, ctl);
  return hyp2f1_connected(a, b, c, x, omx, ctl);
}

template <class T>
T hyp2f1(T a, T b, T c, double x, SeriesControl ctl = {}) {
  return hyp2f1(a, b, c, x, 1.0 - x, ctl);
}

// ---------------------------------------------------------------- polynomials

/// Jacobi P_n^{(a,b)}(x) by the three-term recurrence.
inline double jacobi_p(int n, double a, double b, double x) {
  if (n < 0) throw domain_error("jacobi_p: n must be >= 0");
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int m = 2; m <= n; ++m) {
    double s = 2.0 * m + a + b;
    double d = 2.0 * m * (m + a + b) * (s - 2.0);
    double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    double c2 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s;
    double p2 = (c1 * p1 - c2 * p0) / d;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// d/dx P_n^{(a,b)}(x).
inline double jacobi_dp(int n, double a, double b, double x) {
  if (n <= 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) * jacobi_p(n - 1, a + 1.0, b + 1.0, x);
}

inline double chebyshev_t(int n, double x) {
  if (n == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (int m = 2; m <= n; ++m) {
    double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

inline double chebyshev_u(int n, double x) {
  if (n == 0) return 1.0;
  double u0 = 1.0, u1 = 2.0 * x;
  for (int m = 2; m <= n; ++m) {
    double u2 = 2.0 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

// ---------------------------------------------------------------- Ferrers

template <class T>
struct FerrersPair {
  T p;
  T q;
};

namespace detail {

inline double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

// P and Q of degree nu, order -k at the point with (1-x)/2 = z <= 1/2 and
// r = sqrt((1+x)/(1-x)).
template <class T>
FerrersPair<T> ferrers_series(T nu, int k, double z, double r, SeriesControl ctl) {
  if (is_nonpositive_int(nu - double(k) + 1.0) || is_nonpositive_int(nu + double(k) + 1.0))
    throw domain_error("ferrers_q: singular degree for integer order");
  const double kf = factorial(k);
  // hypergeometric part, shared with P
  T sp = 0.0, s1 = 0.0;
  {
    T t = 1.0 / kf;
    double h = harmonic(k);
    int n = 0;
    for (; n < ctl.max_terms; ++n) {
      T psi = -euler_gamma + h;
      sp += t;
      s1 += t * psi;
      T ratio = (nu + 1.0 + double(n)) * (double(n) - nu) * z / (double(n + 1) * double(k + n + 1));
      if (t == T(0.0)) break;
      if (std::abs(t) * (1.0 + std::abs(psi)) < ctl.rel_tol * std::abs(sp) && std::abs(ratio) < 1.0 && n > 2) break;
      t *= ratio;
      h += 1.0 / double(k + n + 1);
    }
    if (n == ctl.max_terms) throw convergence_error("ferrers: series did not converge");
  }
  T s2 = 0.0;
  {
    T u = std::pow(z, k) / kf;
    double h = 0.0;
    int m = 0;
    for (; m < ctl.max_terms; ++m) {
      T psi = -euler_gamma + h;
      s2 += u * psi;
      T ratio = (nu + 1.0 + double(k + m)) * (double(k + m) - nu) * z / (double(m + k + 1) * double(m + 1));
      if (u == T(0.0)) break;
      if (std::abs(u) * (1.0 + std::abs(psi)) < ctl.rel_tol * (std::abs(s2) + std::abs(sp)) && std::abs(ratio) < 1.0 && m > 2) break;
      u *= ratio;
      h += 1.0 / double(m + 1);
    }
    if (m == ctl.max_terms) throw convergence_error("ferrers: series did not converge");
  }
  T s3 = 0.0;
  for (int n = 0; n < k; ++n) {
    T den = pochhammer(nu + double(n + 1), k - n) * pochhammer(nu - double(k) + 1.0, k - n);
    if (den == T(0.0)) throw domain_error("ferrers_q: singular degree for integer order");
    s3 += factorial(k - 1 - n) * std::pow(z, n) / (factorial(n) * den);
  }
  const double rk = std::pow(r, k);
  T p = sp / rk;
  T lead = std::log(r) - 0.5 * (digamma(nu - double(k) + 1.0) + digamma(nu + double(k) + 1.0));
  T q = lead * p + 0.5 * s1 / rk + 0.5 * rk * (s2 + s3);
  return {p, q};
}

}  // namespace detail

/// Ferrers P_nu^{-k} and Q_nu^{-k} (DLMF normalisation) at the point x with
/// zm = (1-x)/2 and zp = (1+x)/2 given separately.  Points with x < 0 go
/// through the x -> -x connection formulas.
template <class T>
FerrersPair<T> ferrers_pq(T nu, int k, double zm, double zp, SeriesControl ctl = {}) {
  if (k < 0) throw domain_error("ferrers: order k must be >= 0");
  if (!(zm > 0.0 && zp > 0.0)) throw domain_error("ferrers: x must lie in (-1,1)");
  if (zm <= zp) return detail::ferrers_series(nu, k, zm, std::sqrt(zp / zm), ctl);
  FerrersPair<T> m = detail::ferrers_series(nu, k, zp, std::sqrt(zm / zp), ctl);
  T arg = pi * (nu - double(k));
  T cs = std::cos(arg), sn = std::sin(arg);
  return {cs * m.p - (2.0 / pi) * sn * m.q, -cs * m.q - 0.5 * pi * sn * m.p};
}

template <class T>
T ferrers_p(T nu, int k, double x) {
  if (!(std::abs(x) < 1.0)) throw domain_error("ferrers_p: |x| must be < 1");
  return ferrers_pq(nu, k, 0.5 * (1.0 - x), 0.5 * (1.0 + x)).p;
}

template <class T>
T ferrers_q(T nu, int k, double x) {
  if (!(std::abs(x) < 1.0)) throw domain_error("ferrers_q: |x| must be < 1");
  return ferrers_pq(nu, k, 0.5 * (1.0 - x), 0.5 * (1.0 + x)).q;
}

}  // namespace ads2
