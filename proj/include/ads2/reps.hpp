#pragma once

// Ladder operators on mode families, Casimir bookkeeping and the
// identification of each mode space with unitary irreducible representations.

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ads2/algebra.hpp"
#include "ads2/error.hpp"
#include "ads2/modes.hpp"
#include "ads2/quad.hpp"

namespace ads2 {

/// L_+ (sign = +1) or L_- (sign = -1) applied to the spatial part of a mode.
/// The result carries frequency omega + sign.
inline SpinorFn ladder_image(const SpinorMode& m, int sign) {
  return [m, sign](const Point& p) {
    auto [v, d] = m.raw_with_cderivative(p);
    v *= m.numeric_norm;
    d *= m.numeric_norm;
    const double sg = sign > 0 ? 1.0 : -1.0;
    const double h = 0.5 + sg * m.omega;
    Spinor out;
    out(0) = sg * algebra::I * (d(0) - h * p.s * v(0) + sg * 0.5 * p.c * v(1));
    out(1) = sg * algebra::I * (d(1) - h * p.s * v(1) - sg * 0.5 * p.c * v(0));
    return out;
  };
}

/// Index of the family member with frequency omega_n + sign, if any.
inline std::optional<int> ladder_target(Family f, int n, int sign) {
  const int t = n + (sign > 0 ? 1 : -1);
  switch (f) {
    case Family::DirichletI:
    case Family::DirichletII:
      if (n >= 0 && t < 0) return std::nullopt;
      if (n < 0 && t >= 0) return std::nullopt;
      return t;
    case Family::HalfIntegerV:
    case Family::HalfMassVI:
      if (t < 0) return std::nullopt;
      return t;
    default: return t;
  }
}

/// Coefficient c with L_{sign} Psi_n = c Psi_{target}, as printed.  Zero when
/// the mode is annihilated.
inline cplx printed_ladder_coefficient(Family f, double M, int n, int sign, BetaPair bp = {}) {
  const cplx I = algebra::I;
  const double s = sign > 0 ? 1.0 : -1.0;
  switch (f) {
    case Family::DirichletI:
    case Family::DirichletII:
    case Family::HalfIntegerV:
    case Family::HalfMassVI: {
      const double m = f == Family::DirichletII ? -M : M;
      if (n >= 0) return -I * std::sqrt(std::max(0.0, (n + 0.5 + 0.5 * s) * (n + 2 * m + 0.5 + 0.5 * s)));
      const int k = -n - 1;
      return I * std::sqrt(std::max(0.0, (k + 0.5 - 0.5 * s) * (k + 2 * m + 0.5 - 0.5 * s)));
    }
    case Family::DirichletIII:
    case Family::DirichletIV: {
      if (n == 0) return -s * I * std::sqrt(0.25 - M * M);
      if (n > 0) return -I * std::sqrt((n + M + 0.5 * s) * (n - M + 0.5 * s));
      const int k = -n;
      return I * std::sqrt((k + M - 0.5 * s) * (k - M - 0.5 * s));
    }
    case Family::MasslessBeta: {
      double w = mode_frequency(f, M, n, bp);
      double sgn = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
      return I * sgn * (0.5 + s * w);
    }
  }
  return 0.0;
}

/// Lazily built normalized modes of one family.
class FamilyModes {
 public:
  FamilyModes(Family f, double M, BetaPair bp = {}, QuadratureSpec spec = {}) : f_(f), M_(M), bp_(bp), spec_(spec) {
    check_admissible(f, M, 0, bp);
  }

  const SpinorMode& operator[](int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, make_mode(f_, M_, n, bp_, spec_)).first;
    return it->second;
  }

  Family family() const { return f_; }
  double mass() const { return M_; }
  BetaPair beta() const { return bp_; }
  const QuadratureSpec& spec() const { return spec_; }

 private:
  Family f_;
  double M_;
  BetaPair bp_;
  QuadratureSpec spec_;
  std::map<int, SpinorMode> cache_;
};

struct LadderResult {
  int sign = 1;
  int n = 0;
  std::optional<int> target;
  cplx coefficient{};       // <Psi_target, L Psi_n>
  cplx printed{};           // printed coefficient
  double residual = 0.0;    // || L Psi_n - c Psi_target ||
  double image_norm = 0.0;  // || L Psi_n ||
};

/// Applies L_{sign} to mode n and projects onto its neighbour.
inline LadderResult apply_ladder(FamilyModes& fam, int n, int sign) {
  LadderResult r;
  r.sign = sign;
  r.n = n;
  r.target = ladder_target(fam.family(), n, sign);
  r.printed = printed_ladder_coefficient(fam.family(), fam.mass(), n, sign, fam.beta());
  const SpinorMode& m = fam[n];
  SpinorFn img = ladder_image(m, sign);
  QuadResult nr = integrate([&](const Point& p) { return cplx(img(p).squaredNorm()); }, fam.spec());
  r.image_norm = std::sqrt(std::max(0.0, nr.value.real()));
  if (!r.target) {
    r.residual = r.image_norm;
    return r;
  }
  const SpinorMode& t = fam[*r.target];
  SpinorFn tf = t.fn();
  r.coefficient = inner_product(tf, img, fam.spec());
  const cplx c = r.coefficient;
  QuadResult rr = integrate([&](const Point& p) { return cplx((img(p) - c * tf(p)).squaredNorm()); }, fam.spec());
  r.residual = std::sqrt(std::max(0.0, rr.value.real()));
  return r;
}

/// Realized coefficient c_{sign}(n); zero where there is no neighbour.
inline cplx realized_coefficient(FamilyModes& fam, int n, int sign) {
  if (!ladder_target(fam.family(), n, sign)) return 0.0;
  return apply_ladder(fam, n, sign).coefficient;
}

/// Index range of a family around its lowest |omega| modes.
inline std::vector<int> family_indices(Family f, int count) {
  std::vector<int> out;
  if (f == Family::HalfIntegerV || f == Family::HalfMassVI) {
    for (int n = 0; n < count; ++n) out.push_back(n);
    return out;
  }
  const int lo = -(count / 2);
  for (int n = lo; n < lo + count; ++n) out.push_back(n);
  return out;
}

struct CasimirReport {
  std::vector<int> indices;
  std::vector<double> q;  // per mode
  double mean = 0.0;
  double spread = 0.0;    // max |q_n - mean|
  double expected = 0.0;  // M^2 - 1/4
};

/// q_n = omega_n^2 + (c_-(n) c_+(n-1) + c_+(n) c_-(n+1)) / 2.
inline CasimirReport casimir_check(FamilyModes& fam, int count = 9) {
  CasimirReport r;
  r.expected = fam.mass() * fam.mass() - 0.25;
  r.indices = family_indices(fam.family(), count);
  for (int n : r.indices) {
    const double w = fam[n].omega;
    cplx acc = w * w;
    if (auto below = ladder_target(fam.family(), n, -1))
      acc += 0.5 * realized_coefficient(fam, n, -1) * realized_coefficient(fam, *below, +1);
    if (auto above = ladder_target(fam.family(), n, +1))
      acc += 0.5 * realized_coefficient(fam, n, +1) * realized_coefficient(fam, *above, -1);
    if (std::abs(acc.imag()) > 1e-8) throw convergence_error("casimir_check: complex Casimir value");
    r.q.push_back(acc.real());
  }
  for (double q : r.q) r.mean += q / r.q.size();
  for (double q : r.q) r.spread = std::max(r.spread, std::abs(q - r.mean));
  return r;
}

// ------------------------------------------------------------ classification

enum class Series { DiscretePlus, DiscreteMinus, MockDiscretePlus, MockDiscreteMinus, PrincipalS0, Complementary };

inline const char* to_string(Series s) {
  switch (s) {
    case Series::DiscretePlus: return "DiscretePlus";
    case Series::DiscreteMinus: return "DiscreteMinus";
    case Series::MockDiscretePlus: return "MockDiscretePlus";
    case Series::MockDiscreteMinus: return "MockDiscreteMinus";
    case Series::PrincipalS0: return "Principal";
    case Series::Complementary: return "Complementary";
  }
  return "?";
}

struct UIRLabel {
  Series series;
  double weight = 0.0;  // lowest weight (discrete) or E with q = E(E-1)
  double mu = 0.0;      // L0 spectrum mod 1, in (-1/2, 1/2]
  double s = 0.0;
};

inline bool operator==(const UIRLabel& a, const UIRLabel& b) {
  return a.series == b.series && std::abs(a.weight - b.weight) < 1e-9 && std::abs(a.mu - b.mu) < 1e-9 &&
         a.s == b.s;
}

/// Reduces x mod 1 into (-1/2, 1/2].
inline double reduce_mu(double x) {
  double r = x - std::floor(x);
  if (r > 0.5) r -= 1.0;
  if (std::abs(r + 0.5) < 1e-14) r = 0.5;
  if (std::abs(r) < 1e-14) r = 0.0;
  return r;
}

/// mu of the massless beta family, beta = (beta+ + beta-)/pi, beta not 1/2 or 3/2.
inline double mu_parameter(double beta) {
  if (!(beta >= 0.0 && beta < 2.0)) throw domain_error("beta must lie in [0, 2)");
  if (std::abs(beta - 0.5) < 1e-12 || std::abs(beta - 1.5) < 1e-12)
    throw domain_error("beta = 1/2 or 3/2 gives reducible (mock-discrete) modes");
  if (beta < 0.5) return -beta;
  if (beta < 1.5) return 1.0 - beta;
  return 2.0 - beta;
}

/// Lowest positive frequency and highest negative frequency indices.
inline std::pair<int, int> frequency_edges(Family f, double M, BetaPair bp = {}) {
  switch (f) {
    case Family::DirichletI:
    case Family::DirichletII: return {0, -1};
    case Family::HalfIntegerV:
    case Family::HalfMassVI: return {0, -1};
    case Family::DirichletIII:
    case Family::DirichletIV: return {1, -1};
    case Family::MasslessBeta: {
      // omega_j = j + 1 - beta
      int j = static_cast<int>(std::floor(bp.beta() - 1.0)) + 1;
      while (mode_frequency(f, M, j, bp) <= 0.0) ++j;
      while (mode_frequency(f, M, j - 1, bp) > 0.0) --j;
      return {j, j - 1};
    }
  }
  return {0, -1};
}

struct SplittingReport {
  bool split = false;
  double lowest_annihilation = 0.0;   // || L_- Psi_lowest ||
  double highest_annihilation = 0.0;  // || L_+ Psi_highest ||
  int lowest = 0, highest = -1;
};

inline SplittingReport frequency_splitting(FamilyModes& fam, double tol = 1e-8) {
  SplittingReport r;
  auto [lo, hi] = frequency_edges(fam.family(), fam.mass(), fam.beta());
  r.lowest = lo;
  r.highest = hi;
  r.lowest_annihilation = apply_ladder(fam, lo, -1).image_norm;
  bool has_negative = fam.family() != Family::HalfIntegerV && fam.family() != Family::HalfMassVI;
  r.highest_annihilation = has_negative ? apply_ladder(fam, hi, +1).image_norm : 0.0;
  r.split = r.lowest_annihilation <= tol && r.highest_annihilation <= tol;
  return r;
}

inline bool invariant_frequency_splitting(Family f, double M, BetaPair bp = {}) {
  FamilyModes fam(f, M, bp);
  return frequency_splitting(fam).split;
}

struct Classification {
  std::vector<UIRLabel> parts;
  double q = 0.0;
  bool split = false;

  std::string notation() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << " + ";
      const UIRLabel& l = parts[i];
      switch (l.series) {
        case Series::DiscretePlus: os << "D+(" << l.weight << ")"; break;
        case Series::DiscreteMinus: os << "D-(" << l.weight << ")"; break;
        case Series::MockDiscretePlus: os << "D+(1/2) mock"; break;
        case Series::MockDiscreteMinus: os << "D-(1/2) mock"; break;
        case Series::PrincipalS0: os << "P(s=0, mu=" << l.mu << ")"; break;
        case Series::Complementary: os << "C(" << l.weight << ", mu=" << l.mu << ")"; break;
      }
    }
    return os.str();
  }
};

/// Identifies the mode space of a family with UIRs from realized ladder data:
/// annihilated edge modes decide the splitting, the Casimir and the L0
/// spectrum mod 1 decide the series.
inline Classification classify(Family f, double M, BetaPair bp = {}) {
  FamilyModes fam(f, M, bp);
  Classification c;
  CasimirReport cas = casimir_check(fam, 5);
  c.q = cas.mean;
  SplittingReport sp = frequency_splitting(fam);
  c.split = sp.split;
  const bool mock = std::abs(c.q + 0.25) < 1e-9;
  if (c.split) {
    double w = fam[sp.lowest].omega;
    c.parts.push_back({mock ? Series::MockDiscretePlus : Series::DiscretePlus, w, 0.0, 0.0});
    if (f != Family::HalfIntegerV && f != Family::HalfMassVI)
      c.parts.push_back({mock ? Series::MockDiscreteMinus : Series::DiscreteMinus, -fam[sp.highest].omega, 0.0, 0.0});
    return c;
  }
  const double mu = reduce_mu(fam[sp.lowest].omega);
  if (mock) {
    c.parts.push_back({Series::PrincipalS0, 0.0, mu, 0.0});
  } else if (c.q > -0.25 && c.q < 0.0) {
    c.parts.push_back({Series::Complementary, 0.5 + std::sqrt(c.q + 0.25), mu, 0.0});
  } else {
    std::ostringstream os;
    os << "classify: no unitary series matches q = " << c.q << " without a lowest weight";
    throw domain_error(os.str());
  }
  return c;
}

}  // namespace ads2
