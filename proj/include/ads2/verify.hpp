#pragma once

// Named property suites.  Each suite returns check records
// {name, ref, value, tolerance, pass}; value is a deviation unless noted.

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ads2/algebra.hpp"
#include "ads2/extensions.hpp"
#include "ads2/fock.hpp"
#include "ads2/modes.hpp"
#include "ads2/quad.hpp"
#include "ads2/reps.hpp"

namespace ads2 {

struct Check {
  std::string name;
  std::string ref;  // formula or identity checked
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool gating = true;  // informational checks do not decide the suite
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.gating; });
  }
  int failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass && c.gating; }));
  }
};

namespace verify_detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline void add(SuiteReport& r, std::string name, std::string ref, double value, double tol, bool gating = true) {
  bool ok = std::isfinite(value) && value <= tol;
  r.checks.push_back({std::move(name), std::move(ref), value, tol, ok, gating});
}

inline std::vector<Point> sample_points(int count = 61, double span = 1.5) {
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) out.push_back(Point::at(-span + 2.0 * span * i / (count - 1)));
  return out;
}

inline Mat2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat2 A;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat2> qr(A);
  Mat2 Q = qr.householderQ();
  Mat2 R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) Q.col(j) *= R(j, j) / std::abs(R(j, j));
  return Q;
}

inline Mat2 random_diagonal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
  Mat2 D = Mat2::Zero();
  D(0, 0) = std::polar(1.0, u(rng));
  D(1, 1) = std::polar(1.0, u(rng));
  return D;
}

struct FamilyCase {
  Family f;
  double M;
  BetaPair bp;
};

inline std::string label(const FamilyCase& c) {
  std::string s = std::string(to_string(c.f)) + " M=" + fmt(c.M);
  if (c.f == Family::MasslessBeta) s += " beta+=" + fmt(c.bp.plus) + " beta-=" + fmt(c.bp.minus);
  return s;
}

inline std::vector<FamilyCase> family_grid() {
  std::vector<FamilyCase> out;
  for (double M : {0.0, 0.1, 0.25, 0.4})
    for (Family f : {Family::DirichletI, Family::DirichletII, Family::DirichletIII, Family::DirichletIV})
      out.push_back({f, M, {}});
  for (double M : {0.5, 1.0, 1.5, 2.3}) out.push_back({Family::DirichletI, M, {}});
  out.push_back({Family::MasslessBeta, 0.0, {0.4, 0.9}});
  out.push_back({Family::MasslessBeta, 0.0, {2.0, 2.6}});
  out.push_back({Family::HalfIntegerV, 1.5, {}});
  out.push_back({Family::HalfMassVI, 0.5, {}});
  return out;
}

}  // namespace verify_detail

// ------------------------------------------------------------ suites

inline SuiteReport verify_deficiency() {
  using namespace verify_detail;
  SuiteReport r{"deficiency", {}};
  for (double M : {0.0, 0.1, 0.25, 0.4, 0.49, 0.5, 0.75, 1.5, 2.5}) {
    const int expected = M < 0.5 ? 2 : 0;
    DeficiencyReport d = deficiency_indices(M);
    add(r, "n_plus M=" + fmt(M), "n = 2 for 0 <= M < 1/2, else 0", std::abs(d.n_plus - expected), 0.0);
    add(r, "n_minus M=" + fmt(M), "n = 2 for 0 <= M < 1/2, else 0", std::abs(d.n_minus - expected), 0.0);
    // a probe with |Phi|^2 ~ eps^r is integrable iff r > -1
    int missed = 0;
    for (const EndpointVerdict& v : d.verdicts) {
      if (!std::isfinite(v.exponent) || std::abs(v.exponent + 1.0) < 0.05) continue;
      if (v.integrable != (v.exponent > -1.0)) ++missed;
    }
    add(r, "divergence probes consistent M=" + fmt(M), "|Phi|^2 ~ eps^r integrable iff r > -1", missed, 0.0);
  }
  return r;
}

inline SuiteReport verify_spectrum() {
  using namespace verify_detail;
  SuiteReport r{"spectrum", {}};
  auto compare = [&](const std::string& name, const std::string& ref, const SpectrumResult& s,
                     std::vector<double> expected) {
    std::sort(expected.begin(), expected.end());
    std::vector<double> got;
    for (std::size_t i = 0; i < s.omegas.size(); ++i)
      for (int m = 0; m < s.multiplicity[i]; ++m) got.push_back(s.omegas[i]);
    std::sort(got.begin(), got.end());
    double dev = got.size() == expected.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < got.size() && i < expected.size(); ++i)
      dev = std::max(dev, std::abs(got[i] - expected[i]));
    add(r, name, ref, dev, 1e-10);
  };
  const double lo = -3.7, hi = 3.7;
  auto tower = [&](double first) {
    std::vector<double> v;
    for (double w = first; w < hi; w += 1.0) {
      v.push_back(w);
      v.push_back(-w);
    }
    return v;
  };
  for (double M : {0.1, 0.25, 0.4, 1.3})
    compare("dirichlet1 M=" + fmt(M), "omega = +-(1/2 + M + n)", spectrum(BoundaryCondition::dirichlet(1), M, lo, hi),
            tower(0.5 + M));
  for (double M : {0.1, 0.25, 0.4})
    compare("dirichlet2 M=" + fmt(M), "omega = +-(1/2 - M + n)", spectrum(BoundaryCondition::dirichlet(2), M, lo, hi),
            tower(0.5 - M));
  for (int type : {3, 4})
    for (double M : {0.1, 0.25}) {
      std::vector<double> z;
      for (int n = -3; n <= 3; ++n) z.push_back(n);
      compare("dirichlet" + std::to_string(type) + " M=" + fmt(M), "omega in Z including 0",
              spectrum(BoundaryCondition::dirichlet(type), M, lo, hi), z);
    }
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, pi);
  for (int i = 0; i < 20; ++i) {
    const double bp = u(rng), bm = u(rng);
    const double beta = (bp + bm) / pi;
    std::vector<double> expected;
    for (int j = -6; j <= 6; ++j) {
      double w = j + 1.0 - beta;
      if (w > lo && w < hi) expected.push_back(w);
    }
    compare("beta pair " + std::to_string(i) + " (" + fmt(bp) + ", " + fmt(bm) + ")", "omega_j = j + 1 - beta",
            spectrum(BoundaryCondition::diagonal(bp, bm), 0.0, lo, hi), expected);
  }
  return r;
}

inline SuiteReport verify_orthonormality(const QuadratureSpec& spec = {}) {
  using namespace verify_detail;
  SuiteReport r{"orthonormality", {}};
  for (const FamilyCase& c : family_grid()) {
    FamilyModes fam(c.f, c.M, c.bp, spec);
    std::vector<SpinorFn> fs;
    for (int n : family_indices(c.f, 17)) fs.push_back(fam[n].fn());
    Eigen::MatrixXcd G = gram_matrix(fs, spec);
    double dev = (G - Eigen::MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
    add(r, "gram " + label(c), "<Psi_m, Psi_n> = delta_mn", dev, 1e-9);
  }
  return r;
}

inline SuiteReport verify_normalization(const QuadratureSpec& spec = {}) {
  using namespace verify_detail;
  SuiteReport r{"normalization", {}};
  struct Case {
    FamilyCase c;
    const char* ref;
  };
  const std::vector<Case> cases = {
      {{Family::DirichletI, 0.25, {}}, "type I normalization constant"},
      {{Family::DirichletI, 1.3, {}}, "type I normalization constant"},
      {{Family::DirichletII, 0.25, {}}, "type II normalization constant"},
      {{Family::DirichletIII, 0.25, {}}, "type III normalization constant"},
      {{Family::DirichletIV, 0.25, {}}, "type III normalization constant"},
      {{Family::HalfIntegerV, 1.5, {}}, "half-integer mass constant N^V"},
      {{Family::HalfIntegerV, 2.5, {}}, "half-integer mass constant N^V"},
      {{Family::MasslessBeta, 0.0, {0.4, 0.9}}, "N_j = pi^(-1/2)"},
  };
  for (const Case& k : cases) {
    FamilyModes fam(k.c.f, k.c.M, k.c.bp, spec);
    double dev = 0.0;
    for (int n : family_indices(k.c.f, 9)) {
      double ratio = fam[n].printed_norm / fam[n].numeric_norm;
      dev = std::max(dev, std::abs(ratio * ratio - 1.0));
    }
    add(r, "printed norm " + label(k.c), k.ref, dev, 1e-8);
  }
  FamilyModes vi(Family::HalfMassVI, 0.5, {}, spec);
  for (int n = 0; n < 4; ++n) {
    double ratio = vi[n].printed_norm / vi[n].numeric_norm;
    add(r, "printed norm half-mass n=" + std::to_string(n),
        "N^VI = sqrt(n + 1/2) as printed", std::abs(ratio - 1.0), 1e-8, false);
    r.checks.back().name += " ratio=" + fmt(ratio);
  }
  return r;
}

inline SuiteReport verify_ladder(const QuadratureSpec& spec = {}) {
  using namespace verify_detail;
  SuiteReport r{"ladder", {}};
  struct Case {
    FamilyCase c;
    int lo, hi;
    const char* ref;
  };
  const std::vector<Case> cases = {
      {{Family::DirichletI, 0.25, {}}, -7, 6, "type I/II ladder action from Jacobi recurrences"},
      {{Family::DirichletI, 1.3, {}}, -7, 6, "type I/II ladder action from Jacobi recurrences"},
      {{Family::DirichletII, 0.25, {}}, -7, 6, "type I/II ladder action from Jacobi recurrences"},
      {{Family::DirichletIII, 0.25, {}}, -4, 4, "type III/IV ladder action"},
      {{Family::DirichletIV, 0.25, {}}, -4, 4, "type III/IV ladder action"},
      {{Family::MasslessBeta, 0.0, {0.3, 0.5}}, -3, 3, "massless ladder action i(-1)^(j+1)(1/2 +- omega_j)"},
  };
  for (const Case& k : cases) {
    FamilyModes fam(k.c.f, k.c.M, k.c.bp, spec);
    for (int n = k.lo; n <= k.hi; ++n)
      for (int s : {-1, +1}) {
        LadderResult lr = apply_ladder(fam, n, s);
        std::string nm = label(k.c) + (s > 0 ? " L+ " : " L- ") + "n=" + std::to_string(n);
        if (lr.target) {
          add(r, nm, k.ref, std::abs(lr.coefficient - lr.printed), 1e-8);
          add(r, nm + " residual", "image lies on the neighbouring mode", lr.residual, 1e-8);
        } else {
          add(r, nm + " annihilates", "lowest/highest weight mode", lr.image_norm, 1e-8);
        }
      }
  }
  return r;
}

inline SuiteReport verify_casimir(const QuadratureSpec& spec = {}) {
  using namespace verify_detail;
  SuiteReport r{"casimir", {}};
  std::vector<FamilyCase> grid = family_grid();
  grid.push_back({Family::DirichletI, 1.3, {}});
  for (const FamilyCase& c : grid) {
    FamilyModes fam(c.f, c.M, c.bp, spec);
    CasimirReport q = casimir_check(fam, 9);
    add(r, "q constant " + label(c), "Casimir constant across modes", q.spread, 1e-9);
    add(r, "q = M^2 - 1/4 " + label(c), "M^2 = q + 1/4", std::abs(q.mean - q.expected), 1e-9);
  }
  return r;
}

inline SuiteReport verify_classification() {
  using namespace verify_detail;
  SuiteReport r{"classification", {}};
  struct Case {
    FamilyCase c;
    std::vector<UIRLabel> expected;
  };
  auto D = [](double w) {
    return std::vector<UIRLabel>{{Series::DiscretePlus, w, 0, 0}, {Series::DiscreteMinus, w, 0, 0}};
  };
  const std::vector<UIRLabel> mock = {{Series::MockDiscretePlus, 0.5, 0, 0}, {Series::MockDiscreteMinus, 0.5, 0, 0}};
  auto P = [](double mu) { return std::vector<UIRLabel>{{Series::PrincipalS0, 0.0, mu, 0}}; };
  auto C = [](double M) { return std::vector<UIRLabel>{{Series::Complementary, 0.5 + M, 0.0, 0}}; };
  std::vector<Case> cases;
  for (double M : {0.1, 0.25, 0.4, 1.0, 1.3}) cases.push_back({{Family::DirichletI, M, {}}, D(0.5 + M)});
  for (double M : {0.1, 0.25, 0.4}) {
    cases.push_back({{Family::DirichletII, M, {}}, D(0.5 - M)});
    cases.push_back({{Family::DirichletIII, M, {}}, C(M)});
    cases.push_back({{Family::DirichletIV, M, {}}, C(M)});
  }
  cases.push_back({{Family::MasslessBeta, 0.0, {pi / 4, pi / 4}}, mock});
  cases.push_back({{Family::MasslessBeta, 0.0, {0.2, pi / 2 - 0.2}}, mock});
  cases.push_back({{Family::MasslessBeta, 0.0, {3 * pi / 4, 3 * pi / 4}}, mock});
  for (double beta : {0.3, 0.1, 0.8, 1.1, 1.7}) {
    const double half = 0.5 * pi * beta;
    cases.push_back({{Family::MasslessBeta, 0.0, {half, half}}, P(mu_parameter(beta))});
  }
  for (const Case& k : cases) {
    Classification got = classify(k.c.f, k.c.M, k.c.bp);
    bool same = got.parts.size() == k.expected.size() &&
                std::equal(got.parts.begin(), got.parts.end(), k.expected.begin());
    add(r, label(k.c) + " -> " + got.notation(), "representation content of the mode space", same ? 0.0 : 1.0, 0.0);
  }
  return r;
}

inline SuiteReport verify_invariance() {
  using namespace verify_detail;
  SuiteReport r{"invariance", {}};
  std::mt19937_64 rng(7341);
  for (double M : {0.1, 0.25, 0.4}) {
    int wrong = 0;
    for (int t = 1; t <= 4; ++t)
      if (!invariance_test(BoundaryCondition::dirichlet(t), M).invariant) ++wrong;
    add(r, "four Dirichlet matrices pass M=" + fmt(M), "invariant iff U in {diag(-+1, +-1), +-I}", wrong, 0.0);
    wrong = 0;
    for (int i = 0; i < 50; ++i)
      if (invariance_test(BoundaryCondition::general(random_unitary(rng)), M).invariant) ++wrong;
    add(r, "50 random unitaries fail M=" + fmt(M), "invariant iff U in {diag(-+1, +-1), +-I}", wrong, 0.0);
    wrong = 0;
    for (int i = 0; i < 20; ++i)
      if (invariance_test(BoundaryCondition::general(random_diagonal(rng)), M).invariant) ++wrong;
    add(r, "20 random diagonal unitaries fail M=" + fmt(M), "invariant iff U in {diag(-+1, +-1), +-I}", wrong, 0.0);
  }
  int wrong = 0;
  for (int i = 0; i < 20; ++i)
    if (!invariance_test(BoundaryCondition::general(random_diagonal(rng)), 0.0).invariant) ++wrong;
  for (int t = 1; t <= 4; ++t)
    if (!invariance_test(BoundaryCondition::dirichlet(t), 0.0).invariant) ++wrong;
  add(r, "diagonal unitaries pass M=0", "M = 0: invariant iff U diagonal", wrong, 0.0);
  wrong = 0;
  for (int i = 0; i < 20; ++i)
    if (invariance_test(BoundaryCondition::general(random_unitary(rng)), 0.0).invariant) ++wrong;
  add(r, "20 random non-diagonal unitaries fail M=0", "M = 0: invariant iff U diagonal", wrong, 0.0);
  return r;
}

inline SuiteReport verify_asymptotics() {
  using namespace verify_detail;
  SuiteReport r{"asymptotics", {}};
  struct Case {
    double M, w;
    cplx c1, c2;
  };
  const std::vector<Case> cases = {{0.25, 0.9, 1.0, 0.0}, {0.25, 0.9, 0.0, 1.0}, {0.25, 0.9, 0.3, 1.0},
                                   {0.75, 0.9, 1.0, 0.4}, {1.5, 2.3, 0.0, 1.0},  {1.5, 2.3, 1.0, 0.0},
                                   {2.5, 2.3, 0.5, 1.0},  {0.5, 1.7, 0.0, 1.0},  {0.5, 1.7, 1.0, 0.3}};
  for (const Case& c : cases) {
    AsymptoticReport a = asymptotic_verifier(c.M, c.w, c.c1, c.c2);
    std::ostringstream nm;
    nm << "leading terms M=" << c.M << " omega=" << c.w << " C=(" << c.c1.real() << ", " << c.c2.real() << ")";
    const char* ref = half_integer_index(c.M)
                          ? (*half_integer_index(c.M) == 0 ? "k = 0 logarithmic endpoint forms"
                                                           : "half-integer mass Ferrers endpoint forms")
                          : "hypergeometric endpoint forms F = 1 + O(eps)";
    add(r, nm.str(), ref, a.max_rel_error_finest, 1e-2);
  }
  struct Fit {
    double M;
    int which;  // 1: C1 only, 2: C2 only
    double expected;
  };
  for (const Fit& f : std::vector<Fit>{{0.25, 1, 0.5}, {0.25, 2, -0.5}, {0.1, 1, 0.2}, {0.1, 2, -0.2},
                                       {0.75, 1, 1.5}, {0.75, 2, -1.5}, {1.5, 2, -3.0}, {2.5, 2, -5.0}}) {
    GeneralSolution s = general_solution(f.M, 0.9, f.which == 1 ? 1.0 : 0.0, f.which == 2 ? 1.0 : 0.0);
    ExponentFit e = endpoint_exponent_fit(s.fn(), Endpoint::Plus);
    add(r, "exponent at +pi/2 M=" + fmt(f.M) + " C" + std::to_string(f.which) + " fit=" + fmt(e.exponent),
        "|Phi|^2 ~ eps^(2M), eps^(-2M), eps^(-2k-1)", std::abs(e.exponent / f.expected - 1.0), 0.02);
  }
  GeneralSolution s0 = general_solution(0.5, 1.7, 0.0, 1.0);
  ExponentFit e0 = endpoint_exponent_fit(s0.fn(), Endpoint::Plus, 1e-8, 1e-3, 24, 1);
  add(r, "k=0 log flag (first component, C2, +pi/2) coefficient=" + fmt(e0.log_coefficient),
      "k = 0 Legendre log terms", e0.log_flag ? 0.0 : 1.0, 0.0);
  ExponentFit e1 = endpoint_exponent_fit(s0.fn(), Endpoint::Plus);
  add(r, "k=0 |Phi|^2 exponent fit=" + fmt(e1.exponent), "|Phi|^2 ~ |C2|^2 eps^-1 / omega^2",
      std::abs(e1.exponent + 1.0), 0.02);
  return r;
}

inline SuiteReport verify_symmetry(const QuadratureSpec& spec = {}) {
  using namespace verify_detail;
  SuiteReport r{"symmetry", {}};
  const std::vector<Point> pts = sample_points();
  for (double M : {0.0, 0.25})
    for (Family f : {Family::DirichletI, Family::DirichletII, Family::DirichletIII, Family::DirichletIV}) {
      FamilyModes fam(f, M, {}, spec);
      const bool shifted = f == Family::DirichletI || f == Family::DirichletII;
      for (int n = 0; n <= 4; ++n) {
        const int partner = shifted ? -n - 1 : -n;
        double dev = 0.0;
        for (const Point& p : pts)
          dev = std::max(dev, (fam[partner](p) - algebra::charge_conjugate(fam[n](p))).cwiseAbs().maxCoeff());
        // the III/IV zero mode is not a negative-frequency mode; reported only
        const bool zero_mode = !shifted && n == 0;
        add(r, std::string(to_string(f)) + " M=" + fmt(M) + " n=" + std::to_string(n) + (zero_mode ? " (zero mode)" : ""),
            "negative-frequency mode = charge conjugate of its partner", dev, 1e-11, !zero_mode);
      }
    }
  for (double M : {0.1, 0.25}) {
    FamilyModes three(Family::DirichletIII, M, {}, spec), four(Family::DirichletIV, M, {}, spec);
    for (int n = -4; n <= 4; ++n) {
      double dev = 0.0, flipped = 0.0;
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      for (const Point& p : pts) {
        Spinor mirrored = algebra::parity_at(three[n](Point::near(p.upper ? Endpoint::Minus : Endpoint::Plus, p.eps)));
        dev = std::max(dev, (four[n](p) - sign * mirrored).cwiseAbs().maxCoeff());
        flipped = std::max(flipped, (four[n](p) + sign * mirrored).cwiseAbs().maxCoeff());
      }
      add(r, "parity M=" + fmt(M) + " n=" + std::to_string(n), "Psi^IV_n = (-1)^n P Psi^III_n", dev, 1e-11, n >= 0);
      if (n < 0)
        add(r, "parity M=" + fmt(M) + " n=" + std::to_string(n) + " via charge conjugation",
            "Psi^IV_-n = (Psi^IV_n)^c = -(-1)^n P Psi^III_-n", flipped, 1e-11);
    }
  }
  for (double beta : {0.3, 1.2}) {
    const BetaPair a{0.5 * pi * beta, 0.5 * pi * beta}, b{0.5 * pi * beta - 0.3, 0.5 * pi * beta + 0.3};
    FamilyModes fa(Family::MasslessBeta, 0.0, a, spec), fb(Family::MasslessBeta, 0.0, b, spec);
    const Mat2 R = algebra::chiral_rotation(a.plus - b.plus);
    double dev = 0.0;
    for (int j = -3; j <= 3; ++j)
      for (const Point& p : pts) dev = std::max(dev, (fb[j](p) - R * fa[j](p)).cwiseAbs().maxCoeff());
    add(r, "chiral rotation beta=" + fmt(beta), "equal beta families related by a chiral rotation", dev, 1e-10);
  }
  return r;
}

inline SuiteReport verify_fock(int N = 5) {
  using namespace verify_detail;
  SuiteReport r{"fock", {}};
  struct Case {
    FockModel model;
    double param;
    double weight;
    int degeneracy;
  };
  const std::vector<Case> cases = {
      {FockModel::Massless, 0.25, 0.03125, 1}, {FockModel::Massless, 0.1, 0.08, 1},
      {FockModel::Massless, -0.25, 0.03125, 1}, {FockModel::Massless, 0.0, 0.125, 2},
      {FockModel::TypeIII, 0.0, 0.125, 2},     {FockModel::TypeIII, 0.25, 0.09375, 2},
      {FockModel::TypeIII, 0.4, 0.045, 2},
  };
  for (const Case& c : cases) {
    FockSystem fs = build_fock(c.model, c.param, N);
    std::string nm = std::string(c.model == FockModel::Massless ? "massless mu=" : "type III M=") + fmt(c.param);
    add(r, nm + " anticommutators", "canonical anticommutation relations", anticommutator_defect(fs.space), 0.0);
    CommutatorReport cr = commutator_check(fs);
    add(r, nm + " [L+, L-] = 2 L0 (admissible)", "[L+, L-] = 2 L0", cr.max_admissible, 1e-12);
    add(r, nm + " truncation edge deviation (reported)", "[L+, L-] = 2 L0", cr.max_edge, 0.0, false);
    add(r, nm + " L- |0> = 0", "L- annihilates the vacuum", (fs.ops.Lm * fs.space.vacuum()).norm(), 1e-12);
    Eigen::VectorXcd v = fs.space.vacuum();
    add(r, nm + " L0 |0> = lambda |0>", "lowest weight lambda", (fs.ops.L0 * v - c.weight * v).norm(), 1e-12);
    VacuumSector vs = vacuum_sector(fs);
    add(r, nm + " vacuum weight", "(mu - 1/2)^2 / 2 and (1/4 - M^2) / 2", std::abs(vs.weight - c.weight), 1e-12);
    add(r, nm + " vacuum degeneracy", "degenerate vacuum of the zero-mode models", std::abs(vs.degeneracy - c.degeneracy),
        0.0);
  }
  return r;
}

// ------------------------------------------------------------ registry

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"deficiency", "spectrum", "orthonormality", "normalization",
                                                 "ladder",     "casimir",  "classification", "invariance",
                                                 "asymptotics", "symmetry", "fock"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const QuadratureSpec& spec = {}) {
  if (name == "deficiency") return verify_deficiency();
  if (name == "spectrum") return verify_spectrum();
  if (name == "orthonormality") return verify_orthonormality(spec);
  if (name == "normalization") return verify_normalization(spec);
  if (name == "ladder") return verify_ladder(spec);
  if (name == "casimir") return verify_casimir(spec);
  if (name == "classification") return verify_classification();
  if (name == "invariance") return verify_invariance();
  if (name == "asymptotics") return verify_asymptotics();
  if (name == "symmetry") return verify_symmetry(spec);
  if (name == "fock") return verify_fock();
  throw domain_error("unknown suite '" + name + "'");
}

}  // namespace ads2
