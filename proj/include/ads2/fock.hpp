#pragma once

// Truncated fermionic Fock space with the quantum charges L0, L+, L- of the
// theories without an invariant positive-frequency subspace.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "ads2/error.hpp"
#include "ads2/reps.hpp"
#include "ads2/specfun.hpp"

namespace ads2 {

using SpMat = Eigen::SparseMatrix<cplx>;

enum class FockModel { Massless, TypeIII };

/// 2N fermionic modes in Jordan-Wigner form.  Massless: a_0..a_{N-1},
/// b_0..b_{N-1}.  Type III: a_0..a_{N-1}, b_1..b_N.
class TruncatedFock {
 public:
  TruncatedFock(FockModel model, int N) : model_(model), N_(N) {
    if (N < 3) throw domain_error("Fock cutoff must be >= 3");
    if (N > 6) throw domain_error("Fock cutoff is capped at 6 (4096 states)");
    modes_ = 2 * N;
    dim_ = 1 << modes_;
    for (int k = 0; k < modes_; ++k) ops_.push_back(annihilator(k));
  }

  FockModel model() const { return model_; }
  int cutoff() const { return N_; }
  int dim() const { return dim_; }
  int modes() const { return modes_; }

  int b_offset() const { return model_ == FockModel::TypeIII ? 1 : 0; }
  int a_slot(int j) const { return check(j, 0) ; }
  int b_slot(int j) const { return N_ + check(j, b_offset()) - b_offset(); }

  const SpMat& a(int j) const { return ops_[a_slot(j)]; }
  const SpMat& b(int j) const { return ops_[b_slot(j)]; }
  SpMat ad(int j) const { return SpMat(a(j).adjoint()); }
  SpMat bd(int j) const { return SpMat(b(j).adjoint()); }
  const SpMat& mode(int k) const { return ops_[k]; }

  SpMat identity() const {
    SpMat I(dim_, dim_);
    I.setIdentity();
    return I;
  }

  Eigen::VectorXcd vacuum() const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_);
    v(0) = 1.0;
    return v;
  }

  Eigen::VectorXcd basis(int s) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_);
    v(s) = 1.0;
    return v;
  }

  /// Occupation basis state away from the truncation edge (top a and b empty).
  bool admissible(int s) const {
    int top_a = a_slot(N_ - 1);
    int top_b = b_slot(N_ - 1 + b_offset());
    return !((s >> top_a) & 1) && !((s >> top_b) & 1);
  }

  /// Number of a quanta minus number of b quanta.
  int charge(int s) const {
    int na = std::popcount(static_cast<unsigned>(s & ((1 << N_) - 1)));
    int nb = std::popcount(static_cast<unsigned>(s >> N_));
    return na - nb;
  }

 private:
  int check(int j, int lo) const {
    if (j < lo || j >= lo + N_) throw domain_error("Fock mode index out of range");
    return j;
  }

  SpMat annihilator(int k) const {
    std::vector<Eigen::Triplet<cplx>> t;
    const unsigned below = (1u << k) - 1u;
    for (int s = 0; s < dim_; ++s) {
      if (!((s >> k) & 1)) continue;
      int sign = (std::popcount(static_cast<unsigned>(s) & below) % 2) ? -1 : 1;
      t.emplace_back(s ^ (1 << k), s, double(sign));
    }
    SpMat m(dim_, dim_);
    m.setFromTriplets(t.begin(), t.end());
    return m;
  }

  FockModel model_;
  int N_;
  int modes_ = 0;
  int dim_ = 0;
  std::vector<SpMat> ops_;
};

struct ChargeOperators {
  SpMat Lp, Lm, L0;
  double lambda = 0.0;        // vacuum weight
  cplx mixing{};              // coefficient of the pair-creation term in L+
  double mu = 0.0;            // effective mu, massless model
  double M = 0.0;             // type III model
};

struct FockSystem {
  TruncatedFock space;
  ChargeOperators ops;
};

/// Lowest positive frequency of the massless spectrum mu + Z.
inline double massless_lowest_frequency(double mu) {
  double r = reduce_mu(mu);
  return r > 0.0 ? r : r + 1.0;
}

/// Massless model with L0 spectrum mu + Z (mu not an integer), or the type III
/// model with mass M in [0, 1/2).  A massless mu in Z is the type III model at M = 0.
inline FockSystem build_fock(FockModel model, double param, int N) {
  if (model == FockModel::Massless && std::abs(reduce_mu(param)) < 1e-14) {
    model = FockModel::TypeIII;
    param = 0.0;
  }
  FockSystem fs{TruncatedFock(model, N), {}};
  const TruncatedFock& F = fs.space;
  ChargeOperators& o = fs.ops;
  const cplx I = algebra::I;
  o.Lp = SpMat(F.dim(), F.dim());
  o.Lm = SpMat(F.dim(), F.dim());
  o.L0 = SpMat(F.dim(), F.dim());
  if (model == FockModel::Massless) {
    const double mu = massless_lowest_frequency(param);
    o.mu = mu;
    o.lambda = 0.5 * (mu - 0.5) * (mu - 0.5);
    auto wp = [mu](int j) { return j + mu; };
    auto wn = [mu](int j) { return -j - 1 + mu; };  // omega_{-j-1}
    for (int j = 0; j + 1 < N; ++j) {
      const double sg = (j + 1) % 2 == 0 ? 1.0 : -1.0;
      const cplx ca = I * sg * (wp(j) + 0.5), cb = I * sg * (0.5 - wn(j));
      o.Lp += ca * F.ad(j + 1) * F.a(j) + cb * F.bd(j + 1) * F.b(j);
      o.Lm += ca * F.ad(j) * F.a(j + 1) + cb * F.bd(j) * F.b(j + 1);
    }
    o.mixing = I * (mu - 0.5);
    o.Lp += o.mixing * F.ad(0) * F.bd(0);
    o.Lm -= o.mixing * F.a(0) * F.b(0);
    for (int j = 0; j < N; ++j) o.L0 += wp(j) * F.ad(j) * F.a(j) - wn(j) * F.bd(j) * F.b(j);
  } else {
    const double M = param;
    if (!(M >= 0.0 && M < 0.5)) throw domain_error("type III Fock model needs 0 <= M < 1/2");
    o.M = M;
    o.lambda = 0.5 * (0.25 - M * M);
    auto C = [M](int n) { return std::sqrt((n + M + 0.5) * (n - M + 0.5)); };
    for (int n = 1; n + 1 < N; ++n) {
      o.Lp += -I * C(n) * F.ad(n + 1) * F.a(n);
      o.Lm += -I * C(n) * F.ad(n) * F.a(n + 1);
    }
    for (int n = 1; n < N; ++n) {
      o.Lp += -I * C(n) * F.bd(n + 1) * F.b(n);
      o.Lm += -I * C(n) * F.bd(n) * F.b(n + 1);
    }
    const double C0 = C(0);
    o.mixing = I * C0;
    o.Lp += I * C0 * (F.ad(0) * F.bd(1) - F.ad(1) * F.a(0));
    o.Lm += I * C0 * (F.b(1) * F.a(0) - F.ad(0) * F.a(1));
    for (int n = 1; n < N; ++n) o.L0 += double(n) * F.ad(n) * F.a(n);
    for (int n = 1; n <= N; ++n) o.L0 += double(n) * F.bd(n) * F.b(n);
  }
  o.L0 += o.lambda * F.identity();
  o.Lp.prune(cplx(0.0));
  o.Lm.prune(cplx(0.0));
  return fs;
}

/// Max |{c_j, c_k^dagger} - delta_jk| and |{c_j, c_k}| over all mode pairs.
inline double anticommutator_defect(const TruncatedFock& F) {
  double worst = 0.0;
  const SpMat I = F.identity();
  for (int j = 0; j < F.modes(); ++j)
    for (int k = 0; k < F.modes(); ++k) {
      SpMat cj = F.mode(j), ck = F.mode(k), ckd = SpMat(ck.adjoint());
      SpMat x = cj * ckd + ckd * cj;
      if (j == k) x -= I;
      SpMat y = cj * ck + ck * cj;
      for (const SpMat* m : {&x, &y})
        for (int c = 0; c < m->outerSize(); ++c)
          for (SpMat::InnerIterator it(*m, c); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
  return worst;
}

struct CommutatorReport {
  double max_admissible = 0.0;  // over basis states below the truncation edge
  double max_edge = 0.0;        // over edge states, reported only
  int admissible_states = 0;
};

/// || ([L+, L-] - 2 L0) e_s || for every occupation basis state.
inline CommutatorReport commutator_check(const FockSystem& fs) {
  const ChargeOperators& o = fs.ops;
  SpMat D = SpMat(o.Lp * o.Lm) - SpMat(o.Lm * o.Lp) - 2.0 * o.L0;
  CommutatorReport r;
  for (int s = 0; s < fs.space.dim(); ++s) {
    double n2 = 0.0;
    for (SpMat::InnerIterator it(D, s); it; ++it) n2 += std::norm(it.value());
    double n = std::sqrt(n2);
    if (fs.space.admissible(s)) {
      ++r.admissible_states;
      r.max_admissible = std::max(r.max_admissible, n);
    } else {
      r.max_edge = std::max(r.max_edge, n);
    }
  }
  return r;
}

/// Max || (L+^dagger + L-) e_s || over admissible states.
inline double adjoint_defect(const FockSystem& fs) {
  SpMat D = SpMat(fs.ops.Lp.adjoint()) + fs.ops.Lm;
  double worst = 0.0;
  for (int s = 0; s < fs.space.dim(); ++s) {
    if (!fs.space.admissible(s)) continue;
    double n2 = 0.0;
    for (SpMat::InnerIterator it(D, s); it; ++it) n2 += std::norm(it.value());
    worst = std::max(worst, std::sqrt(n2));
  }
  return worst;
}

struct VacuumSector {
  double weight = 0.0;
  int degeneracy = 0;
  UIRLabel label{Series::DiscretePlus, 0.0, 0.0, 0.0};
  std::vector<int> states;  // occupation basis states spanning the sector
  double lowering_residual = 0.0;
};

/// States of minimal L0 annihilated by L-.
inline VacuumSector vacuum_sector(const FockSystem& fs, double tol = 1e-12) {
  const ChargeOperators& o = fs.ops;
  const TruncatedFock& F = fs.space;
  VacuumSector v;
  double emin = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(F.dim());
  for (int c = 0; c < o.L0.outerSize(); ++c)
    for (SpMat::InnerIterator it(o.L0, c); it; ++it)
      if (it.row() == it.col()) diag(it.row()) = it.value();
  for (int s = 0; s < F.dim(); ++s)
    if (F.admissible(s)) emin = std::min(emin, diag(s).real());
  std::vector<int> sector;
  for (int s = 0; s < F.dim(); ++s)
    if (F.admissible(s) && std::abs(diag(s).real() - emin) <= tol) sector.push_back(s);
  Eigen::MatrixXcd A(F.dim(), sector.size());
  for (std::size_t i = 0; i < sector.size(); ++i) A.col(i) = o.Lm * F.basis(sector[i]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  v.weight = emin;
  v.degeneracy = static_cast<int>(sector.size()) - rank;
  v.states = sector;
  v.lowering_residual = sector.empty() ? 0.0 : A.cwiseAbs().maxCoeff();
  v.label = {Series::DiscretePlus, emin, 0.0, 0.0};
  return v;
}

/// Distinct L0 eigenvalues on admissible states of a given charge.
inline std::vector<double> l0_levels(const FockSystem& fs, int charge, double tol = 1e-12) {
  std::vector<double> out;
  for (int s = 0; s < fs.space.dim(); ++s) {
    if (!fs.space.admissible(s) || fs.space.charge(s) != charge) continue;
    double e = (fs.ops.L0 * fs.space.basis(s))(s).real();
    bool seen = false;
    for (double x : out) seen = seen || std::abs(x - e) <= tol;
    if (!seen) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ads2
