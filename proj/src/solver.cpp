#include "fbmcs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fbmcs/sampling.hpp"
#include "fbmcs/transform.hpp"

namespace fbmcs {

namespace {

using CVec = std::vector<Complex>;

double norm2(const CVec& v) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

double dist2(const CVec& a, const CVec& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

// Relative change of the full splitting state between iterations. Measuring
// only x would stall-trigger during dual ramp-up phases where x is pinned.
class ChangeMeter {
public:
  void start() {
    num_ = 0.0;
    den_ = 0.0;
  }
  void add(const CVec& cur, const CVec& prev) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      num_ += std::norm(cur[i] - prev[i]);
      den_ += std::norm(prev[i]);
    }
  }
  double relative() const { return std::sqrt(num_) / std::max(std::sqrt(den_), 1e-300); }

private:
  double num_ = 0.0;
  double den_ = 0.0;
};

double l1_norm(const CVec& v) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::abs(z);
  return acc;
}

double tv_of(const CVec& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) acc += std::abs(v[i + 1] - v[i]);
  return acc;
}

// Row-selected unitary transform A = gather o T with T unitary, so A A* = I.
// to_measurement_domain = inverse DFT when the variable lives in the
// spectral domain and the measurements in time, forward DFT when swapped.
struct PartialUnitaryOp {
  const SampleMask& mask;
  bool variable_is_spectral;

  std::size_t n() const { return mask.n(); }
  std::size_t m() const { return mask.count(); }

  void apply(const CVec& x, CVec& y, CVec& scratch) const {
    scratch = x;
    if (variable_is_spectral) {
      fft_inverse_inplace(scratch);
    } else {
      fft_forward_inplace(scratch);
    }
    y.resize(m());
    const auto& idx = mask.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) y[i] = scratch[idx[i]];
  }

  void adjoint(const CVec& y, CVec& x) const {
    x.assign(n(), Complex(0.0, 0.0));
    const auto& idx = mask.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) x[idx[i]] = y[i];
    if (variable_is_spectral) {
      fft_forward_inplace(x);
    } else {
      fft_inverse_inplace(x);
    }
  }
};

double relative_residual(const PartialUnitaryOp& op, const CVec& x, const CVec& y,
                         double y_norm, CVec& ax, CVec& scratch) {
  op.apply(x, ax, scratch);
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) acc += std::norm(ax[i] - y[i]);
  return std::sqrt(acc) / (y_norm > 0.0 ? y_norm : 1.0);
}

// First differences (Dx)_i = x_{i+1} - x_i and the transpose.
void diff_forward(const CVec& x, CVec& d) {
  d.resize(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) d[i] = x[i + 1] - x[i];
}

void diff_adjoint(const CVec& d, CVec& x) {
  const std::size_t n = d.size() + 1;
  x.assign(n, Complex(0.0, 0.0));
  x[0] = -d[0];
  for (std::size_t i = 1; i + 1 < n; ++i) x[i] = d[i - 1] - d[i];
  x[n - 1] = d[n - 2];
}

// y = (D^T D) x, the second-difference normal matrix (free boundaries).
void laplacian_apply(const CVec& x, CVec& y) {
  const std::size_t n = x.size();
  y.resize(n);
  y[0] = x[0] - x[1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    y[i] = 2.0 * x[i] - x[i - 1] - x[i + 1];
  }
  y[n - 1] = x[n - 1] - x[n - 2];
}

// LDL^T factorization of the SPD tridiagonal D^T D + gamma I (all
// off-diagonals are -1), used both as a direct solver and as the CG
// preconditioner in the TV update.
class ShiftedLaplacianSolver {
public:
  ShiftedLaplacianSolver(std::size_t n, double gamma) : pivots_(n) {
    pivots_[0] = 1.0 + gamma;
    for (std::size_t i = 1; i < n; ++i) {
      const double diag = (i + 1 < n ? 2.0 : 1.0) + gamma;
      pivots_[i] = diag - 1.0 / pivots_[i - 1];
    }
  }

  void solve(CVec& b) const {
    const std::size_t n = pivots_.size();
    for (std::size_t i = 1; i < n; ++i) b[i] += b[i - 1] / pivots_[i - 1];
    for (std::size_t i = 0; i < n; ++i) b[i] /= pivots_[i];
    for (std::size_t i = n - 1; i-- > 0;) b[i] += b[i + 1] / pivots_[i];
  }

private:
  std::vector<double> pivots_;
};

// Preconditioned CG on (D^T D + A^H A) x = rhs. The operator is Hermitian
// PSD; when the all-ones direction is annihilated by both terms the right
// hand side is orthogonal to it as well, so CG stays in the range.
struct TvNormalSolver {
  const PartialUnitaryOp& op;
  ShiftedLaplacianSolver precond;
  CVec r, z, p, kp, scratch_n, scratch_m;

  TvNormalSolver(const PartialUnitaryOp& op_)
      : op(op_),
        precond(op_.n(), static_cast<double>(op_.m()) / static_cast<double>(op_.n())) {}

  void apply_normal(const CVec& x, CVec& out) {
    laplacian_apply(x, out);
    op.apply(x, scratch_m, scratch_n);
    op.adjoint(scratch_m, scratch_n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += scratch_n[i];
  }

  // Warm-started solve; x holds the initial guess on entry.
  void solve(const CVec& rhs, CVec& x, double tol, int max_iters) {
    const double rhs_norm = norm2(rhs);
    if (rhs_norm == 0.0) {
      std::fill(x.begin(), x.end(), Complex(0.0, 0.0));
      return;
    }
    apply_normal(x, kp);
    r.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = rhs[i] - kp[i];
    z = r;
    precond.solve(z);
    p = z;
    double rz = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
      rz += (std::conj(r[i]) * z[i]).real();
    for (int it = 0; it < max_iters; ++it) {
      if (norm2(r) <= tol * rhs_norm) break;
      apply_normal(p, kp);
      double pkp = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i)
        pkp += (std::conj(p[i]) * kp[i]).real();
      if (pkp <= 0.0) break;
      const double alpha = rz / pkp;
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * kp[i];
      }
      z = r;
      precond.solve(z);
      double rz_next = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i)
        rz_next += (std::conj(r[i]) * z[i]).real();
      const double beta = rz_next / rz;
      rz = rz_next;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = z[i] + beta * p[i];
    }
  }
};

ReconstructionResult assemble_result(CVec x, bool variable_is_spectral,
                                     SolverReport report) {
  if (variable_is_spectral) {
    Spectrum spectrum(std::move(x));
    ComplexSignal signal = dft_inverse(spectrum);
    return ReconstructionResult{std::move(spectrum), std::move(signal),
                                std::move(report)};
  }
  // The optimizer lives in the time domain; publish its spectrum so that
  // signal == dft_inverse(spectrum) holds exactly.
  Spectrum spectrum = dft_forward(ComplexSignal(std::move(x)));
  ComplexSignal signal = dft_inverse(spectrum);
  return ReconstructionResult{std::move(spectrum), std::move(signal),
                              std::move(report)};
}

} // namespace

Complex soft_threshold(Complex z, double kappa) {
  if (kappa < 0.0) throw ValidationError("soft_threshold: kappa must be >= 0");
  const double mag = std::abs(z);
  if (mag <= kappa) return Complex(0.0, 0.0);
  return z * (1.0 - kappa / mag);
}

double tv_norm(const Spectrum& spectrum) { return tv_of(spectrum.coeffs()); }

ReconstructionResult solve_bp(const SubsampledSignal& samples,
                              const SolverConfig& config) {
  config.validate();
  const SampleMask& mask = samples.mask();
  const PartialUnitaryOp op{mask, /*variable_is_spectral=*/true};
  const CVec& y = samples.values();
  const double y_norm = norm2(y);
  const std::size_t n = mask.n();

  CVec x, ax, scratch;
  op.adjoint(y, x);  // minimum-norm feasible point

  SolverReport report;
  if (mask.count() == n) {
    // Full sampling: the affine set is a single point.
    report.objective = l1_norm(x);
    report.residual = relative_residual(op, x, y, y_norm, ax, scratch);
    report.iters = 0;
    report.converged = true;
    report.objective_trace.push_back(report.objective);
    return assemble_result(std::move(x), true, std::move(report));
  }

  const double kappa = 1.0 / config.rho;
  CVec z(n, Complex(0.0, 0.0));
  CVec u(n, Complex(0.0, 0.0));
  CVec v(n), residual_m(mask.count());
  CVec x_prev(n), z_prev(n), u_prev(n);

  CVec best_x = x;
  double best_obj = std::numeric_limits<double>::infinity();
  report.objective_trace.reserve(static_cast<std::size_t>(config.max_iters));

  int iter = 0;
  bool converged = false;
  ChangeMeter change;
  while (iter < config.max_iters) {
    ++iter;
    x_prev = x;
    z_prev = z;
    u_prev = u;

    // exact projection of z - u onto {x : Ax = y}
    for (std::size_t i = 0; i < n; ++i) v[i] = z[i] - u[i];
    op.apply(v, residual_m, scratch);
    for (std::size_t i = 0; i < residual_m.size(); ++i)
      residual_m[i] = y[i] - residual_m[i];
    op.adjoint(residual_m, x);
    for (std::size_t i = 0; i < n; ++i) x[i] += v[i];

    const double obj = l1_norm(x);
    report.objective_trace.push_back(obj);
    if (obj < best_obj) {
      best_obj = obj;
      best_x = x;
    }

    // shrinkage and dual accumulation
    for (std::size_t i = 0; i < n; ++i) {
      const Complex w = x[i] + u[i];
      z[i] = soft_threshold(w, kappa);
      u[i] = w - z[i];
    }

    change.start();
    change.add(x, x_prev);
    change.add(z, z_prev);
    change.add(u, u_prev);
    if (iter > 1 && change.relative() <= config.tol_change) {
      if (relative_residual(op, x, y, y_norm, ax, scratch) <= config.tol_primal) {
        converged = true;
        break;
      }
    }
  }

  report.objective = best_obj;
  report.residual = relative_residual(op, best_x, y, y_norm, ax, scratch);
  report.iters = iter;
  report.converged = converged;
  return assemble_result(std::move(best_x), true, std::move(report));
}

ReconstructionResult solve_tv(const SubsampledSignal& samples,
                              const SolverConfig& config, TvDomain domain) {
  config.validate();
  const SampleMask& mask = samples.mask();
  const bool spectral = (domain == TvDomain::spectrum);
  const PartialUnitaryOp op{mask, spectral};
  const CVec& y = samples.values();
  const double y_norm = norm2(y);
  const std::size_t n = mask.n();
  const std::size_t m = mask.count();

  CVec x, ax, scratch;
  op.adjoint(y, x);

  SolverReport report;
  if (m == n) {
    report.objective = tv_of(x);
    report.residual = relative_residual(op, x, y, y_norm, ax, scratch);
    report.iters = 0;
    report.converged = true;
    report.objective_trace.push_back(report.objective);
    return assemble_result(std::move(x), spectral, std::move(report));
  }

  const double kappa = 1.0 / config.rho;
  TvNormalSolver normal(op);

  CVec d, dx, dual_d(n - 1, Complex(0.0, 0.0)), dual_m(m, Complex(0.0, 0.0));
  CVec rhs(n), rhs_diff(n), rhs_meas(n), shifted_m(m);
  CVec x_prev(n), d_prev(n - 1), dual_d_prev(n - 1), dual_m_prev(m);
  diff_forward(x, d);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = soft_threshold(d[i], kappa);

  report.objective_trace.reserve(static_cast<std::size_t>(config.max_iters));

  const double cg_tol = 1e-11;
  const int cg_max_iters = 400;

  int iter = 0;
  bool converged = false;
  ChangeMeter change;
  while (iter < config.max_iters) {
    ++iter;
    x_prev = x;
    d_prev = d;
    dual_d_prev = dual_d;
    dual_m_prev = dual_m;

    // x-update: (D^T D + A^H A) x = D^T(d - u_d) + A^H(y - u_e)
    dx.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) dx[i] = d[i] - dual_d[i];
    diff_adjoint(dx, rhs_diff);
    for (std::size_t i = 0; i < m; ++i) shifted_m[i] = y[i] - dual_m[i];
    op.adjoint(shifted_m, rhs_meas);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = rhs_diff[i] + rhs_meas[i];
    normal.solve(rhs, x, cg_tol, cg_max_iters);

    // d-update (shrinkage) and dual steps
    diff_forward(x, dx);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Complex w = dx[i] + dual_d[i];
      d[i] = soft_threshold(w, kappa);
      dual_d[i] = w - d[i];
    }
    op.apply(x, ax, scratch);
    for (std::size_t i = 0; i < m; ++i) dual_m[i] += ax[i] - y[i];

    double res_acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) res_acc += std::norm(ax[i] - y[i]);
    const double res_rel = std::sqrt(res_acc) / (y_norm > 0.0 ? y_norm : 1.0);

    report.objective_trace.push_back(tv_of(x));

    change.start();
    change.add(x, x_prev);
    change.add(d, d_prev);
    change.add(dual_d, dual_d_prev);
    change.add(dual_m, dual_m_prev);
    if (res_rel <= config.tol_primal && change.relative() <= config.tol_change) {
      converged = true;
      break;
    }
  }

  report.objective = tv_of(x);
  report.residual = relative_residual(op, x, y, y_norm, ax, scratch);
  report.iters = iter;
  report.converged = converged;
  return assemble_result(std::move(x), spectral, std::move(report));
}

ComplexSignal reconstruct_time_domain(const Spectrum& spectrum) {
  return dft_inverse(spectrum);
}

} // namespace fbmcs
