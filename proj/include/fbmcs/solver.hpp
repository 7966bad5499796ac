#ifndef FBMCS_SOLVER_HPP
#define FBMCS_SOLVER_HPP

#include <vector>

#include "fbmcs/core.hpp"

namespace fbmcs {

/// Which domain carries the total-variation objective.
///  - spectrum: minimize TV of the Fourier coefficients subject to agreement
///    with known time-domain samples (the fBm reconstruction case).
///  - signal: minimize TV of the time-domain signal subject to known partial
///    Fourier coefficients (the generic partial-Fourier case). Same engine
///    with the transform roles swapped.
enum class TvDomain { spectrum, signal };

/// Convergence statistics of one solve. `objective_trace` holds the raw
/// objective value of each iterate, in iteration order.
struct SolverReport {
  double objective = 0.0;
  double residual = 0.0;  // relative constraint residual of the returned iterate
  int iters = 0;
  bool converged = false;
  std::vector<double> objective_trace;
};

struct ReconstructionResult {
  Spectrum spectrum;
  ComplexSignal signal;  // always the inverse transform of `spectrum`
  SolverReport report;
};

/// Proximal map of the complex modulus: z * max(1 - kappa/|z|, 0), 0 -> 0.
Complex soft_threshold(Complex z, double kappa);

/// Non-circular total variation: sum of |F[k+1] - F[k]| over the n-1 first
/// differences, complex modulus.
double tv_norm(const Spectrum& spectrum);

/// Basis pursuit: approximately minimizes the complex l1 norm of the
/// spectrum over the affine set of spectra consistent with the samples.
/// Operator splitting with an exact affine projection (the measurement
/// operator has orthonormal rows), complex shrinkage with threshold 1/rho,
/// and a dual accumulation step. Non-convergence within max_iters is
/// returned as a flagged result, not thrown.
ReconstructionResult solve_bp(const SubsampledSignal& samples,
                              const SolverConfig& config);

/// Total-variation minimization subject to the same consistency constraint.
/// Splits on the first-difference variable: shrinkage of the differences
/// alternates with an equality-penalized least-squares update solved by
/// preconditioned CG, the preconditioner being a direct tridiagonal
/// factorization of the difference normal matrix.
ReconstructionResult solve_tv(const SubsampledSignal& samples,
                              const SolverConfig& config,
                              TvDomain domain = TvDomain::spectrum);

/// Final pipeline stage: back to the time domain (alias of dft_inverse).
ComplexSignal reconstruct_time_domain(const Spectrum& spectrum);

} // namespace fbmcs

#endif
