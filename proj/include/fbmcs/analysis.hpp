#ifndef FBMCS_ANALYSIS_HPP
#define FBMCS_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "fbmcs/core.hpp"

namespace fbmcs {

/// 10 log10 of signal energy over error energy; +infinity when the estimate
/// matches the original exactly.
double snr_db(const ComplexSignal& original, const ComplexSignal& estimate);

/// Percentage of coefficients whose magnitude strictly exceeds
/// threshold_fraction times the largest magnitude.
SparsityReport dominant_fraction(const Spectrum& spectrum, double threshold_fraction);

struct SparsityRow {
  double h = 0.0;
  double mean_dominant_percent = 0.0;
  int trials = 0;
};

/// For each H, averages the dominant-coefficient percentage over `trials`
/// freshly synthesized signals. Trial streams derive from (seed, H, trial),
/// so the table is reproducible and independent of scheduling.
std::vector<SparsityRow> sparsity_sweep(const std::vector<double>& h_values,
                                        std::size_t n, int trials, double threshold,
                                        std::uint64_t seed);

struct SweepRow {
  std::size_t factor = 0;
  double h = 0.0;
  double mean_snr_bp_db = 0.0;
  double mean_snr_tv_db = 0.0;
  int trials = 0;
  std::uint64_t seed_base = 0;
  int bp_converged = 0;  // trials whose BP solve converged
  int tv_converged = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Full reconstruction benchmark: for each (factor, H) cell, `trials` fresh
/// signals are generated, subsampled, and reconstructed with both solvers;
/// SNRs are averaged. Trials fan out across threads; per-trial seeds derive
/// from (seed, factor, H, trial).
SweepResult reconstruction_sweep(const std::vector<std::size_t>& factors,
                                 const std::vector<double>& h_values, std::size_t n,
                                 int trials, const SolverConfig& config,
                                 std::uint64_t seed);

} // namespace fbmcs

#endif
