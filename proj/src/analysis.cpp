#include "fbmcs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <limits>
#include <thread>

#include "fbmcs/fbm.hpp"
#include "fbmcs/rng.hpp"
#include "fbmcs/sampling.hpp"
#include "fbmcs/solver.hpp"
#include "fbmcs/transform.hpp"

namespace fbmcs {

namespace {

// Runs fn(0..trials-1) on a pool of std::async tasks, bounded by the hardware
// thread count, and returns results in trial order.
template <typename T, typename Fn>
std::vector<T> run_trials(int trials, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(trials));
  const unsigned width = std::max(1u, std::thread::hardware_concurrency());
  int next = 0;
  while (next < trials) {
    const int end = std::min(trials, next + static_cast<int>(width));
    std::vector<std::future<T>> batch;
    batch.reserve(static_cast<std::size_t>(end - next));
    for (int t = next; t < end; ++t)
      batch.push_back(std::async(std::launch::async, fn, t));
    for (int t = next; t < end; ++t)
      out[static_cast<std::size_t>(t)] = batch[static_cast<std::size_t>(t - next)].get();
    next = end;
  }
  return out;
}

} // namespace

double snr_db(const ComplexSignal& original, const ComplexSignal& estimate) {
  if (original.size() != estimate.size())
    throw ValidationError("snr_db: signals have different lengths");
  double sig = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    sig += std::norm(original[i]);
    err += std::norm(original[i] - estimate[i]);
  }
  if (sig == 0.0)
    throw ValidationError("snr_db: original signal is identically zero");
  if (err == 0.0)
    return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(sig / err);
}

SparsityReport dominant_fraction(const Spectrum& spectrum, double threshold_fraction) {
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0))
    throw ValidationError("dominant_fraction: threshold must lie in (0, 1)");
  double peak = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    peak = std::max(peak, std::abs(spectrum[k]));
  if (peak == 0.0)
    throw ValidationError("dominant_fraction: spectrum is identically zero");
  const double cut = threshold_fraction * peak;
  std::size_t count = 0;
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    if (std::abs(spectrum[k]) > cut) ++count;
  SparsityReport report;
  report.threshold_fraction = threshold_fraction;
  report.dominant_percent =
      100.0 * static_cast<double>(count) / static_cast<double>(spectrum.size());
  return report;
}

std::vector<SparsityRow> sparsity_sweep(const std::vector<double>& h_values,
                                        std::size_t n, int trials, double threshold,
                                        std::uint64_t seed) {
  if (trials < 1) throw ValidationError("sparsity_sweep: trials must be positive");
  std::vector<SparsityRow> rows;
  rows.reserve(h_values.size());
  for (double h : h_values) {
    const HurstParameter hurst(h);
    auto percents = run_trials<double>(trials, [&](int trial) {
      const std::uint64_t trial_seed =
          derive_seed(seed, {seed_tag(h), static_cast<std::uint64_t>(trial)});
      const ComplexSignal signal = synthesize_fbm(FbmSpec{n, hurst, trial_seed});
      return dominant_fraction(dft_forward(signal), threshold).dominant_percent;
    });
    SparsityRow row;
    row.h = h;
    row.trials = trials;
    for (double p : percents) row.mean_dominant_percent += p;
    row.mean_dominant_percent /= static_cast<double>(trials);
    rows.push_back(row);
  }
  return rows;
}

namespace {

struct TrialOutcome {
  double snr_bp = 0.0;
  double snr_tv = 0.0;
  bool bp_converged = false;
  bool tv_converged = false;
};

} // namespace

SweepResult reconstruction_sweep(const std::vector<std::size_t>& factors,
                                 const std::vector<double>& h_values, std::size_t n,
                                 int trials, const SolverConfig& config,
                                 std::uint64_t seed) {
  if (trials < 1)
    throw ValidationError("reconstruction_sweep: trials must be positive");
  config.validate();
  SweepResult result;
  for (std::size_t factor : factors) {
    for (double h : h_values) {
      const HurstParameter hurst(h);
      auto outcomes = run_trials<TrialOutcome>(trials, [&](int trial) {
        const std::uint64_t base = derive_seed(
            seed, {static_cast<std::uint64_t>(factor), seed_tag(h),
                   static_cast<std::uint64_t>(trial)});
        const ComplexSignal signal =
            synthesize_fbm(FbmSpec{n, hurst, derive_seed(base, {1})});
        const SampleMask mask = random_mask(n, factor, derive_seed(base, {2}));
        const SubsampledSignal samples = subsample(signal, mask);
        const ReconstructionResult bp = solve_bp(samples, config);
        const ReconstructionResult tv = solve_tv(samples, config, TvDomain::spectrum);
        TrialOutcome o;
        o.snr_bp = snr_db(signal, bp.signal);
        o.snr_tv = snr_db(signal, tv.signal);
        o.bp_converged = bp.report.converged;
        o.tv_converged = tv.report.converged;
        return o;
      });
      SweepRow row;
      row.factor = factor;
      row.h = h;
      row.trials = trials;
      row.seed_base = seed;
      for (const TrialOutcome& o : outcomes) {
        row.mean_snr_bp_db += o.snr_bp;
        row.mean_snr_tv_db += o.snr_tv;
        row.bp_converged += o.bp_converged ? 1 : 0;
        row.tv_converged += o.tv_converged ? 1 : 0;
      }
      row.mean_snr_bp_db /= static_cast<double>(trials);
      row.mean_snr_tv_db /= static_cast<double>(trials);
      result.rows.push_back(row);
    }
  }
  return result;
}

} // namespace fbmcs
