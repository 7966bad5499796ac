// Command-line front end: synthesize fBm signals, subsample them, and
// reconstruct from the sparse samples with the BP or TV solver.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fbmcs/analysis.hpp"
#include "fbmcs/fbm.hpp"
#include "fbmcs/io.hpp"
#include "fbmcs/sampling.hpp"
#include "fbmcs/solver.hpp"
#include "fbmcs/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoConverge = 4;

struct SynthOpts {
  std::size_t n = 0;
  double hurst = 0.0;
  std::uint64_t seed = 0;
  bool real = false;
  std::string out;
};

struct ImportOpts {
  std::string in;
  std::string column = "0";
  std::string out;
};

struct SampleOpts {
  std::string in;
  std::size_t factor = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string mask_out;
};

struct ReconstructOpts {
  std::string method;
  std::string samples;
  std::string mask;
  std::string out;
  std::string report;
  std::string truth;
  std::string tv_domain = "spectrum";
  std::size_t n = 0;  // optional cross-check against mask metadata
  std::optional<double> hurst;
  std::uint64_t seed = 0;
  fbmcs::SolverConfig config;
};

struct SpectrumOpts {
  std::string in;
  std::string out;
};

struct BenchOpts {
  std::string kind;
  int trials = 10;
  std::uint64_t seed = 1;
  std::size_t n = 0;  // 0 picks the sweep's default size
  double threshold = 0.1;
  std::string out;
};

int run_synth(const SynthOpts& o) {
  const fbmcs::FbmSpec spec{o.n, fbmcs::HurstParameter(o.hurst), o.seed};
  const fbmcs::ComplexSignal signal =
      o.real ? fbmcs::synthesize_fbm_real(spec) : fbmcs::synthesize_fbm(spec);
  fbmcs::write_signal_csv(o.out, signal);
  std::cout << "wrote " << o.out << ": n=" << o.n << " hurst=" << o.hurst
            << " seed=" << o.seed << (o.real ? " real" : "") << "\n";
  return kExitOk;
}

int run_import(const ImportOpts& o) {
  const fbmcs::ComplexSignal signal = fbmcs::load_timeseries(o.in, o.column);
  fbmcs::write_signal_csv(o.out, signal);
  std::cout << "wrote " << o.out << ": n=" << signal.size() << " from column '"
            << o.column << "'\n";
  return kExitOk;
}

int run_sample(const SampleOpts& o) {
  const fbmcs::ComplexSignal signal = fbmcs::read_signal_csv(o.in);
  const fbmcs::SampleMask mask = fbmcs::random_mask(signal.size(), o.factor, o.seed);
  const fbmcs::SubsampledSignal sub = fbmcs::subsample(signal, mask);
  fbmcs::write_signal_csv(o.out, fbmcs::ComplexSignal(sub.values()));
  fbmcs::write_mask_csv(o.mask_out, mask);
  std::cout << "kept " << mask.count() << " of " << signal.size() << " samples (factor "
            << o.factor << ", seed " << o.seed << ")\n";
  return kExitOk;
}

int run_reconstruct(const ReconstructOpts& o) {
  const fbmcs::ComplexSignal sample_values = fbmcs::read_signal_csv(o.samples);
  const fbmcs::SampleMask mask = fbmcs::read_mask_csv(o.mask);
  if (o.n != 0 && o.n != mask.n())
    throw fbmcs::ValidationError("--n disagrees with the mask metadata (" +
                                 std::to_string(o.n) + " vs " +
                                 std::to_string(mask.n()) + ")");
  if (sample_values.size() != mask.count())
    throw fbmcs::ValidationError("sample count does not match mask size");
  std::vector<fbmcs::Complex> values(sample_values.begin(), sample_values.end());
  const fbmcs::SubsampledSignal sub(mask, std::move(values));

  const fbmcs::ReconstructionResult result = [&] {
    if (o.method == "bp") return fbmcs::solve_bp(sub, o.config);
    const fbmcs::TvDomain domain = o.tv_domain == "signal"
                                       ? fbmcs::TvDomain::signal
                                       : fbmcs::TvDomain::spectrum;
    return fbmcs::solve_tv(sub, o.config, domain);
  }();
  fbmcs::write_signal_csv(o.out, result.signal);

  fbmcs::ReconstructionReport report;
  report.method = o.method;
  report.n = mask.n();
  report.m = mask.count();
  report.factor = static_cast<double>(mask.n()) / static_cast<double>(mask.count());
  report.hurst = o.hurst;
  report.residual = result.report.residual;
  report.iters = result.report.iters;
  report.converged = result.report.converged;
  report.seed = o.seed;
  report.config = o.config;
  if (!o.truth.empty()) {
    const fbmcs::ComplexSignal truth = fbmcs::read_signal_csv(o.truth);
    report.snr_db = fbmcs::snr_db(truth, result.signal);
  }
  if (!o.report.empty()) fbmcs::write_report_json(o.report, report);

  std::cout << "method=" << o.method << " n=" << report.n << " m=" << report.m
            << " iters=" << report.iters << " residual=" << report.residual
            << " converged=" << (report.converged ? "true" : "false");
  if (report.snr_db) std::cout << " snr_db=" << *report.snr_db;
  std::cout << "\n";
  return report.converged ? kExitOk : kExitNoConverge;
}

int run_spectrum(const SpectrumOpts& o) {
  const fbmcs::ComplexSignal signal = fbmcs::read_signal_csv(o.in);
  fbmcs::write_spectrum_csv(o.out, fbmcs::dft_forward(signal));
  std::cout << "wrote " << o.out << ": n=" << signal.size() << "\n";
  return kExitOk;
}

int run_bench(const BenchOpts& o) {
  const std::vector<double> hs = {0.2, 0.4, 0.6, 0.8};
  if (o.kind == "sparsity") {
    const std::size_t n = o.n == 0 ? 1024 : o.n;
    const auto rows = fbmcs::sparsity_sweep(hs, n, o.trials, o.threshold, o.seed);
    fbmcs::write_sparsity_csv(o.out, rows, n, o.threshold, o.seed);
    std::cout << "hurst  dominant%\n";
    for (const auto& row : rows)
      std::cout << row.h << "    " << row.mean_dominant_percent << "\n";
  } else {
    const std::size_t n = o.n == 0 ? 128 : o.n;
    const fbmcs::SweepResult sweep = fbmcs::reconstruction_sweep(
        {2, 4}, hs, n, o.trials, fbmcs::SolverConfig{}, o.seed);
    fbmcs::write_sweep_csv(o.out, sweep, n);
    std::cout << "factor  hurst  bp_snr_db  tv_snr_db\n";
    for (const auto& row : sweep.rows)
      std::cout << row.factor << "       " << row.h << "    " << row.mean_snr_bp_db
                << "    " << row.mean_snr_tv_db << "\n";
  }
  std::cout << "wrote " << o.out << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Brownian motion synthesis and compressive-sampling "
               "reconstruction"};
  app.require_subcommand(1);

  SynthOpts synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Synthesize an fBm signal");
  synth_cmd->add_option("--n", synth.n, "Signal length")->required();
  synth_cmd->add_option("--hurst", synth.hurst, "Hurst exponent in (0,1)")->required();
  synth_cmd->add_option("--seed", synth.seed, "RNG seed");
  synth_cmd->add_flag("--real", synth.real, "Real-valued sample path");
  synth_cmd->add_option("--out", synth.out, "Output signal CSV")->required();

  ImportOpts import_o;
  CLI::App* import_cmd = app.add_subcommand("import", "Convert a CSV column to a signal file");
  import_cmd->add_option("--in", import_o.in, "Input CSV")->required();
  import_cmd->add_option("--column", import_o.column, "Column name or 0-based position");
  import_cmd->add_option("--out", import_o.out, "Output signal CSV")->required();

  SampleOpts sample;
  CLI::App* sample_cmd = app.add_subcommand("sample", "Keep a random subset of samples");
  sample_cmd->add_option("--in", sample.in, "Input signal CSV")->required();
  sample_cmd->add_option("--factor", sample.factor, "Subsampling factor")->required();
  sample_cmd->add_option("--seed", sample.seed, "RNG seed");
  sample_cmd->add_option("--out", sample.out, "Kept values CSV")->required();
  sample_cmd->add_option("--mask-out", sample.mask_out, "Mask CSV")->required();

  ReconstructOpts rec;
  CLI::App* rec_cmd = app.add_subcommand("reconstruct", "Recover a signal from sparse samples");
  rec_cmd->add_option("--method", rec.method, "bp or tv")
      ->required()
      ->check(CLI::IsMember({"bp", "tv"}));
  rec_cmd->add_option("--samples", rec.samples, "Kept values CSV")->required();
  rec_cmd->add_option("--mask", rec.mask, "Mask CSV")->required();
  rec_cmd->add_option("--n", rec.n, "Cross-check signal length");
  rec_cmd->add_option("--out", rec.out, "Reconstructed signal CSV")->required();
  rec_cmd->add_option("--report", rec.report, "Report JSON path");
  rec_cmd->add_option("--truth", rec.truth, "Original signal CSV, enables SNR");
  rec_cmd->add_option("--tv-domain", rec.tv_domain, "TV objective domain")
      ->check(CLI::IsMember({"spectrum", "signal"}));
  rec_cmd->add_option("--seed", rec.seed, "Provenance seed recorded in the report");
  double rec_hurst = 0.0;
  CLI::Option* hurst_opt =
      rec_cmd->add_option("--hurst", rec_hurst, "Provenance Hurst recorded in the report");
  rec_cmd->add_option("--max-iters", rec.config.max_iters, "Iteration cap");
  rec_cmd->add_option("--tol-primal", rec.config.tol_primal, "Constraint tolerance");
  rec_cmd->add_option("--tol-change", rec.config.tol_change, "Iterate-change tolerance");
  rec_cmd->add_option("--rho", rec.config.rho, "ADMM penalty");

  SpectrumOpts spec_o;
  CLI::App* spec_cmd = app.add_subcommand("spectrum", "Write the unitary DFT of a signal");
  spec_cmd->add_option("--in", spec_o.in, "Input signal CSV")->required();
  spec_cmd->add_option("--out", spec_o.out, "Output spectrum CSV")->required();

  BenchOpts bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Sparsity and reconstruction sweeps");
  bench_cmd->add_option("kind", bench.kind, "sparsity (dominant coefficients) or quality (SNR)")
      ->required()
      ->check(CLI::IsMember({"sparsity", "quality"}));
  bench_cmd->add_option("--trials", bench.trials, "Trials per cell");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--n", bench.n, "Signal length (0 = sweep default)");
  bench_cmd->add_option("--threshold", bench.threshold, "Dominance threshold (sparsity)");
  bench_cmd->add_option("--out", bench.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*synth_cmd) return run_synth(synth);
    if (*import_cmd) return run_import(import_o);
    if (*sample_cmd) return run_sample(sample);
    if (*rec_cmd) {
      if (hurst_opt->count() > 0) rec.hurst = rec_hurst;
      return run_reconstruct(rec);
    }
    if (*spec_cmd) return run_spectrum(spec_o);
    if (*bench_cmd) return run_bench(bench);
  } catch (const fbmcs::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const fbmcs::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
