#ifndef FBMCS_IO_HPP
#define FBMCS_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fbmcs/analysis.hpp"
#include "fbmcs/core.hpp"

namespace fbmcs {

// Signal files are CSV with header "index,re,im"; indices must run 0..n-1
// without gaps or duplicates. Doubles are written with the shortest
// representation that round-trips, so save/load is bit-exact.
void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& signal);
ComplexSignal read_signal_csv(const std::filesystem::path& path);

// Mask files carry the full signal length as metadata ("# n=<N>"), then a
// single "index" column of strictly increasing sample positions.
void write_mask_csv(const std::filesystem::path& path, const SampleMask& mask);
SampleMask read_mask_csv(const std::filesystem::path& path);

// Spectrum files add a magnitude column: "index,magnitude,re,im".
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum);

/// Reads one numeric column out of an arbitrary CSV (by 0-based position or
/// by header name) and promotes it to a complex signal with zero imaginary
/// parts. A header row is skipped automatically when present.
ComplexSignal load_timeseries(const std::filesystem::path& path,
                              const std::string& column);

struct ReconstructionReport {
  std::string method;     // "bp" or "tv"
  std::size_t n = 0;
  std::size_t m = 0;
  double factor = 0.0;
  std::optional<double> hurst;
  std::optional<double> snr_db;
  double residual = 0.0;
  int iters = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  SolverConfig config;
};

std::string report_to_json(const ReconstructionReport& report);
void write_report_json(const std::filesystem::path& path,
                       const ReconstructionReport& report);

void write_sparsity_csv(const std::filesystem::path& path,
                        const std::vector<SparsityRow>& rows, std::size_t n,
                        double threshold, std::uint64_t seed);
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep,
                     std::size_t n);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

} // namespace fbmcs

#endif
