#include "fbmcs/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "json.hpp"

namespace fbmcs {

namespace {

using nlohmann::ordered_json;

std::string location(const std::filesystem::path& path, std::size_t line) {
  std::ostringstream os;
  os << path.string() << ":" << line;
  return os.str();
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& what) {
  throw IoError(location(path, line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool parse_double(std::string_view s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !s.empty();
}

bool parse_size(std::string_view s, std::size_t& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !s.empty();
}

// Reads all lines, stripping a UTF-8 BOM and trailing carriage returns.
std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (lines.empty() && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish_out(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

} // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw IoError("failed to format a double");
  return std::string(buf, ptr);
}

void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& signal) {
  std::ofstream out = open_out(path);
  out << "index,re,im\n";
  for (std::size_t i = 0; i < signal.size(); ++i)
    out << i << ',' << format_double(signal[i].real()) << ','
        << format_double(signal[i].imag()) << '\n';
  finish_out(out, path);
}

ComplexSignal read_signal_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) fail(path, 1, "empty file, expected header index,re,im");
  if (trim(lines[0]) != "index,re,im")
    fail(path, 1, "expected header index,re,im");
  std::vector<Complex> values;
  values.reserve(lines.size() - 1);
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const std::string_view raw = trim(lines[ln]);
    if (raw.empty()) continue;
    const auto cells = split_csv(raw);
    if (cells.size() != 3) fail(path, ln + 1, "expected 3 columns");
    std::size_t index = 0;
    if (!parse_size(cells[0], index)) fail(path, ln + 1, "bad index");
    if (index != values.size())
      fail(path, ln + 1,
           "index " + std::to_string(index) + " out of order, expected " +
               std::to_string(values.size()));
    double re = 0.0;
    double im = 0.0;
    if (!parse_double(cells[1], re)) fail(path, ln + 1, "bad re value");
    if (!parse_double(cells[2], im)) fail(path, ln + 1, "bad im value");
    if (!std::isfinite(re) || !std::isfinite(im))
      fail(path, ln + 1, "non-finite value");
    values.emplace_back(re, im);
  }
  if (values.empty()) fail(path, lines.size(), "no data rows");
  return ComplexSignal(std::move(values));
}

void write_mask_csv(const std::filesystem::path& path, const SampleMask& mask) {
  std::ofstream out = open_out(path);
  out << "# n=" << mask.n() << "\n";
  out << "index\n";
  for (std::size_t idx : mask.indices()) out << idx << '\n';
  finish_out(out, path);
}

SampleMask read_mask_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) fail(path, 1, "empty file, expected # n=<N>");
  const std::string_view meta = trim(lines[0]);
  constexpr std::string_view kPrefix = "# n=";
  if (meta.rfind(kPrefix, 0) != 0) fail(path, 1, "expected metadata line # n=<N>");
  std::size_t n = 0;
  if (!parse_size(meta.substr(kPrefix.size()), n)) fail(path, 1, "bad n value");
  if (lines.size() < 2 || trim(lines[1]) != "index")
    fail(path, 2, "expected header index");
  std::vector<std::size_t> indices;
  for (std::size_t ln = 2; ln < lines.size(); ++ln) {
    const std::string_view raw = trim(lines[ln]);
    if (raw.empty()) continue;
    std::size_t idx = 0;
    if (!parse_size(raw, idx)) fail(path, ln + 1, "bad index");
    indices.push_back(idx);
  }
  try {
    return SampleMask(n, std::move(indices));
  } catch (const ValidationError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum) {
  std::ofstream out = open_out(path);
  out << "index,magnitude,re,im\n";
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    out << k << ',' << format_double(std::abs(spectrum[k])) << ','
        << format_double(spectrum[k].real()) << ','
        << format_double(spectrum[k].imag()) << '\n';
  finish_out(out, path);
}

ComplexSignal load_timeseries(const std::filesystem::path& path,
                              const std::string& column) {
  const std::vector<std::string> lines = read_lines(path);
  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw IoError(path.string() + ": empty file");

  const auto head = split_csv(trim(lines[first]));
  std::size_t col = 0;
  bool skip_first = false;
  if (parse_size(trim(column), col)) {
    // Positional selector: the first line is a header when the target cell
    // does not parse as a number.
    double probe = 0.0;
    skip_first = col >= head.size() || !parse_double(head[col], probe);
  } else {
    skip_first = true;
    bool found = false;
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (head[i] == trim(column)) {
        col = i;
        found = true;
        break;
      }
    }
    if (!found)
      fail(path, first + 1, "no column named '" + column + "' in header");
  }

  std::vector<Complex> values;
  for (std::size_t ln = first + (skip_first ? 1 : 0); ln < lines.size(); ++ln) {
    const std::string_view raw = trim(lines[ln]);
    if (raw.empty()) continue;
    const auto cells = split_csv(raw);
    if (col >= cells.size())
      fail(path, ln + 1,
           "row has " + std::to_string(cells.size()) + " columns, need " +
               std::to_string(col + 1));
    double v = 0.0;
    if (!parse_double(cells[col], v)) fail(path, ln + 1, "bad numeric value");
    if (!std::isfinite(v)) fail(path, ln + 1, "non-finite value");
    values.emplace_back(v, 0.0);
  }
  if (values.empty()) throw IoError(path.string() + ": no data rows");
  return ComplexSignal(std::move(values));
}

std::string report_to_json(const ReconstructionReport& report) {
  ordered_json j;
  j["method"] = report.method;
  j["n"] = report.n;
  j["m"] = report.m;
  j["factor"] = report.factor;
  if (report.hurst) j["hurst"] = *report.hurst;
  if (report.snr_db) j["snr_db"] = *report.snr_db;
  j["residual"] = report.residual;
  j["iters"] = report.iters;
  j["converged"] = report.converged;
  j["seed"] = report.seed;
  j["solver_config"] = {{"max_iters", report.config.max_iters},
                        {"tol_primal", report.config.tol_primal},
                        {"tol_change", report.config.tol_change},
                        {"rho", report.config.rho}};
  return j.dump(2) + "\n";
}

void write_report_json(const std::filesystem::path& path,
                       const ReconstructionReport& report) {
  std::ofstream out = open_out(path);
  out << report_to_json(report);
  finish_out(out, path);
}

void write_sparsity_csv(const std::filesystem::path& path,
                        const std::vector<SparsityRow>& rows, std::size_t n,
                        double threshold, std::uint64_t seed) {
  std::ofstream out = open_out(path);
  out << "# n=" << n << ",threshold=" << format_double(threshold) << ",seed=" << seed
      << "\n";
  out << "hurst,mean_dominant_percent,trials\n";
  for (const SparsityRow& row : rows)
    out << format_double(row.h) << ',' << format_double(row.mean_dominant_percent)
        << ',' << row.trials << '\n';
  finish_out(out, path);
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep,
                     std::size_t n) {
  std::ofstream out = open_out(path);
  out << "# n=" << n << "\n";
  out << "factor,hurst,mean_snr_bp_db,mean_snr_tv_db,trials,bp_converged,tv_"
         "converged,seed\n";
  for (const SweepRow& row : sweep.rows)
    out << row.factor << ',' << format_double(row.h) << ','
        << format_double(row.mean_snr_bp_db) << ','
        << format_double(row.mean_snr_tv_db) << ',' << row.trials << ','
        << row.bp_converged << ',' << row.tv_converged << ',' << row.seed_base
        << '\n';
  finish_out(out, path);
}

} // namespace fbmcs
