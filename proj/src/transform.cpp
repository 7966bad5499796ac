#include "fbmcs/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace fbmcs {

namespace {

// FFTW planning is not thread-safe, so plans are created once per (n, sign)
// under a mutex and then executed concurrently via fftw_execute_dft, which is
// safe on distinct buffers. FFTW_UNALIGNED lets one plan serve any buffer.
class PlanCache {
public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<fftw_complex> scratch(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch.data(),
                                      scratch.data(), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

private:
  PlanCache() = default;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

void transform_inplace(std::span<Complex> buf, int sign) {
  const std::size_t n = buf.size();
  if (n == 0) return;
  fftw_plan plan = PlanCache::instance().get(n, sign);
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_execute_dft(plan, data, data);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Complex& z : buf) z *= scale;
}

} // namespace

void fft_forward_inplace(std::span<Complex> buf) {
  transform_inplace(buf, FFTW_FORWARD);
}

void fft_inverse_inplace(std::span<Complex> buf) {
  transform_inplace(buf, FFTW_BACKWARD);
}

Spectrum dft_forward(const ComplexSignal& f) {
  std::vector<Complex> coeffs = f.values();
  fft_forward_inplace(coeffs);
  return Spectrum(std::move(coeffs));
}

ComplexSignal dft_inverse(const Spectrum& spectrum) {
  std::vector<Complex> values = spectrum.coeffs();
  fft_inverse_inplace(values);
  return ComplexSignal(std::move(values));
}

double coherence(const SampleMask& mask) {
  const std::size_t n = mask.n();
  // Evaluate the basis columns through the actual transform: column j of the
  // synthesis basis is the inverse DFT of the j-th unit spectrum.
  double max_inner = 0.0;
  std::vector<Complex> column(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(column.begin(), column.end(), Complex(0.0, 0.0));
    column[j] = Complex(1.0, 0.0);
    fft_inverse_inplace(column);
    for (std::size_t row : mask.indices()) {
      max_inner = std::max(max_inner, std::abs(column[row]));
    }
  }
  return std::sqrt(static_cast<double>(n)) * max_inner;
}

long long sufficient_sample_bound(double mu, long long k_sparsity, std::size_t n,
                                  double c) {
  if (!(mu >= 1.0)) throw ValidationError("sufficient_sample_bound: mu must be >= 1");
  if (k_sparsity < 1) throw ValidationError("sufficient_sample_bound: k_sparsity must be >= 1");
  if (n < 1) throw ValidationError("sufficient_sample_bound: n must be >= 1");
  if (!(c > 0.0)) throw ValidationError("sufficient_sample_bound: c must be > 0");
  const double bound =
      c * mu * mu * static_cast<double>(k_sparsity) * std::log(static_cast<double>(n));
  return static_cast<long long>(std::ceil(bound));
}

} // namespace fbmcs
