#include "fbmcs/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "fbmcs/rng.hpp"
#include "fbmcs/transform.hpp"

namespace fbmcs {

SampleMask random_mask(std::size_t n, std::size_t factor, std::uint64_t seed) {
  if (n == 0) throw ValidationError("random_mask: n must be >= 1");
  if (factor < 1 || factor > n) {
    throw ValidationError("random_mask: factor must lie in [1, n]");
  }
  const std::size_t m = n / factor;

  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});

  Rng rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return SampleMask(n, std::move(pool));
}

SubsampledSignal subsample(const ComplexSignal& f, const SampleMask& mask) {
  if (mask.n() != f.size()) {
    throw ValidationError("subsample: mask length does not match the signal");
  }
  std::vector<Complex> values;
  values.reserve(mask.count());
  for (std::size_t idx : mask.indices()) values.push_back(f[idx]);
  return SubsampledSignal(mask, std::move(values));
}

ComplexSignal scatter(const SubsampledSignal& samples) {
  std::vector<Complex> full(samples.mask().n(), Complex(0.0, 0.0));
  const auto& indices = samples.mask().indices();
  const auto& values = samples.values();
  for (std::size_t i = 0; i < indices.size(); ++i) full[indices[i]] = values[i];
  return ComplexSignal(std::move(full));
}

SubsampledSignal measure(const Spectrum& spectrum, const SampleMask& mask) {
  if (mask.n() != spectrum.size()) {
    throw ValidationError("measure: mask length does not match the spectrum");
  }
  std::vector<Complex> time = spectrum.coeffs();
  fft_inverse_inplace(time);
  std::vector<Complex> values;
  values.reserve(mask.count());
  for (std::size_t idx : mask.indices()) values.push_back(time[idx]);
  return SubsampledSignal(mask, std::move(values));
}

Spectrum measure_adjoint(const SubsampledSignal& samples) {
  std::vector<Complex> full(samples.mask().n(), Complex(0.0, 0.0));
  const auto& indices = samples.mask().indices();
  const auto& values = samples.values();
  for (std::size_t i = 0; i < indices.size(); ++i) full[indices[i]] = values[i];
  fft_forward_inplace(full);
  return Spectrum(std::move(full));
}

} // namespace fbmcs
