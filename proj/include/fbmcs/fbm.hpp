#ifndef FBMCS_FBM_HPP
#define FBMCS_FBM_HPP

#include <cstdint>

#include "fbmcs/core.hpp"

namespace fbmcs {

/// Parameters of one synthesized realization. The seed identifies the
/// realization's private random stream.
struct FbmSpec {
  FbmSpec(std::size_t n, HurstParameter h, std::uint64_t seed)
      : n(n), h(h), seed(seed) {
    if (n < 2) throw ValidationError("FbmSpec: n must be >= 2");
  }

  std::size_t n;
  HurstParameter h;
  std::uint64_t seed;
};

/// Amplitude of frequency bin k under the 1/|w|^(2H+1) spectral law:
/// |w_k|^-(2H+1)/2 with w_k the signed frequency (k for k <= n/2, k - n
/// above). The divergent DC bin is pinned to 0; the generator recenters via
/// the zero-origin subtraction instead.
double theoretical_amplitude(HurstParameter h, std::size_t n, std::size_t k);

/// Fourier-synthesis generator: independent unit complex Gaussians per bin,
/// scaled by theoretical_amplitude, inverse unitary DFT, then shifted so the
/// first sample is exactly zero. Deterministic per seed.
ComplexSignal synthesize_fbm(const FbmSpec& spec);

/// Real-valued variant: the coefficients are Hermitian-symmetrized before
/// the inverse transform, so the output has exactly zero imaginary parts.
ComplexSignal synthesize_fbm_real(const FbmSpec& spec);

/// The H-dependent coefficient in the analytic covariance,
/// Gamma(1-2H) cos(pi H) / (pi H); equal to 1 at H = 1/2 by taking the limit
/// through the Gamma pole.
double covariance_coefficient(HurstParameter h);

/// Analytic covariance E{B(t) B(s)} = (C_H / 2)(|t|^2H + |s|^2H - |t-s|^2H).
/// Serves as the statistical oracle for the generator.
double fbm_covariance(double t, double s, HurstParameter h);

} // namespace fbmcs

#endif
