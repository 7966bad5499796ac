#include "fbmcs/fbm.hpp"

#include <cmath>
#include <vector>

#include "fbmcs/rng.hpp"
#include "fbmcs/transform.hpp"

namespace fbmcs {

double theoretical_amplitude(HurstParameter h, std::size_t n, std::size_t k) {
  if (k >= n) throw ValidationError("theoretical_amplitude: k out of range");
  if (k == 0) return 0.0;
  const double freq = (k <= n / 2) ? static_cast<double>(k)
                                   : static_cast<double>(k) - static_cast<double>(n);
  const double exponent = -(2.0 * h.value() + 1.0) / 2.0;
  return std::pow(std::abs(freq), exponent);
}

ComplexSignal synthesize_fbm(const FbmSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Complex> coeffs(spec.n, Complex(0.0, 0.0));
  for (std::size_t k = 1; k < spec.n; ++k) {
    coeffs[k] = theoretical_amplitude(spec.h, spec.n, k) * rng.complex_gaussian();
  }
  fft_inverse_inplace(coeffs);
  const Complex origin = coeffs[0];
  for (Complex& z : coeffs) z -= origin;  // B(0) = 0 exactly
  return ComplexSignal(std::move(coeffs));
}

ComplexSignal synthesize_fbm_real(const FbmSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Complex> coeffs(spec.n, Complex(0.0, 0.0));
  // Positive frequencies get fresh draws, negative ones their conjugates;
  // the Nyquist bin of an even length must stay real.
  for (std::size_t k = 1; 2 * k < spec.n; ++k) {
    const Complex c = theoretical_amplitude(spec.h, spec.n, k) * rng.complex_gaussian();
    coeffs[k] = c;
    coeffs[spec.n - k] = std::conj(c);
  }
  if (spec.n % 2 == 0) {
    const std::size_t nyquist = spec.n / 2;
    coeffs[nyquist] = theoretical_amplitude(spec.h, spec.n, nyquist) * rng.gaussian();
  }
  fft_inverse_inplace(coeffs);
  std::vector<Complex> values(spec.n);
  const double origin = coeffs[0].real();
  for (std::size_t i = 0; i < spec.n; ++i) {
    values[i] = Complex(coeffs[i].real() - origin, 0.0);
  }
  return ComplexSignal(std::move(values));
}

double covariance_coefficient(HurstParameter h) {
  const double hv = h.value();
  if (hv == 0.5) return 1.0;  // limit through the Gamma pole
  const double pi = 3.14159265358979323846;
  // cos(pi H) written as sin(pi (1/2 - H)): near H = 1/2 the subtraction is
  // exact and the sine well-conditioned, where the cosine would cancel.
  return std::tgamma(1.0 - 2.0 * hv) * std::sin(pi * (0.5 - hv)) / (pi * hv);
}

double fbm_covariance(double t, double s, HurstParameter h) {
  const double two_h = 2.0 * h.value();
  const double c = covariance_coefficient(h);
  return 0.5 * c *
         (std::pow(std::abs(t), two_h) + std::pow(std::abs(s), two_h) -
          std::pow(std::abs(t - s), two_h));
}

} // namespace fbmcs
