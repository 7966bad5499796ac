#ifndef FBMCS_TRANSFORM_HPP
#define FBMCS_TRANSFORM_HPP

#include <cstdint>
#include <span>

#include "fbmcs/core.hpp"

namespace fbmcs {

// Unitary DFT pair: both directions carry the 1/sqrt(n) factor, so energy is
// preserved and the selected-row measurement operator has orthonormal rows.
// Arbitrary lengths are supported, not just powers of two.

Spectrum dft_forward(const ComplexSignal& f);
ComplexSignal dft_inverse(const Spectrum& spectrum);

/// In-place unitary transforms on raw buffers; the hot path for the solvers.
void fft_forward_inplace(std::span<Complex> buf);
void fft_inverse_inplace(std::span<Complex> buf);

/// Coherence between the spike sensing rows selected by `mask` and the
/// unitary DFT columns: sqrt(n) * max |<phi_k, psi_j>|. For spike/Fourier
/// this is 1, the most incoherent pair.
double coherence(const SampleMask& mask);

/// Number of samples sufficient for recovery with overwhelming probability:
/// ceil(c * mu^2 * k_sparsity * ln(n)). The constant c is caller-supplied;
/// the bound is informational and nothing in the solvers enforces it.
long long sufficient_sample_bound(double mu, long long k_sparsity, std::size_t n,
                                  double c = 1.0);

} // namespace fbmcs

#endif
