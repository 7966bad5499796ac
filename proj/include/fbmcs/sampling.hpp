#ifndef FBMCS_SAMPLING_HPP
#define FBMCS_SAMPLING_HPP

#include <cstdint>

#include "fbmcs/core.hpp"

namespace fbmcs {

/// Draws floor(n / factor) distinct positions uniformly from [0, n) by a
/// partial Fisher-Yates shuffle on a seeded stream; returned sorted.
SampleMask random_mask(std::size_t n, std::size_t factor, std::uint64_t seed);

/// Gathers f at the mask positions.
SubsampledSignal subsample(const ComplexSignal& f, const SampleMask& mask);

/// Scatters the known values back into a zero-filled length-n signal.
ComplexSignal scatter(const SubsampledSignal& samples);

// Measurement operator A = (row selection) o (inverse unitary DFT) and its
// adjoint, both matrix-free. A has orthonormal rows, so A A* is the identity
// on the measurement space.

/// A F: inverse-transform the spectrum, then gather at the mask positions.
SubsampledSignal measure(const Spectrum& spectrum, const SampleMask& mask);

/// A* y: scatter to a zero-padded signal, then forward-transform.
Spectrum measure_adjoint(const SubsampledSignal& samples);

} // namespace fbmcs

#endif
