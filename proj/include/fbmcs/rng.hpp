#ifndef FBMCS_RNG_HPP
#define FBMCS_RNG_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>

#include "fbmcs/core.hpp"

namespace fbmcs {

// All randomness in the library flows through this header. The engine is
// std::mt19937_64 (bit-exact by the standard); the distribution transforms
// are implemented here rather than taken from <random>, whose distributions
// differ between standard libraries. Stream splitting: every independent
// consumer (one signal, one mask, one sweep trial) derives its own seed with
// derive_seed and owns a private engine, so results do not depend on
// evaluation order or scheduling.

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace detail

/// Folds a base seed with a list of stream tags into a fresh 64-bit seed.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t state = base;
  std::uint64_t out = detail::splitmix64(state);
  for (std::uint64_t tag : tags) {
    state ^= tag;
    out = detail::splitmix64(state);
  }
  return out;
}

inline std::uint64_t seed_tag(double value) {
  return std::bit_cast<std::uint64_t>(value);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw ValidationError("Rng::below: bound must be >= 1");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Pair of independent standard normals (Box-Muller).
  std::pair<double, double> gaussian_pair() {
    // u1 in (0, 1] so the log is finite
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = unit_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  double gaussian() { return gaussian_pair().first; }

  /// Circularly-symmetric complex normal with E|z|^2 = 1.
  Complex complex_gaussian() {
    auto [a, b] = gaussian_pair();
    return Complex(a, b) * 0.7071067811865475244;  // 1/sqrt(2)
  }

private:
  std::mt19937_64 engine_;
};

} // namespace fbmcs

#endif
