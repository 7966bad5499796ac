#include "doctest.h"

#include <cmath>
#include <vector>

#include "fbmcs/rng.hpp"
#include "fbmcs/sampling.hpp"
#include "fbmcs/transform.hpp"
#include "oracles.hpp"

using namespace fbmcs;

namespace {

std::vector<Complex> random_values(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_gaussian();
  return v;
}

double rel_dist(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

double energy(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (auto z : v) acc += std::norm(z);
  return acc;
}

} // namespace

TEST_CASE("forward/inverse transforms invert each other at many lengths") {
  for (std::size_t n : {1ul, 2ul, 3ul, 7ul, 16ul, 37ul, 100ul, 128ul, 257ul}) {
    const ComplexSignal f(random_values(n, 100 + n));
    const ComplexSignal back = dft_inverse(dft_forward(f));
    CHECK(rel_dist(back.values(), f.values()) <= 1e-12);
  }
}

TEST_CASE("transform is unitary: energy is preserved both ways") {
  for (std::size_t n : {5ul, 16ul, 37ul, 128ul}) {
    const ComplexSignal f(random_values(n, 200 + n));
    const Spectrum spec = dft_forward(f);
    CHECK(energy(spec.coeffs()) ==
          doctest::Approx(energy(f.values())).epsilon(1e-12));
  }
}

TEST_CASE("transform agrees with the quadratic-time reference") {
  for (std::size_t n : {2ul, 7ul, 16ul, 37ul, 64ul}) {
    const auto vals = random_values(n, 300 + n);
    CHECK(rel_dist(dft_forward(ComplexSignal(vals)).coeffs(),
                   oracles::naive_dft(vals, false)) <= 1e-10);
    CHECK(rel_dist(dft_inverse(Spectrum(vals)).values(),
                   oracles::naive_dft(vals, true)) <= 1e-10);
  }
}

TEST_CASE("unit impulse transforms to a flat spectrum") {
  std::vector<Complex> vals(8, Complex(0.0, 0.0));
  vals[0] = Complex(1.0, 0.0);
  const Spectrum spec = dft_forward(ComplexSignal(vals));
  const double expected = 1.0 / std::sqrt(8.0);
  for (auto c : spec) {
    CHECK(c.real() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(c.imag()) <= 1e-15);
  }
}

TEST_CASE("transform is linear") {
  const auto a = random_values(24, 41);
  const auto b = random_values(24, 42);
  const Complex alpha(0.3, -1.1);
  std::vector<Complex> combo(24);
  for (std::size_t i = 0; i < 24; ++i) combo[i] = alpha * a[i] + b[i];
  const auto fa = dft_forward(ComplexSignal(a));
  const auto fb = dft_forward(ComplexSignal(b));
  const auto fc = dft_forward(ComplexSignal(combo));
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(std::abs(fc[i] - (alpha * fa[i] + fb[i])) <= 1e-12);
  }
}

TEST_CASE("in-place buffer transforms match the value-returning ones") {
  const auto vals = random_values(37, 77);
  auto buf = vals;
  fft_forward_inplace(buf);
  CHECK(rel_dist(buf, dft_forward(ComplexSignal(vals)).coeffs()) <= 1e-14);
  fft_inverse_inplace(buf);
  CHECK(rel_dist(buf, vals) <= 1e-12);
}

TEST_CASE("spike/Fourier coherence is exactly one for any mask") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + rng.below(125);
    const std::size_t factor = 1 + rng.below(4);
    const auto mask = random_mask(n, factor, rng.next_u64());
    CHECK(std::abs(coherence(mask) - 1.0) <= 1e-12);
  }
}

TEST_CASE("sufficient sample bound rounds the log-linear rule up") {
  // c * mu^2 * K * ln(n) with mu = 1, K = 1, c = 2, n = 128:
  // 2 ln 128 = 9.704060527839234... -> 10
  CHECK(sufficient_sample_bound(1.0, 1, 128, 2.0) == 10);
  CHECK(sufficient_sample_bound(1.0, 4, 128, 2.0) == 39);
  CHECK(sufficient_sample_bound(2.0, 1, 128, 1.0) == 20);
  CHECK(sufficient_sample_bound(1.0, 1, 2, 1.0) == 1);
  CHECK(sufficient_sample_bound(1.0, 1, 1, 5.0) == 0);
  CHECK_THROWS_AS(sufficient_sample_bound(0.5, 1, 128), ValidationError);
  CHECK_THROWS_AS(sufficient_sample_bound(1.0, 0, 128), ValidationError);
  CHECK_THROWS_AS(sufficient_sample_bound(1.0, 1, 128, 0.0), ValidationError);
}
