#include "doctest.h"

#include <cmath>
#include <vector>

#include "fbmcs/rng.hpp"
#include "fbmcs/sampling.hpp"
#include "fbmcs/transform.hpp"

using namespace fbmcs;

namespace {

std::vector<Complex> random_values(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_gaussian();
  return v;
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

} // namespace

TEST_CASE("random_mask draws floor(n/factor) distinct sorted positions") {
  const auto m = random_mask(100, 3, 1);
  CHECK(m.n() == 100);
  CHECK(m.count() == 33);
  for (std::size_t i = 1; i < m.indices().size(); ++i) {
    CHECK(m.indices()[i] > m.indices()[i - 1]);
  }
  CHECK(random_mask(64, 1, 9).count() == 64);
  CHECK(random_mask(64, 64, 9).count() == 1);
  CHECK_THROWS_AS(random_mask(64, 0, 9), ValidationError);
  CHECK_THROWS_AS(random_mask(64, 65, 9), ValidationError);
  CHECK_THROWS_AS(random_mask(0, 2, 9), ValidationError);
}

TEST_CASE("random_mask is deterministic per seed") {
  CHECK(random_mask(128, 4, 7).indices() == random_mask(128, 4, 7).indices());
  CHECK(random_mask(128, 4, 7).indices() != random_mask(128, 4, 8).indices());
}

TEST_CASE("mask positions are uniform across the signal") {
  const std::size_t n = 16;
  const int draws = 20000;
  std::vector<int> hits(n, 0);
  for (int d = 0; d < draws; ++d) {
    const auto mask = random_mask(n, 2, 5000 + static_cast<std::uint64_t>(d));
    for (auto idx : mask.indices()) ++hits[idx];
  }
  for (auto h : hits) {
    CHECK(static_cast<double>(h) / draws == doctest::Approx(0.5).epsilon(0.04));
  }
}

TEST_CASE("subsample gathers and scatter zero-fills") {
  const ComplexSignal f(random_values(10, 3));
  const SampleMask mask(10, {0, 4, 9});
  const auto sub = subsample(f, mask);
  CHECK(sub.count() == 3);
  CHECK(sub.values()[1] == f[4]);

  const auto back = scatter(sub);
  CHECK(back.size() == 10);
  CHECK(back[4] == f[4]);
  CHECK(back[5] == Complex(0.0, 0.0));
}

TEST_CASE("subsample rejects a mask for a different length") {
  const ComplexSignal f(random_values(10, 3));
  CHECK_THROWS_AS(subsample(f, SampleMask(11, {0, 4, 9})), ValidationError);
}

TEST_CASE("measure gathers the inverse transform at the mask") {
  const Spectrum spec(random_values(32, 8));
  const auto mask = random_mask(32, 4, 2);
  const auto meas = measure(spec, mask);
  const auto time = dft_inverse(spec);
  for (std::size_t r = 0; r < mask.count(); ++r) {
    CHECK(std::abs(meas.values()[r] - time[mask.indices()[r]]) <= 1e-14);
  }
}

TEST_CASE("measurement operator and its adjoint satisfy the inner-product identity") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const std::size_t n = 48;
    const auto mask = random_mask(n, 3, seed);
    const Spectrum x(random_values(n, 10 + seed));
    const SubsampledSignal y(mask, random_values(mask.count(), 20 + seed));

    const auto ax = measure(x, mask);
    const auto aty = measure_adjoint(y);
    const Complex lhs = dot(y.values(), ax.values());
    const Complex rhs = dot(aty.coeffs(), x.coeffs());
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("measure after adjoint is the identity on the samples") {
  const std::size_t n = 40;
  const auto mask = random_mask(n, 2, 77);
  const SubsampledSignal y(mask, random_values(mask.count(), 5));
  const auto round = measure(measure_adjoint(y), mask);
  for (std::size_t r = 0; r < y.count(); ++r) {
    CHECK(std::abs(round.values()[r] - y.values()[r]) <= 1e-13);
  }
}
