#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "fbmcs/analysis.hpp"
#include "fbmcs/rng.hpp"

using namespace fbmcs;

namespace {

ComplexSignal constant_signal(std::size_t n, Complex c) {
  return ComplexSignal(std::vector<Complex>(n, c));
}

} // namespace

TEST_CASE("snr_db matches hand-computed cases") {
  const ComplexSignal orig({{3.0, 0.0}, {0.0, 4.0}});
  // error energy = original energy / 100  ->  exactly 20 dB
  const ComplexSignal close({{3.0, 0.0}, {0.0, 4.0 - 0.5}});
  CHECK(snr_db(orig, close) == doctest::Approx(20.0));
  // zero estimate: error equals the signal, 0 dB
  CHECK(snr_db(orig, constant_signal(2, {0.0, 0.0})) == doctest::Approx(0.0));
  // exact estimate: clean positive infinity
  CHECK(snr_db(orig, orig) == std::numeric_limits<double>::infinity());
}

TEST_CASE("snr_db validates its inputs") {
  const ComplexSignal orig({{1.0, 0.0}, {2.0, 0.0}});
  CHECK_THROWS_AS(snr_db(orig, constant_signal(3, {1.0, 0.0})), ValidationError);
  CHECK_THROWS_AS(snr_db(constant_signal(2, {0.0, 0.0}), orig), ValidationError);
}

TEST_CASE("dominant_fraction counts strict threshold crossings") {
  const Spectrum spec({{1.0, 0.0}, {0.05, 0.0}, {0.0, 0.2}, {-0.09, 0.0}});
  const auto rep = dominant_fraction(spec, 0.1);
  CHECK(rep.threshold_fraction == 0.1);
  // |1.0| and |0.2| exceed 0.1 * max = 0.1; |0.05| and |0.09| do not
  CHECK(rep.dominant_percent == doctest::Approx(50.0));

  // ties sit exactly on the threshold and are not dominant
  const Spectrum flat({{1.0, 0.0}, {0.1, 0.0}});
  CHECK(dominant_fraction(flat, 0.1).dominant_percent == doctest::Approx(50.0));

  const Spectrum equal({{0.5, 0.0}, {0.0, -0.5}, {0.5, 0.0}});
  CHECK(dominant_fraction(equal, 0.9).dominant_percent == doctest::Approx(100.0));
}

TEST_CASE("dominant_fraction is scale invariant") {
  std::vector<Complex> base = {{2.0, 1.0}, {0.3, 0.0}, {0.0, 0.01}, {1.5, -2.0}};
  std::vector<Complex> scaled;
  for (auto c : base) scaled.push_back(c * 1234.5);
  CHECK(dominant_fraction(Spectrum(base), 0.25).dominant_percent ==
        dominant_fraction(Spectrum(scaled), 0.25).dominant_percent);
}

TEST_CASE("dominant_fraction validates threshold and content") {
  const Spectrum spec({{1.0, 0.0}, {0.5, 0.0}});
  CHECK_THROWS_AS(dominant_fraction(spec, 0.0), ValidationError);
  CHECK_THROWS_AS(dominant_fraction(spec, 1.0), ValidationError);
  CHECK_THROWS_AS(dominant_fraction(spec, -0.2), ValidationError);
  CHECK_THROWS_AS(dominant_fraction(Spectrum({{0.0, 0.0}, {0.0, 0.0}}), 0.1),
                  ValidationError);
}

TEST_CASE("sparsity_sweep is reproducible and shaped as requested") {
  const std::vector<double> hs = {0.3, 0.7};
  const auto a = sparsity_sweep(hs, 64, 4, 0.1, 99);
  const auto b = sparsity_sweep(hs, 64, 4, 0.1, 99);
  REQUIRE(a.size() == 2);
  CHECK(a[0].h == 0.3);
  CHECK(a[1].h == 0.7);
  CHECK(a[0].trials == 4);
  CHECK(a[0].mean_dominant_percent == b[0].mean_dominant_percent);
  CHECK(a[1].mean_dominant_percent == b[1].mean_dominant_percent);
  CHECK(a[0].mean_dominant_percent > 0.0);
  CHECK(a[0].mean_dominant_percent <= 100.0);

  const auto c = sparsity_sweep(hs, 64, 4, 0.1, 100);
  CHECK(c[0].mean_dominant_percent != a[0].mean_dominant_percent);
}

TEST_CASE("smoother signals concentrate into fewer dominant coefficients") {
  const auto rows = sparsity_sweep({0.2, 0.8}, 128, 6, 0.1, 7);
  CHECK(rows[0].mean_dominant_percent > rows[1].mean_dominant_percent);
}

TEST_CASE("reconstruction_sweep rows carry the full grid deterministically") {
  SolverConfig cfg;
  cfg.max_iters = 600;
  const std::vector<std::size_t> factors = {2, 4};
  const std::vector<double> hs = {0.4, 0.8};
  const auto a = reconstruction_sweep(factors, hs, 32, 2, cfg, 5);
  const auto b = reconstruction_sweep(factors, hs, 32, 2, cfg, 5);
  REQUIRE(a.rows.size() == 4);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].factor == factors[i / 2]);
    CHECK(a.rows[i].h == hs[i % 2]);
    CHECK(a.rows[i].trials == 2);
    CHECK(a.rows[i].seed_base == 5);
    // scheduling must not leak into the numbers
    CHECK(a.rows[i].mean_snr_bp_db == b.rows[i].mean_snr_bp_db);
    CHECK(a.rows[i].mean_snr_tv_db == b.rows[i].mean_snr_tv_db);
    CHECK(a.rows[i].bp_converged >= 0);
    CHECK(a.rows[i].bp_converged <= 2);
  }
}

TEST_CASE("sweeps reject bad trial counts and pass empty grids through") {
  SolverConfig cfg;
  CHECK_THROWS_AS(sparsity_sweep({0.5}, 64, 0, 0.1, 1), ValidationError);
  CHECK_THROWS_AS(reconstruction_sweep({2}, {0.5}, 64, 0, cfg, 1), ValidationError);
  CHECK(sparsity_sweep({}, 64, 4, 0.1, 1).empty());
  CHECK(reconstruction_sweep({}, {0.5}, 64, 2, cfg, 1).rows.empty());
  CHECK(reconstruction_sweep({2}, {}, 64, 2, cfg, 1).rows.empty());
}
