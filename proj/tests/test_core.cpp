#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "fbmcs/core.hpp"

using namespace fbmcs;

TEST_CASE("ComplexSignal rejects empty and non-finite input") {
  CHECK_THROWS_AS(ComplexSignal({}), ValidationError);
  CHECK_THROWS_AS(ComplexSignal(std::vector<Complex>{Complex(0.0, std::nan(""))}), ValidationError);
  CHECK_THROWS_AS(
      ComplexSignal({{1.0, 0.0}, {std::numeric_limits<double>::infinity(), 0.0}}),
      ValidationError);
  const ComplexSignal s({{1.0, -2.0}, {0.0, 0.5}});
  CHECK(s.size() == 2);
  CHECK(s[1] == Complex(0.0, 0.5));
}

TEST_CASE("Spectrum mirrors the signal invariants") {
  CHECK_THROWS_AS(Spectrum({}), ValidationError);
  CHECK_THROWS_AS(Spectrum(std::vector<Complex>{Complex(std::nan(""), 0.0)}), ValidationError);
  const Spectrum f(std::vector<Complex>{Complex(3.0, 4.0)});
  CHECK(f.size() == 1);
  CHECK(f.coeffs().front() == Complex(3.0, 4.0));
}

TEST_CASE("HurstParameter accepts the open interval only") {
  CHECK(HurstParameter(0.5).value() == 0.5);
  CHECK(HurstParameter(1e-9).value() == 1e-9);
  CHECK(HurstParameter(1.0 - 1e-9).value() == 1.0 - 1e-9);
  CHECK_THROWS_AS(HurstParameter(0.0), ValidationError);
  CHECK_THROWS_AS(HurstParameter(1.0), ValidationError);
  CHECK_THROWS_AS(HurstParameter(-0.3), ValidationError);
  CHECK_THROWS_AS(HurstParameter(std::nan("")), ValidationError);
}

TEST_CASE("SampleMask validates ordering and range") {
  const SampleMask m(8, {0, 3, 7});
  CHECK(m.n() == 8);
  CHECK(m.count() == 3);
  CHECK(m.contains(3));
  CHECK_FALSE(m.contains(4));

  CHECK_THROWS_AS(SampleMask(0, {0}), ValidationError);
  CHECK_THROWS_AS(SampleMask(8, {}), ValidationError);
  CHECK_THROWS_AS(SampleMask(8, {3, 3}), ValidationError);
  CHECK_THROWS_AS(SampleMask(8, {5, 2}), ValidationError);
  CHECK_THROWS_AS(SampleMask(8, {0, 8}), ValidationError);
  CHECK_THROWS_AS(SampleMask(2, {0, 1, 1}), ValidationError);
}

TEST_CASE("SubsampledSignal requires matching lengths and finite values") {
  const SampleMask m(4, {1, 2});
  CHECK_THROWS_AS(SubsampledSignal(m, {{1.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(SubsampledSignal(m, {{1.0, 0.0}, {std::nan(""), 0.0}}),
                  ValidationError);
  const SubsampledSignal sub(m, {{1.0, 0.0}, {2.0, 0.0}});
  CHECK(sub.count() == 2);
  CHECK(sub.mask().indices() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("SolverConfig::validate guards every field") {
  SolverConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = SolverConfig{};
  cfg.tol_primal = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = SolverConfig{};
  cfg.tol_change = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = SolverConfig{};
  cfg.rho = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}
