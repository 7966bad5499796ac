#ifndef FBMCS_CORE_HPP
#define FBMCS_CORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbmcs {

using Complex = std::complex<double>;

/// Thrown when a domain invariant or precondition is violated.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown on file-format or filesystem failures.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const std::vector<Complex>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!is_finite(values[i])) {
      throw ValidationError(std::string(what) + ": non-finite entry at index " +
                            std::to_string(i));
    }
  }
}

} // namespace detail

/// Time/space-domain signal: fixed-length vector of finite complex samples.
/// Immutable after construction.
class ComplexSignal {
public:
  explicit ComplexSignal(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw ValidationError("ComplexSignal: length must be >= 1");
    detail::require_finite(values_, "ComplexSignal");
  }

  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Complex>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

private:
  std::vector<Complex> values_;
};

/// Fourier coefficients under the unitary DFT. Index 0 is DC; indices are
/// interpreted modulo n with negative frequencies in the upper half.
class Spectrum {
public:
  explicit Spectrum(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ValidationError("Spectrum: length must be >= 1");
    detail::require_finite(coeffs_, "Spectrum");
  }

  std::size_t size() const { return coeffs_.size(); }
  Complex operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

private:
  std::vector<Complex> coeffs_;
};

/// Hurst exponent, strictly inside (0, 1).
class HurstParameter {
public:
  explicit HurstParameter(double h) : h_(h) {
    if (!(h > 0.0 && h < 1.0)) {
      throw ValidationError("HurstParameter: H must lie strictly in (0, 1), got " +
                            std::to_string(h));
    }
  }

  double value() const { return h_; }

private:
  double h_;
};

/// Sorted set of M distinct sample positions in [0, n). Defines the zero-one
/// row-selection operator of the measurement map.
class SampleMask {
public:
  SampleMask(std::size_t n, std::vector<std::size_t> indices)
      : n_(n), indices_(std::move(indices)) {
    if (n_ == 0) throw ValidationError("SampleMask: n must be >= 1");
    if (indices_.empty()) throw ValidationError("SampleMask: at least one index required");
    if (indices_.size() > n_) throw ValidationError("SampleMask: more indices than n");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (indices_[i] >= n_) {
        throw ValidationError("SampleMask: index " + std::to_string(indices_[i]) +
                              " out of range [0, " + std::to_string(n_) + ")");
      }
      if (i > 0 && indices_[i] <= indices_[i - 1]) {
        throw ValidationError("SampleMask: indices must be strictly increasing");
      }
    }
  }

  std::size_t n() const { return n_; }
  std::size_t count() const { return indices_.size(); }
  const std::vector<std::size_t>& indices() const { return indices_; }
  bool contains(std::size_t idx) const {
    return std::binary_search(indices_.begin(), indices_.end(), idx);
  }

private:
  std::size_t n_;
  std::vector<std::size_t> indices_;
};

/// The known values of a signal at the mask positions.
class SubsampledSignal {
public:
  SubsampledSignal(SampleMask mask, std::vector<Complex> values)
      : mask_(std::move(mask)), values_(std::move(values)) {
    if (values_.size() != mask_.count()) {
      throw ValidationError("SubsampledSignal: values length must equal mask size");
    }
    detail::require_finite(values_, "SubsampledSignal");
  }

  const SampleMask& mask() const { return mask_; }
  const std::vector<Complex>& values() const { return values_; }
  std::size_t count() const { return values_.size(); }

private:
  SampleMask mask_;
  std::vector<Complex> values_;
};

/// Iterative-solver settings. Deterministic: no seed enters the solvers.
struct SolverConfig {
  int max_iters = 5000;
  double tol_primal = 1e-6;   // relative constraint residual
  double tol_change = 1e-6;   // relative iterate change
  double rho = 1.0;           // splitting penalty; shrinkage threshold is 1/rho

  void validate() const {
    if (max_iters < 1) throw ValidationError("SolverConfig: max_iters must be >= 1");
    if (!(tol_primal > 0.0)) throw ValidationError("SolverConfig: tol_primal must be > 0");
    if (!(tol_change > 0.0)) throw ValidationError("SolverConfig: tol_change must be > 0");
    if (!(rho > 0.0)) throw ValidationError("SolverConfig: rho must be > 0");
  }
};

/// Reconstruction quality of one solve.
struct QualityReport {
  double snr_db = 0.0;
  double residual = 0.0;
  int iters = 0;
};

/// Fraction of transform coefficients above a relative magnitude threshold.
struct SparsityReport {
  double threshold_fraction = 0.0;
  double dominant_percent = 0.0;
};

} // namespace fbmcs

#endif
