#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "nashcert/multi_poly.hpp"

namespace nashcert {

/// Double-precision copy of a MultiPoly laid out for repeated evaluation.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MultiPoly& p);

  std::size_t width() const noexcept { return width_; }
  EvalResult evaluate(std::span<const std::complex<double>> slots) const;

 private:
  std::size_t width_;
  std::vector<std::complex<double>> coefs_;
  std::vector<std::uint32_t> exps_;  // row-major, width_ per term
  std::vector<std::uint32_t> max_exp_;
};

/// |value| / (1 + magnitude); non-finite values map to +inf.
double relative_residual(const EvalResult& r);

/// One relative residual per row of `slots` (each row holds width() values).
/// The serial loop is the reference; the OpenMP loop must agree bit for bit.
std::vector<double> batch_residuals_serial(const CompiledPoly& p, std::span<const std::vector<std::complex<double>>> slots);
std::vector<double> batch_residuals_parallel(const CompiledPoly& p, std::span<const std::vector<std::complex<double>>> slots);

struct ResidualSummary {
  double max = 0.0;
  std::size_t worst_index = 0;  // first index attaining max, in input order
};

ResidualSummary summarize_residuals(std::span<const double> residuals);

}  // namespace nashcert
