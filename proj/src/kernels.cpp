#include "nashcert/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nashcert/error.hpp"

namespace nashcert {

CompiledPoly::CompiledPoly(const MultiPoly& p) : width_(p.space().size()), max_exp_(width_, 0) {
  coefs_.reserve(p.size());
  exps_.reserve(p.size() * width_);
  for (const Term& t : p.terms()) {
    coefs_.push_back(t.coef.to_complex());
    for (std::size_t s = 0; s < width_; ++s) {
      exps_.push_back(t.exps[s]);
      max_exp_[s] = std::max(max_exp_[s], t.exps[s]);
    }
  }
}

EvalResult CompiledPoly::evaluate(std::span<const std::complex<double>> slots) const {
  if (slots.size() != width_) {
    throw Error(ErrorCode::DimensionMismatch, "compiled polynomial expects " + std::to_string(width_) + " values");
  }
  // Power tables are small; a flat vector with offsets avoids per-slot allocations.
  std::vector<std::size_t> offset(width_ + 1, 0);
  for (std::size_t s = 0; s < width_; ++s) offset[s + 1] = offset[s] + max_exp_[s] + 1;
  std::vector<std::complex<double>> powers(offset[width_]);
  for (std::size_t s = 0; s < width_; ++s) {
    std::complex<double>* row = powers.data() + offset[s];
    row[0] = 1.0;
    for (std::uint32_t k = 1; k <= max_exp_[s]; ++k) row[k] = row[k - 1] * slots[s];
  }
  EvalResult r{{0.0, 0.0}, 0.0};
  for (std::size_t term = 0; term < coefs_.size(); ++term) {
    std::complex<double> v = coefs_[term];
    const std::uint32_t* e = exps_.data() + term * width_;
    for (std::size_t s = 0; s < width_; ++s) {
      if (e[s]) v *= powers[offset[s] + e[s]];
    }
    r.value += v;
    r.magnitude += std::abs(v);
  }
  return r;
}

double relative_residual(const EvalResult& r) {
  const double num = std::abs(r.value);
  if (!std::isfinite(num) || !std::isfinite(r.magnitude)) return std::numeric_limits<double>::infinity();
  return num / (1.0 + r.magnitude);
}

std::vector<double> batch_residuals_serial(const CompiledPoly& p, std::span<const std::vector<std::complex<double>>> slots) {
  std::vector<double> out(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) out[k] = relative_residual(p.evaluate(slots[k]));
  return out;
}

std::vector<double> batch_residuals_parallel(const CompiledPoly& p, std::span<const std::vector<std::complex<double>>> slots) {
  for (const auto& row : slots) {
    if (row.size() != p.width()) {
      throw Error(ErrorCode::DimensionMismatch, "compiled polynomial expects " + std::to_string(p.width()) + " values");
    }
  }
  std::vector<double> out(slots.size());
  const auto count = static_cast<std::int64_t>(slots.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i] = relative_residual(p.evaluate(slots[i]));
  }
  return out;
}

ResidualSummary summarize_residuals(std::span<const double> residuals) {
  ResidualSummary s;
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    const double r = std::isnan(residuals[k]) ? std::numeric_limits<double>::infinity() : residuals[k];
    if (r > s.max) {
      s.max = r;
      s.worst_index = k;
    }
  }
  return s;
}

}  // namespace nashcert
