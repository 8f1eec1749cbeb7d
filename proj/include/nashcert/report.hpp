#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nashcert {

/// Outcome of numerically checking a certificate on sampled points.
/// pass holds iff max_relative_residual <= tol and points_checked >= requested.
struct VerifyReport {
  std::size_t points_checked = 0;
  std::size_t requested = 0;
  double max_relative_residual = 0.0;
  std::vector<std::complex<double>> worst_point;
  bool pass = false;
  double tol = 0.0;
};

}  // namespace nashcert
