#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "nashcert/certificates.hpp"
#include "nashcert/expr.hpp"
#include "nashcert/report.hpp"

namespace nashcert {

struct ComplexPoint {
  std::vector<std::complex<double>> coords;
};

/// Open polydisc of the given radius around center, with guard margin delta
/// for denominators and branch cuts.
struct SampleRegion {
  std::vector<std::complex<double>> center;
  double radius = 0.5;
  double delta = 5e-4;

  /// Region with delta = 1e-3 * radius.
  static SampleRegion polydisc(std::vector<std::complex<double>> center, double radius);
};

enum class ExecutionPolicy { Serial, Parallel };

/// Deterministic low-discrepancy points (scrambled Halton) in the region at
/// which e is defined under the delta guard. Throws Error(RegionTooHostile)
/// when more than 90% of candidates are rejected.
std::vector<ComplexPoint> sample_points(const SampleRegion& region, std::size_t count, std::uint64_t seed,
                                        const ExprAST& e);

/// Evaluates the certificate at sampled points with t bound to f, Re f or
/// Im f (from e), scoring |P| / (1 + sum |term|). The worst point is the
/// first one attaining the maximum, so serial and parallel runs agree.
VerifyReport verify_certificate(const AnnihilatorCertificate& c, const ExprAST& e, const SampleRegion& region,
                                std::size_t count, double tol, std::uint64_t seed,
                                ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace nashcert
