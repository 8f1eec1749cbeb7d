#include "nashcert/lab.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nashcert/error.hpp"
#include "nashcert/kernels.hpp"

namespace nashcert {

namespace {

constexpr std::size_t kAttemptFactor = 10;  // >90% rejection exhausts the budget

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double inv = 1.0 / base;
  double f = inv;
  double out = 0.0;
  while (index) {
    out += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return out;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (std::uint32_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

SampleRegion SampleRegion::polydisc(std::vector<std::complex<double>> center, double radius) {
  return SampleRegion{std::move(center), radius, 1e-3 * radius};
}

std::vector<ComplexPoint> sample_points(const SampleRegion& region, std::size_t count, std::uint64_t seed,
                                        const ExprAST& e) {
  if (!(region.radius > 0.0) || !(region.delta >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sample region needs radius > 0 and delta >= 0");
  }
  const std::size_t dims = region.center.size();
  if (dims < static_cast<std::size_t>(e.max_var_index())) {
    throw Error(ErrorCode::DimensionMismatch, "region has " + std::to_string(dims) +
                                                  " coordinates, expression uses z" +
                                                  std::to_string(e.max_var_index()));
  }
  std::vector<ComplexPoint> out;
  if (count == 0) return out;

  const auto bases = first_primes(2 * dims);
  std::vector<double> shift(2 * dims);
  std::uint64_t state = seed;
  for (double& s : shift) s = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;

  const std::size_t budget = kAttemptFactor * count;
  const EvalGuard guard{region.delta};
  std::size_t attempts = 0;
  out.reserve(count);
  while (out.size() < count && attempts < budget) {
    ++attempts;
    ComplexPoint pt;
    pt.coords.resize(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      double u = radical_inverse(attempts, bases[2 * k]) + shift[2 * k];
      double v = radical_inverse(attempts, bases[2 * k + 1]) + shift[2 * k + 1];
      u -= std::floor(u);
      v -= std::floor(v);
      pt.coords[k] = region.center[k] + std::polar(region.radius * std::sqrt(u), 2.0 * std::numbers::pi * v);
    }
    if (eval_expr(e, pt.coords, guard)) out.push_back(std::move(pt));
  }
  if (out.size() < count) {
    std::ostringstream msg;
    msg << "sampling rejected " << (attempts - out.size()) << " of " << attempts
        << " candidates (rate " << static_cast<double>(attempts - out.size()) / static_cast<double>(attempts)
        << "); expression undefined on most of the region";
    throw Error(ErrorCode::RegionTooHostile, msg.str());
  }
  return out;
}

VerifyReport verify_certificate(const AnnihilatorCertificate& c, const ExprAST& e, const SampleRegion& region,
                                std::size_t count, double tol, std::uint64_t seed, ExecutionPolicy policy) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const VarSpace& space = c.space();
  const int n = space.n();
  const VarSpace expected = c.part == FunctionPart::F ? VarSpace::complex(n) : VarSpace::real(n);
  if (space != expected) {
    throw Error(ErrorCode::IncompatiblePart, "certificate for " + std::string(to_string(c.part)) +
                                                 " must live in " + expected.describe());
  }
  if (e.max_var_index() > n) {
    throw Error(ErrorCode::DimensionMismatch, "expression uses z" + std::to_string(e.max_var_index()) +
                                                  " but the certificate has n = " + std::to_string(n));
  }
  if (region.center.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch, "region center has " + std::to_string(region.center.size()) +
                                                  " coordinates, certificate needs " + std::to_string(n));
  }

  const auto points = sample_points(region, count, seed, e);
  const EvalGuard guard{region.delta};
  std::vector<std::vector<std::complex<double>>> slots;
  slots.reserve(points.size());
  for (const auto& pt : points) {
    const std::complex<double> fz = *eval_expr(e, pt.coords, guard);
    std::vector<std::complex<double>> row(space.size());
    for (std::size_t s = 0; s < row.size(); ++s) {
      const Var v = space.var_at(s);
      const auto k = static_cast<std::size_t>(v.index - 1);
      switch (v.family) {
        case Family::T:
          row[s] = c.part == FunctionPart::F ? fz : c.part == FunctionPart::RealPart ? fz.real() : fz.imag();
          break;
        case Family::Z: row[s] = pt.coords[k]; break;
        case Family::X: row[s] = pt.coords[k].real(); break;
        case Family::Y: row[s] = pt.coords[k].imag(); break;
        default: break;
      }
    }
    slots.push_back(std::move(row));
  }

  const CompiledPoly compiled(c.poly);
  const auto residuals = policy == ExecutionPolicy::Parallel ? batch_residuals_parallel(compiled, slots)
                                                             : batch_residuals_serial(compiled, slots);
  const ResidualSummary summary = summarize_residuals(residuals);

  VerifyReport report;
  report.points_checked = points.size();
  report.requested = count;
  report.max_relative_residual = summary.max;
  if (!points.empty()) report.worst_point = points[summary.worst_index].coords;
  report.tol = tol;
  report.pass = report.max_relative_residual <= tol && report.points_checked >= report.requested;
  return report;
}

}  // namespace nashcert
