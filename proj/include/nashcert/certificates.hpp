#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashcert/multi_poly.hpp"
#include "nashcert/report.hpp"

namespace nashcert {

/// Which function a certificate annihilates.
enum class FunctionPart { F, RealPart, ImagPart };

std::string_view to_string(FunctionPart part);
FunctionPart parse_function_part(std::string_view text);

enum class CertFlag { RequiresVerification, Reduced, FactorStripped, ConstantShortcut };

std::string_view to_string(CertFlag flag);

/// A nonzero, content-normalized polynomial P with P(point, part(point)) = 0,
/// together with the steps that produced it.
///
/// Part F lives in VarSpace::complex(n); the real and imaginary parts live in
/// VarSpace::real(n) with real coefficients. make_certificate enforces this.
struct AnnihilatorCertificate {
  MultiPoly poly;
  FunctionPart part;
  std::vector<std::string> derivation;
  std::set<CertFlag> flags;
  std::optional<VerifyReport> verification;

  const VarSpace& space() const { return poly.space(); }
  bool has(CertFlag f) const { return flags.contains(f); }
};

/// Normalizes poly and validates the part/space invariants. Throws
/// Error(ZeroInput) or Error(IncompatiblePart).
AnnihilatorCertificate make_certificate(const MultiPoly& poly, FunctionPart part,
                                        std::vector<std::string> derivation = {},
                                        std::set<CertFlag> flags = {});

/// Base point z0 and the exact value f(z0).
struct BaseData {
  std::vector<GaussianRational> z0;
  GaussianRational w0;
};

struct SplitResult {
  AnnihilatorCertificate real_part;
  AnnihilatorCertificate imag_part;
};

/// Complex annihilator of f -> annihilators of Re f and Im f, by eliminating
/// w between P(z, w) and P(zb, +-(t - w)) and pulling back along phi.
SplitResult split_complex(const AnnihilatorCertificate& p);

/// Real-part annihilator plus base data -> annihilator of f, via the
/// substitution x -> z/2, y -> z/(2i) applied to the doubled, recentred
/// annihilator. Throws Error(Degenerate) when the substitution kills the
/// polynomial and no x_k^2 + y_k^2 factor can be stripped.
AnnihilatorCertificate cartan_lift(const AnnihilatorCertificate& re_part, const BaseData& base);

/// Re and Im annihilators -> candidate annihilator of f, by restricting to a
/// horizontal slice y = y0 and eliminating. Always flagged for verification.
AnnihilatorCertificate merge_real_pair(const AnnihilatorCertificate& re_part,
                                       const AnnihilatorCertificate& im_part,
                                       const std::optional<std::vector<GaussianRational>>& slice = std::nullopt);

/// The deterministic slice candidates tried by merge_real_pair (at most 32).
std::vector<std::vector<GaussianRational>> slice_candidates(int n);

}  // namespace nashcert
