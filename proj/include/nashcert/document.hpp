#pragma once

#include "json.hpp"
#include "nashcert/certificates.hpp"
#include "nashcert/report.hpp"

namespace nashcert {

/// {points_checked, requested, max_relative_residual, worst_point: [[re, im], ...], pass, tol}
nlohmann::ordered_json report_to_json(const VerifyReport& r);

/// {part, polynomial, derivation, flags, verification?}. The verification
/// key is omitted when the certificate carries no report.
nlohmann::ordered_json certificate_to_json(const AnnihilatorCertificate& c);

}  // namespace nashcert
