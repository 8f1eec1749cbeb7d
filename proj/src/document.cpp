#include "nashcert/document.hpp"

#include "nashcert/poly_text.hpp"

namespace nashcert {

nlohmann::ordered_json report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json point = nlohmann::ordered_json::array();
  for (const auto& z : r.worst_point) point.push_back({z.real(), z.imag()});
  return nlohmann::ordered_json{{"points_checked", r.points_checked},
                                {"requested", r.requested},
                                {"max_relative_residual", r.max_relative_residual},
                                {"worst_point", std::move(point)},
                                {"pass", r.pass},
                                {"tol", r.tol}};
}

nlohmann::ordered_json certificate_to_json(const AnnihilatorCertificate& c) {
  nlohmann::ordered_json flags = nlohmann::ordered_json::array();
  for (CertFlag f : c.flags) flags.push_back(std::string(to_string(f)));
  nlohmann::ordered_json doc{{"part", std::string(to_string(c.part))},
                             {"polynomial", render_poly(c.poly)},
                             {"derivation", c.derivation},
                             {"flags", std::move(flags)}};
  if (c.verification) doc["verification"] = report_to_json(*c.verification);
  return doc;
}

}  // namespace nashcert
