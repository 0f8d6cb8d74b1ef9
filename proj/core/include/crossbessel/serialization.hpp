#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "crossbessel/certified_real.hpp"
#include "crossbessel/coeff_table.hpp"
#include "crossbessel/elimination.hpp"
#include "crossbessel/identity_suite.hpp"
#include "crossbessel/spectrum.hpp"

namespace crossbessel {

// JSON keys follow the field names of the corresponding types. Rationals
// and polynomials are always strings (canonical ExactPoly text), never
// floats; enclosures are {"mid": string, "rad": string, "bits": int}.

nlohmann::json to_json(const CertifiedReal& x);
/// Inverse of to_json; the midpoint string round-trips exactly.
CertifiedReal certified_real_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoeffQuad& q);
CoeffQuad coeff_quad_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Quadratic& q);
Quadratic quadratic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EliminationCertificate& cert);
/// Parses a certificate; checks are read back as stored, not recomputed.
EliminationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ZeroRecord& z);
nlohmann::json to_json(const GapReport& report);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const RefutationSummary& summary);

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros);
std::string gap_report_to_csv(const GapReport& report);
std::string identity_reports_to_csv(const std::vector<IdentityReport>& reports);
std::string refutation_to_csv(const RefutationSummary& summary);
std::string coeff_quad_to_csv(const CoeffQuad& q);
std::string certificate_to_csv(const EliminationCertificate& cert);

}  // namespace crossbessel
