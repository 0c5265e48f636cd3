#pragma once

// JSON and CSV views of the library's value types.  All JSON lives here so
// the core modules stay serialization-free.
//
// Series schema:  {"ring": "exact" | {"mod": m}, "order": N,
//                  "coeffs": ["1", "-1", ...]}        (decimal strings)
// Report schema:  {"claim": {"c", "p", "r", "m", "tag"}, "depth", "order",
//                  "pass"} plus "first_fail_n"/"residue" when failed.

#include <string>

#include "json.hpp"

#include "qcong/congruence.hpp"
#include "qcong/series.hpp"
#include "qcong/theta.hpp"

namespace qcong {

nlohmann::json series_to_json(const Series& S);
Series series_from_json(const nlohmann::json& j);

nlohmann::json claim_to_json(const CongruenceClaim& claim);
CongruenceClaim claim_from_json(const nlohmann::json& j);

nlohmann::json verification_report_to_json(const VerificationReport& report);
nlohmann::json identity_report_to_json(const IdentityReport& report);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);

} // namespace qcong
