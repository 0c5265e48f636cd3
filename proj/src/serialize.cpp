#include "qcong/serialize.hpp"

#include <stdexcept>

namespace qcong {

using nlohmann::json;

json series_to_json(const Series& S) {
    json j;
    if (S.ring().is_exact())
        j["ring"] = "exact";
    else
        j["ring"] = json{{"mod", S.ring().modulus()}};
    j["order"] = S.order();
    json coeffs = json::array();
    for (long n = 0; n <= S.order(); ++n)
        coeffs.push_back(S.at(n).get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

Series series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("series JSON needs \"ring\", \"order\" and \"coeffs\"");
    Ring ring = Ring::exact();
    const json& jr = j.at("ring");
    if (jr.is_string() && jr.get<std::string>() == "exact") {
        // exact ring
    } else if (jr.is_object() && jr.contains("mod")) {
        ring = Ring::mod(jr.at("mod").get<std::uint64_t>());
    } else {
        throw std::invalid_argument("series JSON ring must be \"exact\" or {\"mod\": m}");
    }
    const long order = j.at("order").get<long>();
    if (order < 0)
        throw std::invalid_argument("series JSON order must be >= 0");
    const json& jc = j.at("coeffs");
    if (!jc.is_array() || static_cast<long>(jc.size()) != order + 1)
        throw std::invalid_argument("series JSON coeffs must be an array of order+1 strings");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(jc.size());
    for (const json& item : jc) {
        if (!item.is_string())
            throw std::invalid_argument("series JSON coefficients must be decimal strings");
        coeffs.emplace_back(item.get<std::string>(), 10); // throws on malformed digits
    }
    return Series(ring, std::move(coeffs));
}

json claim_to_json(const CongruenceClaim& claim) {
    return json{{"c", claim.colors},
                {"p", claim.step},
                {"r", claim.offset},
                {"m", claim.modulus},
                {"tag", claim_tag_name(claim.tag)}};
}

CongruenceClaim claim_from_json(const json& j) {
    for (const char* key : {"c", "p", "r", "m", "tag"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("claim JSON needs \"") + key + "\"");
    return CongruenceClaim{j.at("c").get<long>(), j.at("p").get<long>(),
                           j.at("r").get<long>(), j.at("m").get<std::uint64_t>(),
                           claim_tag_from_name(j.at("tag").get<std::string>())};
}

json verification_report_to_json(const VerificationReport& report) {
    json j{{"claim", claim_to_json(report.claim)},
           {"depth", report.n_checked},
           {"order", report.order},
           {"pass", report.pass}};
    if (!report.pass) {
        j["first_fail_n"] = *report.first_fail_n;
        j["residue"] = *report.residue;
    }
    return j;
}

json identity_report_to_json(const IdentityReport& report) {
    json j{{"identity", report.identity},
           {"order", report.order},
           {"pass", report.pass}};
    if (!report.pass) j["first_mismatch"] = *report.first_mismatch;
    return j;
}

std::string report_csv_header() {
    return "c,p,r,m,tag,depth,order,pass,first_fail_n,residue";
}

std::string report_csv_row(const VerificationReport& report) {
    std::string row = std::to_string(report.claim.colors) + ',' +
                      std::to_string(report.claim.step) + ',' +
                      std::to_string(report.claim.offset) + ',' +
                      std::to_string(report.claim.modulus) + ',' +
                      claim_tag_name(report.claim.tag) + ',' +
                      std::to_string(report.n_checked) + ',' +
                      std::to_string(report.order) + ',' +
                      (report.pass ? "true" : "false") + ',';
    if (!report.pass) {
        row += std::to_string(*report.first_fail_n);
        row += ',';
        row += std::to_string(*report.residue);
    } else {
        row += ',';
    }
    return row;
}

} // namespace qcong
