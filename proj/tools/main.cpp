// qcong: expand eta quotients, check classical identities, and verify or
// search partition congruences from the command line.
//
// Exit codes: 0 success / claim verified, 1 claim or identity refuted,
// 2 usage or hypothesis error, 3 resource ceiling, 4 internal failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcong/arith.hpp"
#include "qcong/congruence.hpp"
#include "qcong/errors.hpp"
#include "qcong/eta.hpp"
#include "qcong/oracle.hpp"
#include "qcong/serialize.hpp"
#include "qcong/series.hpp"
#include "qcong/theta.hpp"

namespace {

using nlohmann::json;

long order_ceiling_from_env() {
    const char* env = std::getenv("QCONG_ORDER_CEILING");
    if (!env) return qcong::kDefaultOrderCeiling;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument("QCONG_ORDER_CEILING must be a positive integer, got \"" +
                                    std::string(env) + "\"");
    return v;
}

void require_order_within(long order, long ceiling, const std::string& what) {
    if (order > ceiling)
        throw qcong::ResourceLimitError(what + " needs order " + std::to_string(order) +
                                        " > ceiling " + std::to_string(ceiling));
}

[[noreturn]] void reject_format(const std::string& format, const char* subcommand) {
    throw std::invalid_argument("--format " + format + " is not available for " + subcommand);
}

std::string claim_text(const qcong::CongruenceClaim& c) {
    return "a_" + std::to_string(c.colors) + "(" + std::to_string(c.step) + "n+" +
           std::to_string(c.offset) + ") == 0 (mod " + std::to_string(c.modulus) + ")";
}

bool is_classical_thm31_p5(const qcong::CongruenceClaim& c) {
    return c.tag == qcong::ClaimTag::Thm31 && c.step == 5 && c.colors == 1;
}

constexpr const char* kP5Note =
    "p = 5 gives c = 1: this is Ramanujan's classical p(5n+4) == 0 (mod 5)";

void print_identity_reports(const std::vector<qcong::IdentityReport>& reports,
                            const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(qcong::identity_report_to_json(r));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const auto& r : reports) {
        if (r.pass)
            std::cout << "PASS " << r.identity << " order=" << r.order << "\n";
        else
            std::cout << "FAIL " << r.identity << " order=" << r.order
                      << " first_mismatch=" << *r.first_mismatch << "\n";
    }
}

void print_verification_reports(const std::vector<qcong::VerificationReport>& reports,
                                const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json obj = qcong::verification_report_to_json(r);
            if (is_classical_thm31_p5(r.claim)) obj["note"] = kP5Note;
            arr.push_back(std::move(obj));
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << qcong::report_csv_header() << "\n";
        for (const auto& r : reports) std::cout << qcong::report_csv_row(r) << "\n";
        return;
    }
    for (const auto& r : reports) {
        if (r.pass)
            std::cout << "PASS " << claim_text(r.claim) << " ["
                      << qcong::claim_tag_name(r.claim.tag) << "] depth=" << r.n_checked
                      << " order=" << r.order << "\n";
        else
            std::cout << "FAIL " << claim_text(r.claim) << " ["
                      << qcong::claim_tag_name(r.claim.tag) << "] at n=" << *r.first_fail_n
                      << ": residue " << *r.residue << "\n";
        if (is_classical_thm31_p5(r.claim))
            std::cout << "note: " << kP5Note << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated q-series arithmetic and partition-congruence verification"};
    app.require_subcommand(1);

    std::string format = "json";
    const auto add_format_option = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json, csv (verify/search) or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    };

    // --- expand -------------------------------------------------------------
    auto* cmd_expand = app.add_subcommand("expand", "Expand an eta quotient as a series");
    std::string expand_quotient;
    long expand_order = 0;
    std::uint64_t expand_mod = 0;
    cmd_expand->add_option("quotient", expand_quotient, "Quotient, e.g. f1^-1*f2^-2")->required();
    cmd_expand->add_option("--order", expand_order, "Truncation order")->required();
    auto* expand_mod_opt = cmd_expand->add_option("--mod", expand_mod, "Work in Z/m instead of Z");
    add_format_option(cmd_expand);

    // --- coeff --------------------------------------------------------------
    auto* cmd_coeff = app.add_subcommand("coeff", "Single coefficient of a quotient or of a_c");
    std::string coeff_quotient;
    long coeff_colors = 0;
    long coeff_n = 0;
    std::uint64_t coeff_mod = 0;
    auto* coeff_q_opt = cmd_coeff->add_option("--quotient", coeff_quotient, "Eta quotient");
    auto* coeff_c_opt =
        cmd_coeff->add_option("--colors", coeff_colors, "Colored-partition count a_c");
    coeff_q_opt->excludes(coeff_c_opt);
    cmd_coeff->add_option("--n", coeff_n, "Coefficient index")->required();
    auto* coeff_mod_opt = cmd_coeff->add_option("--mod", coeff_mod, "Reduce mod m");
    add_format_option(cmd_coeff);

    // --- identity -----------------------------------------------------------
    auto* cmd_identity = app.add_subcommand("identity", "Check a classical identity");
    std::string identity_name;
    long identity_order = 2000;
    long identity_p = 0;
    long identity_nmax = 300;
    cmd_identity
        ->add_option("name", identity_name,
                     "euler | f15f22 | f25f12 | chan | p5n4 | classical | ahlgren | binomial")
        ->required()
        ->check(CLI::IsMember(
            {"euler", "f15f22", "f25f12", "chan", "p5n4", "classical", "ahlgren", "binomial"}));
    cmd_identity->add_option("--order", identity_order, "Comparison order")
        ->capture_default_str();
    cmd_identity->add_option("--p", identity_p, "Prime (ahlgren, binomial)");
    cmd_identity->add_option("--n-max", identity_nmax, "Range for ahlgren")
        ->capture_default_str();
    add_format_option(cmd_identity);

    // --- verify -------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "Verify congruence claims to a depth");
    std::string verify_family;
    bool verify_custom = false;
    std::uint64_t verify_p = 0;
    long custom_c = 0, custom_r = -1;
    std::uint64_t custom_m = 0;
    long verify_depth = 200;
    cmd_verify->add_option("--family", verify_family, "thm11 | thm31 | thm32 | custom")
        ->check(CLI::IsMember({"thm11", "thm31", "thm32", "custom"}));
    cmd_verify->add_flag("--custom", verify_custom, "Shorthand for --family custom");
    cmd_verify->add_option("--p", verify_p, "Prime for thm31/thm32 (or custom step)");
    cmd_verify->add_option("--c", custom_c, "Colors (custom)");
    cmd_verify->add_option("--r", custom_r, "Offset (custom)");
    cmd_verify->add_option("--m", custom_m, "Modulus (custom)");
    cmd_verify->add_option("--depth", verify_depth, "Progression terms to check")
        ->capture_default_str();
    add_format_option(cmd_verify);

    // --- search -------------------------------------------------------------
    auto* cmd_search = app.add_subcommand("search", "Exhaustive small-parameter congruence search");
    long search_cmax = 0, search_pmax = 0, search_depth = 200;
    int search_jobs = 1;
    cmd_search->add_option("--c-max", search_cmax, "Max colors")->required();
    cmd_search->add_option("--p-max", search_pmax, "Max prime")->required();
    cmd_search->add_option("--depth", search_depth, "Depth per candidate")
        ->capture_default_str();
    cmd_search->add_option("--jobs", search_jobs, "Worker threads")->capture_default_str();
    add_format_option(cmd_search);

    // --- oracle -------------------------------------------------------------
    auto* cmd_oracle = app.add_subcommand("oracle", "Combinatorial count a_c(n)");
    long oracle_n = 0, oracle_colors = 0;
    std::string oracle_method = "dp";
    bool oracle_list = false;
    cmd_oracle->add_option("--n", oracle_n, "n")->required();
    cmd_oracle->add_option("--colors", oracle_colors, "c")->required();
    cmd_oracle->add_option("--method", oracle_method, "dp | enum | both")
        ->check(CLI::IsMember({"dp", "enum", "both"}))
        ->capture_default_str();
    cmd_oracle->add_flag("--list", oracle_list, "Include the multisets (enum/both only)");
    add_format_option(cmd_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the complaint
        return 2;
    }

    try {
        const long ceiling = order_ceiling_from_env();

        if (app.got_subcommand(cmd_expand)) {
            if (format == "csv") reject_format(format, "expand");
            require_order_within(expand_order, ceiling, "expand");
            const qcong::EtaQuotient q = qcong::parse_eta_quotient(expand_quotient);
            const qcong::Ring ring = expand_mod_opt->count() > 0 ? qcong::Ring::mod(expand_mod)
                                                                 : qcong::Ring::exact();
            const qcong::Series S = qcong::eta_quotient_series(q, expand_order, ring);
            if (format == "json") {
                std::cout << qcong::series_to_json(S).dump(2) << "\n";
            } else {
                for (long n = 0; n <= S.order(); ++n)
                    std::cout << n << " " << S.at(n).get_str() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_coeff)) {
            if (format == "csv") reject_format(format, "coeff");
            if ((coeff_q_opt->count() == 0) == (coeff_c_opt->count() == 0))
                throw std::invalid_argument("coeff needs exactly one of --quotient / --colors");
            require_order_within(coeff_n, ceiling, "coeff");
            const qcong::Ring ring = coeff_mod_opt->count() > 0 ? qcong::Ring::mod(coeff_mod)
                                                                : qcong::Ring::exact();
            qcong::Series S = coeff_q_opt->count() > 0
                ? qcong::eta_quotient_series(qcong::parse_eta_quotient(coeff_quotient),
                                             coeff_n, ring)
                : qcong::generalized_cubic_series(coeff_colors, coeff_n, ring);
            const mpz_class value = S.at(coeff_n);
            if (format == "json") {
                json j{{"n", coeff_n}, {"value", value.get_str()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << value.get_str() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_identity)) {
            if (format == "csv") reject_format(format, "identity");
            std::vector<qcong::IdentityReport> reports;
            if (identity_name == "euler") {
                reports.push_back(
                    qcong::check_identity(qcong::BilateralKind::EulerPentagonal, identity_order));
            } else if (identity_name == "f15f22") {
                reports.push_back(
                    qcong::check_identity(qcong::BilateralKind::RamanujanF15F22, identity_order));
            } else if (identity_name == "f25f12") {
                reports.push_back(
                    qcong::check_identity(qcong::BilateralKind::RamanujanF25F12, identity_order));
            } else if (identity_name == "chan") {
                reports.push_back(qcong::check_classical_identities(identity_order)[0]);
            } else if (identity_name == "p5n4") {
                reports.push_back(qcong::check_classical_identities(identity_order)[1]);
            } else if (identity_name == "classical") {
                reports.push_back(
                    qcong::check_identity(qcong::BilateralKind::EulerPentagonal, identity_order));
                reports.push_back(
                    qcong::check_identity(qcong::BilateralKind::RamanujanF15F22, identity_order));
                reports.push_back(
                    qcong::check_identity(qcong::BilateralKind::RamanujanF25F12, identity_order));
                for (auto& r : qcong::check_classical_identities(identity_order))
                    reports.push_back(std::move(r));
            } else if (identity_name == "ahlgren") {
                if (identity_p == 0)
                    throw std::invalid_argument("identity ahlgren needs --p");
                reports.push_back(
                    qcong::check_ahlgren_relation(identity_p, identity_nmax, ceiling));
            } else { // binomial
                if (identity_p == 0)
                    throw std::invalid_argument("identity binomial needs --p");
                reports.push_back(qcong::check_binomial_congruence(identity_p, identity_order));
            }
            print_identity_reports(reports, format);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }

        if (app.got_subcommand(cmd_verify)) {
            std::string family = verify_family;
            if (verify_custom) {
                if (!family.empty() && family != "custom")
                    throw std::invalid_argument("--custom conflicts with --family " + family);
                family = "custom";
            }
            if (family.empty())
                throw std::invalid_argument("verify needs --family (or --custom)");

            std::vector<qcong::CongruenceClaim> claims;
            if (family == "thm11") {
                const auto pair = qcong::build_thm11_claims();
                claims = {pair.first, pair.second};
            } else if (family == "thm31") {
                if (verify_p == 0) throw std::invalid_argument("verify --family thm31 needs --p");
                claims = {qcong::build_thm31_claim(verify_p)};
            } else if (family == "thm32") {
                if (verify_p == 0) throw std::invalid_argument("verify --family thm32 needs --p");
                claims = {qcong::build_thm32_claim(verify_p)};
            } else {
                if (custom_c == 0 || custom_r < 0 || custom_m == 0 || verify_p == 0)
                    throw std::invalid_argument("verify --custom needs --c, --p, --r and --m");
                claims = {qcong::CongruenceClaim{custom_c, static_cast<long>(verify_p), custom_r,
                                                 custom_m, qcong::ClaimTag::Search}};
            }

            qcong::VerifyOptions options;
            options.order_ceiling = ceiling;
            std::vector<qcong::VerificationReport> reports;
            for (const auto& claim : claims)
                reports.push_back(qcong::verify_claim(claim, verify_depth, options));
            print_verification_reports(reports, format);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }

        if (app.got_subcommand(cmd_search)) {
            qcong::VerifyOptions options;
            options.order_ceiling = ceiling;
            const std::vector<qcong::CongruenceClaim> found =
                qcong::search_congruences(search_cmax, search_pmax, search_depth, options,
                                          search_jobs);
            if (format == "json") {
                json arr = json::array();
                for (const auto& claim : found) arr.push_back(qcong::claim_to_json(claim));
                std::cout << arr.dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << "c,p,r,m,tag\n";
                for (const auto& claim : found)
                    std::cout << claim.colors << ',' << claim.step << ',' << claim.offset << ','
                              << claim.modulus << ',' << qcong::claim_tag_name(claim.tag) << "\n";
            } else {
                for (const auto& claim : found)
                    std::cout << claim_text(claim) << " [" << qcong::claim_tag_name(claim.tag)
                              << "]\n";
            }
            return 0;
        }

        // oracle
        if (format == "csv") reject_format(format, "oracle");
        if (oracle_list && oracle_method == "dp")
            throw std::invalid_argument("--list needs --method enum or both");
        std::optional<mpz_class> dp_count, enum_count;
        std::vector<std::vector<qcong::ColoredPart>> listing;
        if (oracle_method == "dp" || oracle_method == "both")
            dp_count = qcong::count_colored_partitions(oracle_n, oracle_colors);
        if (oracle_method == "enum" || oracle_method == "both")
            enum_count = qcong::enumerate_colored_partitions(
                oracle_n, oracle_colors, oracle_list ? &listing : nullptr);
        if (dp_count && enum_count && *dp_count != *enum_count)
            throw std::logic_error("internal cross-check failure: DP count " +
                                   dp_count->get_str() + " != enumeration count " +
                                   enum_count->get_str());
        const mpz_class& count = dp_count ? *dp_count : *enum_count;
        if (format == "json") {
            json j{{"n", oracle_n}, {"colors", oracle_colors}, {"count", count.get_str()}};
            if (oracle_list) {
                json l = json::array();
                for (const auto& multiset : listing) {
                    json parts = json::array();
                    for (const auto& part : multiset)
                        parts.push_back(json::array({part.size, part.color}));
                    l.push_back(std::move(parts));
                }
                j["listing"] = std::move(l);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << count.get_str() << "\n";
            if (oracle_list) {
                for (const auto& multiset : listing) {
                    std::string line;
                    for (const auto& part : multiset) {
                        if (!line.empty()) line += '+';
                        line += std::to_string(part.size);
                        if (part.size % 2 == 0) line += "(c" + std::to_string(part.color) + ")";
                    }
                    std::cout << (line.empty() ? "0" : line) << "\n";
                }
            }
        }
        return 0;
    } catch (const qcong::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qcong::HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
