#include "qcong/theta.hpp"

#include <stdexcept>

#include "qcong/arith.hpp"
#include "qcong/eta.hpp"

namespace qcong {

namespace {

// Exponent and weight of one bilateral term.
long bilateral_exponent(BilateralKind kind, long n) {
    switch (kind) {
        case BilateralKind::EulerPentagonal:
        case BilateralKind::RamanujanF15F22:
            return n * (3 * n + 1) / 2;
        case BilateralKind::RamanujanF25F12:
            return 3 * n * n + 2 * n;
    }
    throw std::logic_error("unknown bilateral kind");
}

mpz_class bilateral_weight(BilateralKind kind, long n) {
    const bool odd = (n % 2) != 0;
    switch (kind) {
        case BilateralKind::EulerPentagonal:
            return odd ? -1 : 1;
        case BilateralKind::RamanujanF15F22:
            return 6 * n + 1;
        case BilateralKind::RamanujanF25F12:
            return odd ? mpz_class(-(3 * n + 1)) : mpz_class(3 * n + 1);
    }
    throw std::logic_error("unknown bilateral kind");
}

// The literal product (1-q)(1-q^2)...(1-q^order): the independent reference
// side for the pentagonal identity.
Series dense_euler_f1(long order) {
    const Ring ring = Ring::exact();
    Series acc = Series::one(ring, order);
    for (long k = 1; k <= order; ++k) {
        std::vector<mpz_class> binom(static_cast<std::size_t>(order) + 1);
        binom[0] = 1;
        binom[static_cast<std::size_t>(k)] = -1;
        acc = multiply(acc, Series(ring, std::move(binom)));
    }
    return acc;
}

} // namespace

Series bilateral_series(BilateralKind kind, long order, const Ring& ring) {
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0, got " + std::to_string(order));
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] += bilateral_weight(kind, 0); // n = 0 term (exponent 0 for all kinds)
    for (long k = 1;; ++k) {
        // visit n = -k then n = +k; stop once both sides fall past the order
        const long e_neg = bilateral_exponent(kind, -k);
        const long e_pos = bilateral_exponent(kind, k);
        if (e_neg > order && e_pos > order) break;
        if (e_neg <= order)
            coeffs[static_cast<std::size_t>(e_neg)] += bilateral_weight(kind, -k);
        if (e_pos <= order)
            coeffs[static_cast<std::size_t>(e_pos)] += bilateral_weight(kind, k);
    }
    return Series(ring, std::move(coeffs));
}

IdentityReport compare_series(std::string identity, const Series& lhs, const Series& rhs) {
    if (lhs.ring() != rhs.ring())
        throw std::invalid_argument("compare_series: ring mismatch, " + lhs.ring().describe() +
                                    " vs " + rhs.ring().describe());
    if (lhs.order() != rhs.order())
        throw std::invalid_argument("compare_series: order mismatch, " +
                                    std::to_string(lhs.order()) + " vs " +
                                    std::to_string(rhs.order()));
    IdentityReport report{std::move(identity), lhs.order(), true, std::nullopt};
    for (long n = 0; n <= lhs.order(); ++n) {
        if (lhs.at(n) != rhs.at(n)) {
            report.pass = false;
            report.first_mismatch = n;
            break;
        }
    }
    return report;
}

IdentityReport check_identity(BilateralKind kind, long order) {
    const Ring ring = Ring::exact();
    const Series lhs = bilateral_series(kind, order, ring);
    switch (kind) {
        case BilateralKind::EulerPentagonal:
            return compare_series("euler-pentagonal", lhs, dense_euler_f1(order));
        case BilateralKind::RamanujanF15F22:
            return compare_series(
                "ramanujan-f15-f22", lhs,
                eta_quotient_series(EtaQuotient({{1, 5}, {2, -2}}), order, ring));
        case BilateralKind::RamanujanF25F12:
            return compare_series(
                "ramanujan-f25-f12", lhs,
                eta_quotient_series(EtaQuotient({{1, -2}, {2, 5}}), order, ring));
    }
    throw std::logic_error("unknown bilateral kind");
}

std::vector<IdentityReport> check_classical_identities(long order) {
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0, got " + std::to_string(order));
    const Ring ring = Ring::exact();
    std::vector<IdentityReport> reports;

    { // sum a_2(3n+2) q^n = 3 f_3^3 f_6^3 / (f_1^4 f_2^4)
        const Series a2 = generalized_cubic_series(2, 3 * order + 2, ring);
        const Series lhs = extract_progression(a2, 3, 2);
        const Series rhs = eta_quotient_series(
            EtaQuotient({{1, -4}, {2, -4}, {3, 3}, {6, 3}}), order, ring);
        reports.push_back(compare_series("chan-a2-3n2", lhs,
                                         linear_combine(3, rhs, 0, rhs)));
    }
    { // sum p(5n+4) q^n = 5 f_5^5 / f_1^6
        const Series p1 = generalized_cubic_series(1, 5 * order + 4, ring);
        const Series lhs = extract_progression(p1, 5, 4);
        const Series rhs = eta_quotient_series(EtaQuotient({{1, -6}, {5, 5}}), order, ring);
        reports.push_back(compare_series("ramanujan-p5n4", lhs,
                                         linear_combine(5, rhs, 0, rhs)));
    }
    return reports;
}

Series ahlgren_A_series(long order) {
    return eta_quotient_series(EtaQuotient({{1, -1}, {2, 7}}), order, Ring::exact());
}

IdentityReport check_ahlgren_relation(long p, long n_max, long order_ceiling) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw HypothesisError("check_ahlgren_relation: p = " + std::to_string(p) +
                              " is not prime");
    const unsigned mod12 = static_cast<unsigned>(p % 12);
    if (mod12 != 7 && mod12 != 11)
        throw HypothesisError("check_ahlgren_relation: p = " + std::to_string(p) + " is " +
                              std::to_string(mod12) + " mod 12; need 7 or 11");
    if (n_max < 0)
        throw std::invalid_argument("n_max must be >= 0, got " + std::to_string(n_max));
    // p == 7 or 11 (mod 12) forces p == 3 or 7 (mod 8) (check mod 24), so
    // epsilon_sign and thm32_offset accept every p admitted above.
    const int eps = epsilon_sign(static_cast<std::uint64_t>(p));
    const long offset = static_cast<long>(thm32_offset(static_cast<std::uint64_t>(p)));
    const long order = p * n_max + offset;
    if (order > order_ceiling)
        throw ResourceLimitError("check_ahlgren_relation: required order " +
                                 std::to_string(order) + " exceeds the ceiling " +
                                 std::to_string(order_ceiling));
    const Series A = ahlgren_A_series(order);
    const mpz_class scale = mpz_class(eps) * p * p;
    IdentityReport report{"ahlgren-p" + std::to_string(p), n_max, true, std::nullopt};
    for (long n = 0; n <= n_max; ++n) {
        const mpz_class lhs = A.at(p * n + offset);
        const mpz_class rhs = (n % p == 0) ? mpz_class(scale * A.at(n / p)) : mpz_class(0);
        if (lhs != rhs) {
            report.pass = false;
            report.first_mismatch = n;
            break;
        }
    }
    return report;
}

IdentityReport check_binomial_congruence(long p, long order) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw HypothesisError("check_binomial_congruence: p = " + std::to_string(p) +
                              " is not prime");
    const Ring ring = Ring::mod(static_cast<std::uint64_t>(p));
    const Series f1 = euler_product_series(1, order, ring);
    const Series lhs = pow_int(f1, p);
    const Series rhs = substitute_power(f1, p);
    return compare_series("binomial-f1p-p" + std::to_string(p), lhs, rhs);
}

} // namespace qcong
