#include "qcong/eta.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qcong {

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
    for (const EtaFactor& f : factors_) {
        if (f.scale < 1)
            throw std::invalid_argument("eta factor scale must be >= 1, got " +
                                        std::to_string(f.scale));
        if (f.exponent == 0)
            throw std::invalid_argument("eta factor f" + std::to_string(f.scale) +
                                        " has zero exponent");
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const EtaFactor& a, const EtaFactor& b) { return a.scale < b.scale; });
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i].scale == factors_[i - 1].scale)
            throw std::invalid_argument("duplicate eta factor scale " +
                                        std::to_string(factors_[i].scale));
}

std::string EtaQuotient::notation() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += '*';
        out += 'f';
        out += std::to_string(factors_[i].scale);
        out += '^';
        out += std::to_string(factors_[i].exponent);
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
    throw std::invalid_argument("cannot parse eta quotient \"" + std::string(text) +
                                "\": " + why);
}

long parse_long(std::string_view text, std::string_view& rest, bool allow_sign,
                const char* what) {
    std::size_t i = 0;
    if (allow_sign && i < rest.size() && rest[i] == '-') ++i;
    std::size_t digits_begin = i;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    if (i == digits_begin)
        parse_fail(text, what);
    long value = 0;
    try {
        value = std::stol(std::string(rest.substr(0, i)));
    } catch (const std::out_of_range&) {
        parse_fail(text, "number out of range");
    }
    rest.remove_prefix(i);
    return value;
}

} // namespace

EtaQuotient parse_eta_quotient(std::string_view text) {
    std::string_view rest = text;
    std::vector<EtaFactor> factors;
    while (true) {
        if (rest.empty() || rest[0] != 'f')
            parse_fail(text, "expected a term of the form f<scale>^<exponent>");
        rest.remove_prefix(1);
        const long scale = parse_long(text, rest, false, "expected a decimal scale after 'f'");
        if (rest.empty() || rest[0] != '^')
            parse_fail(text, "expected '^' after the scale");
        rest.remove_prefix(1);
        const long exponent = parse_long(text, rest, true, "expected a decimal exponent after '^'");
        factors.push_back({scale, exponent});
        if (rest.empty()) break;
        if (rest[0] != '*')
            parse_fail(text, "expected '*' between terms");
        rest.remove_prefix(1);
    }
    return EtaQuotient(std::move(factors)); // validates scales/exponents
}

Series euler_product_series(long scale, long order, const Ring& ring) {
    if (scale < 1)
        throw std::invalid_argument("Euler product scale must be >= 1, got " +
                                    std::to_string(scale));
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0, got " + std::to_string(order));
    // Pentagonal-number expansion: f_1 = sum_{n in Z} (-1)^n q^{n(3n+1)/2},
    // dilated q -> q^scale.  Exponents for n and -n are n(3n+1)/2 and
    // n(3n-1)/2; both carry sign (-1)^n.
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] = 1; // n = 0
    for (long n = 1;; ++n) {
        const long e1 = n * (3 * n - 1) / 2; // generalized pentagonal, -n branch
        const long e2 = n * (3 * n + 1) / 2;
        if (e1 * scale > order && e2 * scale > order) break;
        const int sign = (n % 2 == 0) ? 1 : -1;
        if (e1 * scale <= order) coeffs[static_cast<std::size_t>(e1 * scale)] = sign;
        if (e2 * scale <= order) coeffs[static_cast<std::size_t>(e2 * scale)] = sign;
    }
    return Series(ring, std::move(coeffs));
}

Series eta_quotient_series(const EtaQuotient& quotient, long order, const Ring& ring) {
    Series acc = Series::one(ring, order);
    for (const EtaFactor& f : quotient.factors()) {
        const Series base = euler_product_series(f.scale, order, ring);
        acc = multiply(acc, pow_int(base, f.exponent));
    }
    return acc;
}

Series generalized_cubic_series(long colors, long order, const Ring& ring) {
    if (colors < 1)
        throw std::invalid_argument("colors must be >= 1, got " + std::to_string(colors));
    Series denom = euler_product_series(1, order, ring);
    if (colors > 1)
        denom = multiply(denom, pow_int(euler_product_series(2, order, ring), colors - 1));
    return invert(denom);
}

} // namespace qcong
