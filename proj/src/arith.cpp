#include "qcong/arith.hpp"

#include <stdexcept>
#include <string>

#include "qcong/detail/modmath.hpp"
#include "qcong/errors.hpp"

namespace qcong {

namespace {

using detail::mulmod;
using detail::powmod;

// a reduced into [0, p).
std::uint64_t canonical(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || !is_prime(p))
        throw HypothesisError(std::string(who) + ": p = " + std::to_string(p) +
                              " is not an odd prime");
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0) return false;
        if (n % (d + 2) == 0) return false;
    }
    return true;
}

PrimeClass classify_prime(std::uint64_t p) {
    if (!is_prime(p))
        throw HypothesisError("classify_prime: " + std::to_string(p) + " is not prime");
    return PrimeClass{p, static_cast<unsigned>(p % 8), static_cast<unsigned>(p % 12),
                      static_cast<unsigned>(p % 24)};
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    require_odd_prime(p, "legendre_symbol");
    const std::uint64_t r = canonical(a, p);
    if (r == 0) return 0;
    const std::uint64_t e = powmod(r, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::logic_error("Euler's criterion returned a non-root of unity"); // unreachable
}

int legendre_symbol_reciprocity(std::int64_t a, std::uint64_t p) {
    require_odd_prime(p, "legendre_symbol_reciprocity");
    // Standard Jacobi-symbol ladder; for prime p it computes the Legendre
    // symbol without any exponentiation.
    std::uint64_t x = canonical(a, p);
    std::uint64_t n = p;
    int sign = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::uint64_t n8 = n % 8;
            if (n8 == 3 || n8 == 5) sign = -sign;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
    if (m < 2)
        throw HypothesisError("mod_inverse: modulus must be >= 2, got " + std::to_string(m));
    const auto inv = detail::try_mod_inverse(canonical(a, m), m);
    if (!inv)
        throw HypothesisError("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                              std::to_string(m));
    return *inv;
}

std::uint64_t thm31_offset(std::uint64_t p) {
    const PrimeClass cls = classify_prime(p);
    if (cls.mod8 != 5 && cls.mod8 != 7)
        throw HypothesisError("thm31_offset: p = " + std::to_string(p) +
                              " is " + std::to_string(cls.mod8) +
                              " mod 8; need 5 or 7");
    // l = -3 * 8^{-1} mod p  (p >= 5 here, so p - 3 is the residue of -3)
    const std::uint64_t inv8 = mod_inverse(8, p);
    return mulmod(p - 3, inv8, p);
}

std::uint64_t thm32_offset(std::uint64_t p) {
    const PrimeClass cls = classify_prime(p);
    if (p < 7 || (cls.mod8 != 3 && cls.mod8 != 7))
        throw HypothesisError("thm32_offset: p = " + std::to_string(p) +
                              " must be a prime >= 7 with p == 3 or 7 (mod 8)");
    if (p >= (std::uint64_t{1} << 31))
        throw HypothesisError("thm32_offset: p = " + std::to_string(p) + " is out of range");
    return 13 * ((p * p - 1) / 24);
}

int epsilon_sign(std::uint64_t p) {
    const PrimeClass cls = classify_prime(p);
    if (cls.mod8 == 7) return 1;
    if (cls.mod8 == 3) return -1;
    throw HypothesisError("epsilon_sign: p = " + std::to_string(p) + " is " +
                          std::to_string(cls.mod8) + " mod 8; need 3 or 7");
}

std::uint64_t quadratic_form_zero_count(std::int64_t a, std::int64_t b, std::uint64_t p) {
    require_odd_prime(p, "quadratic_form_zero_count");
    const std::uint64_t ra = canonical(a, p);
    const std::uint64_t rb = canonical(b, p);
    if (ra == 0 || rb == 0)
        throw HypothesisError("quadratic_form_zero_count: p must divide neither coefficient");
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t ax2 = mulmod(ra, mulmod(x, x, p), p);
        for (std::uint64_t y = 0; y < p; ++y) {
            const std::uint64_t by2 = mulmod(rb, mulmod(y, y, p), p);
            if ((ax2 + by2) % p == 0) ++count;
        }
    }
    return count;
}

} // namespace qcong
