#pragma once

// Small modular-arithmetic kernels shared by the series engine and the
// number-theory helpers.  All residues are canonical, i.e. in [0, m).

#include <cstdint>
#include <optional>

namespace qcong::detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Inverse of a mod m via the extended Euclidean algorithm, or nullopt when
// gcd(a, m) != 1.  m >= 2.  (128-bit intermediates so the full uint64_t
// modulus range is safe.)
inline std::optional<std::uint64_t> try_mod_inverse(std::uint64_t a, std::uint64_t m) {
    using i128 = __int128;
    i128 r0 = static_cast<i128>(m), r1 = static_cast<i128>(a % m);
    i128 s0 = 0, s1 = 1; // Bezout coefficients of a
    while (r1 != 0) {
        i128 q = r0 / r1;
        i128 r2 = r0 - q * r1;
        i128 s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) return std::nullopt;
    i128 inv = s0 % static_cast<i128>(m);
    if (inv < 0) inv += static_cast<i128>(m);
    return static_cast<std::uint64_t>(inv);
}

} // namespace qcong::detail
