#pragma once

// Elementary number theory backing the congruence families: primality,
// Legendre symbols (two independent evaluation paths), modular inverses,
// the family-specific offsets, and a brute-force count of zeros of the
// binary quadratic form a*x^2 + b*y^2 mod p.

#include <cstdint>

namespace qcong {

// Deterministic trial division; fine for the word-sized inputs used here.
bool is_prime(std::uint64_t n);

// Residues of a prime against the moduli the congruence families care about.
struct PrimeClass {
    std::uint64_t p;
    unsigned mod8;
    unsigned mod12;
    unsigned mod24;
};
PrimeClass classify_prime(std::uint64_t p); // HypothesisError unless p is prime

// Legendre symbol (a/p) in {-1, 0, +1} for odd prime p, via Euler's criterion.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Second, independent path: quadratic reciprocity ladder (Jacobi-style).
// Must agree with legendre_symbol everywhere; the tests enforce that.
int legendre_symbol_reciprocity(std::int64_t a, std::uint64_t p);

// Inverse of a mod m (extended Euclid); HypothesisError when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

// The offset l of the family a_{p-4}(p n + l) == 0 (mod p): the unique
// 0 <= l < p with 8 l + 3 == 0 (mod p).  Requires p prime, p == 5 or 7 (mod 8).
std::uint64_t thm31_offset(std::uint64_t p);

// The offset 13 (p^2 - 1) / 24 of the family a_{p-6}(p n + offset) == 0
// (mod p).  Requires p >= 7 prime with p == 3 or 7 (mod 8).
std::uint64_t thm32_offset(std::uint64_t p);

// Sign in the Ahlgren-type recursion: +1 when p == 7 (mod 8), -1 when
// p == 3 (mod 8); HypothesisError otherwise.
int epsilon_sign(std::uint64_t p);

// |{(x, y) in (Z/p)^2 : a x^2 + b y^2 == 0 (mod p)}| by direct enumeration.
// Equals 1 when (-a b / p) = -1 and 2p - 1 when (-a b / p) = +1 (p odd prime,
// p dividing neither a nor b).
std::uint64_t quadratic_form_zero_count(std::int64_t a, std::int64_t b, std::uint64_t p);

} // namespace qcong
