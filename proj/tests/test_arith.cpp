#include "doctest.h"

#include <cstdint>
#include <vector>

#include "qcong/arith.hpp"
#include "qcong/errors.hpp"

using namespace qcong;

namespace {

// Independent sieve for cross-checking is_prime.
std::vector<bool> sieve(std::uint64_t limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = prime[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

} // namespace

TEST_CASE("primality") {
    const auto table = sieve(2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(is_prime(n) == table[n]);
    }
    CHECK(is_prime(999983)); // largest prime below 10^6
    CHECK_FALSE(is_prime(999983ULL * 999983ULL));
}

TEST_CASE("prime residue classes") {
    const PrimeClass c = classify_prime(23);
    CHECK(c.mod8 == 7);
    CHECK(c.mod12 == 11);
    CHECK(c.mod24 == 23);
    CHECK(classify_prime(29).mod8 == 5);
    CHECK_THROWS_AS(classify_prime(21), HypothesisError);
    CHECK_THROWS_AS(classify_prime(1), HypothesisError);
}

TEST_CASE("Legendre symbol") {
    SUBCASE("frozen values") {
        CHECK(legendre_symbol(-1, 7) == -1);
        CHECK(legendre_symbol(-2, 5) == -1);
        CHECK(legendre_symbol(4, 7) == 1);
        CHECK(legendre_symbol(0, 5) == 0);
        CHECK(legendre_symbol(14, 7) == 0);
        CHECK(legendre_symbol(2, 7) == 1);   // 7 == 7 mod 8
        CHECK(legendre_symbol(2, 5) == -1);  // 5 == 5 mod 8
    }
    SUBCASE("the two evaluation paths agree for every odd prime below 1000") {
        for (std::uint64_t p = 3; p < 1000; ++p) {
            if (!is_prime(p)) continue;
            for (std::int64_t a = -30; a <= 30; ++a) {
                CAPTURE(p);
                CAPTURE(a);
                CHECK(legendre_symbol(a, p) == legendre_symbol_reciprocity(a, p));
            }
        }
    }
    SUBCASE("multiplicativity") {
        for (std::uint64_t p : {5ULL, 13ULL, 97ULL})
            for (std::int64_t a = 1; a < 20; ++a)
                for (std::int64_t b = 1; b < 20; ++b)
                    CHECK(legendre_symbol(a * b, p) ==
                          legendre_symbol(a, p) * legendre_symbol(b, p));
    }
    SUBCASE("quadratic residues are exactly the squares") {
        const std::uint64_t p = 23;
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
            bool is_square = false;
            for (std::uint64_t x = 1; x < p; ++x)
                if ((x * x) % p == static_cast<std::uint64_t>(a)) is_square = true;
            CHECK(legendre_symbol(a, p) == (is_square ? 1 : -1));
        }
    }
    CHECK_THROWS_AS(legendre_symbol(3, 8), HypothesisError);
    CHECK_THROWS_AS(legendre_symbol(3, 2), HypothesisError);
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(8, 13) == 5);
    CHECK(mod_inverse(-5, 13) == mod_inverse(8, 13));
    for (std::uint64_t m : {7ULL, 24ULL, 101ULL})
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(m); ++a) {
            bool coprime = true;
            for (std::int64_t d = 2; d <= a; ++d)
                if (a % d == 0 && m % static_cast<std::uint64_t>(d) == 0) coprime = false;
            if (!coprime) {
                CHECK_THROWS_AS(mod_inverse(a, m), HypothesisError);
            } else {
                const std::uint64_t inv = mod_inverse(a, m);
                CHECK((static_cast<std::uint64_t>(a) * inv) % m == 1);
            }
        }
    CHECK_THROWS_AS(mod_inverse(3, 1), HypothesisError);
}

TEST_CASE("family offsets") {
    SUBCASE("thm31: 8l + 3 == 0 (mod p)") {
        CHECK(thm31_offset(5) == 4);
        CHECK(thm31_offset(7) == 4);
        CHECK(thm31_offset(13) == 11);
        CHECK(thm31_offset(23) == 14);
        CHECK(thm31_offset(29) == 25);
        CHECK(thm31_offset(31) == 19);
        for (std::uint64_t p = 5; p < 200; ++p) {
            if (!is_prime(p) || (p % 8 != 5 && p % 8 != 7)) continue;
            const std::uint64_t l = thm31_offset(p);
            CHECK(l < p);
            CHECK((8 * l + 3) % p == 0);
        }
        CHECK_THROWS_AS(thm31_offset(3), HypothesisError);   // 3 mod 8
        CHECK_THROWS_AS(thm31_offset(17), HypothesisError);  // 1 mod 8
        CHECK_THROWS_AS(thm31_offset(15), HypothesisError);  // composite (7 mod 8)
    }
    SUBCASE("thm32: 13(p^2-1)/24") {
        CHECK(thm32_offset(7) == 26);
        CHECK(thm32_offset(11) == 65);
        CHECK(thm32_offset(19) == 195);
        CHECK(thm32_offset(23) == 286);
        CHECK_THROWS_AS(thm32_offset(5), HypothesisError);   // p < 7 and 5 mod 8
        CHECK_THROWS_AS(thm32_offset(13), HypothesisError);  // 5 mod 8
        CHECK_THROWS_AS(thm32_offset(9), HypothesisError);   // composite
    }
    SUBCASE("epsilon") {
        CHECK(epsilon_sign(7) == 1);
        CHECK(epsilon_sign(23) == 1);
        CHECK(epsilon_sign(3) == -1);
        CHECK(epsilon_sign(11) == -1);
        CHECK(epsilon_sign(19) == -1);
        CHECK_THROWS_AS(epsilon_sign(5), HypothesisError);
        CHECK_THROWS_AS(epsilon_sign(17), HypothesisError);
        CHECK_THROWS_AS(epsilon_sign(21), HypothesisError);
    }
}

TEST_CASE("zeros of a x^2 + b y^2 mod p") {
    SUBCASE("frozen counts") {
        CHECK(quadratic_form_zero_count(1, 1, 7) == 1);
        CHECK(quadratic_form_zero_count(1, 1, 5) == 9);
        CHECK(quadratic_form_zero_count(2, 1, 5) == 1);
    }
    SUBCASE("dichotomy against the Legendre symbol") {
        for (std::uint64_t p = 3; p < 60; ++p) {
            if (!is_prime(p)) continue;
            for (const auto& [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                     {1, 1}, {2, 1}, {3, 5}}) {
                if (static_cast<std::uint64_t>(a) % p == 0 ||
                    static_cast<std::uint64_t>(b) % p == 0)
                    continue;
                const std::uint64_t count = quadratic_form_zero_count(a, b, p);
                CAPTURE(p);
                CAPTURE(a);
                CAPTURE(b);
                if (legendre_symbol(-a * b, p) == -1)
                    CHECK(count == 1);
                else
                    CHECK(count == 2 * p - 1);
            }
        }
    }
    CHECK_THROWS_AS(quadratic_form_zero_count(7, 1, 7), HypothesisError);
    CHECK_THROWS_AS(quadratic_form_zero_count(1, 1, 9), HypothesisError);
    CHECK_THROWS_AS(quadratic_form_zero_count(1, 1, 2), HypothesisError);
}
