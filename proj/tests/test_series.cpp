#include "doctest.h"

#include <random>
#include <stdexcept>

#include "qcong/series.hpp"

#include "test_helpers.hpp"

using namespace qcong;
using qtest::to_mpz;

TEST_CASE("ring descriptors") {
    CHECK(Ring::exact().is_exact());
    CHECK(Ring::exact().describe() == "Z");
    CHECK(Ring::mod(7).modulus() == 7);
    CHECK(Ring::mod(7).describe() == "Z/7");
    CHECK(Ring::mod(7) == Ring::mod(7));
    CHECK(Ring::mod(7) != Ring::mod(11));
    CHECK(Ring::exact() != Ring::mod(7));
    CHECK_THROWS_AS(Ring::mod(0), std::invalid_argument);
    CHECK_THROWS_AS(Ring::mod(1), std::invalid_argument);
    CHECK_THROWS_AS(Ring::exact().modulus(), std::logic_error);
}

TEST_CASE("construction and coefficient access") {
    const Series s(Ring::exact(), to_mpz({1, -2, 3}));
    CHECK(s.order() == 2);
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == -2);
    CHECK(s.at(2) == 3);
    CHECK_THROWS_AS(s.at(3), std::out_of_range);
    CHECK_THROWS_AS(s.at(-1), std::out_of_range);
    CHECK_THROWS_AS(Series(Ring::exact(), std::vector<mpz_class>{}), std::invalid_argument);

    SUBCASE("order 0 is legal everywhere") {
        const Series c = Series::constant(Ring::exact(), 0, 5);
        CHECK(c.order() == 0);
        CHECK(c.at(0) == 5);
        CHECK(multiply(c, c).at(0) == 25);
    }

    SUBCASE("mod-ring values are canonical representatives") {
        const Series t(Ring::mod(7), to_mpz({-1, 13, 7}));
        CHECK(t.at(0) == 6);
        CHECK(t.at(1) == 6);
        CHECK(t.at(2) == 0);
        CHECK(t.residue_coeffs() == std::vector<std::uint64_t>{6, 6, 0});
        CHECK_THROWS_AS(t.exact_coeffs(), std::logic_error);
        CHECK_THROWS_AS(s.residue_coeffs(), std::logic_error);
    }

    SUBCASE("zero / one / constant") {
        CHECK(Series::zero(Ring::mod(5), 3).residue_coeffs() ==
              std::vector<std::uint64_t>{0, 0, 0, 0});
        CHECK(Series::one(Ring::exact(), 2) == Series(Ring::exact(), to_mpz({1, 0, 0})));
        CHECK_THROWS_AS(Series::zero(Ring::exact(), -1), std::invalid_argument);
    }
}

TEST_CASE("equality is ring- and order-sensitive") {
    const Series a(Ring::exact(), to_mpz({1, 2}));
    CHECK(a == Series(Ring::exact(), to_mpz({1, 2})));
    CHECK(a != Series(Ring::exact(), to_mpz({1, 2, 0}))); // longer truncation
    CHECK(a != Series(Ring::mod(5), to_mpz({1, 2})));     // different ring
}

TEST_CASE("linear_combine") {
    const Series s(Ring::exact(), to_mpz({1, 1, 1, 1}));
    const Series t(Ring::exact(), to_mpz({0, 1, 2}));
    const Series lc = linear_combine(2, s, -3, t);
    CHECK(lc.order() == 2); // min of the input orders
    CHECK(lc == Series(Ring::exact(), to_mpz({2, -1, -4})));
    CHECK_THROWS_AS(linear_combine(1, s, 1, Series(Ring::mod(5), to_mpz({1}))),
                    std::invalid_argument);

    SUBCASE("mod ring with negative scalars") {
        const Series u(Ring::mod(7), to_mpz({3, 5}));
        const Series v(Ring::mod(7), to_mpz({1, 6}));
        const Series w = linear_combine(-1, u, 10, v);
        CHECK(w.at(0) == (-3 + 10) % 7);       // 0
        CHECK(w.at(1) == ((-5 + 60) % 7 + 7) % 7);
    }
}

TEST_CASE("multiply matches schoolbook convolution") {
    std::mt19937_64 rng(20260813);
    for (int trial = 0; trial < 20; ++trial) {
        const long na = 1 + static_cast<long>(rng() % 24);
        const long nb = 1 + static_cast<long>(rng() % 24);
        const auto a = qtest::random_coeffs(rng, na, 50);
        const auto b = qtest::random_coeffs(rng, nb, 50);
        const long order = std::min(na, nb);
        const auto expect = qtest::conv_reference(a, b, order);

        const Series sa(Ring::exact(), a);
        const Series sb(Ring::exact(), b);
        CHECK(multiply(sa, sb) == Series(Ring::exact(), expect));
        CHECK(multiply(sa, sb) == multiply(sb, sa));

        for (std::uint64_t m : {std::uint64_t{2}, std::uint64_t{7},
                                std::uint64_t{1} << 40}) {
            const Series ma(Ring::mod(m), a);
            const Series mb(Ring::mod(m), b);
            CHECK(multiply(ma, mb) == Series(Ring::mod(m), expect));
        }
    }
    CHECK_THROWS_AS(multiply(Series(Ring::exact(), to_mpz({1})),
                             Series(Ring::mod(3), to_mpz({1}))),
                    std::invalid_argument);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(7701);
    const Ring rings[] = {Ring::exact(), Ring::mod(9), Ring::mod(97)};
    for (const Ring& ring : rings) {
        for (int trial = 0; trial < 10; ++trial) {
            const long order = 1 + static_cast<long>(rng() % 32);
            const Series a(ring, qtest::random_coeffs(rng, order, 30));
            const Series b(ring, qtest::random_coeffs(rng, order, 30));
            const Series c(ring, qtest::random_coeffs(rng, order, 30));
            // commutativity, associativity, distributivity, identities
            CHECK(multiply(a, b) == multiply(b, a));
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(multiply(a, linear_combine(1, b, 1, c)) ==
                  linear_combine(1, multiply(a, b), 1, multiply(a, c)));
            CHECK(multiply(a, Series::one(ring, order)) == a);
            CHECK(multiply(a, Series::zero(ring, order)) == Series::zero(ring, order));
        }
    }
}

TEST_CASE("invert") {
    SUBCASE("1/(1-q) is the geometric series") {
        const Series s(Ring::exact(), to_mpz({1, -1, 0, 0, 0}));
        CHECK(invert(s) == Series(Ring::exact(), to_mpz({1, 1, 1, 1, 1})));
    }
    SUBCASE("two-sided inverse and involution, both rings") {
        std::mt19937_64 rng(99021);
        for (const Ring& ring : {Ring::exact(), Ring::mod(64), Ring::mod(101)}) {
            for (int trial = 0; trial < 8; ++trial) {
                const long order = 1 + static_cast<long>(rng() % 40);
                const Series s(ring, qtest::random_unit_coeffs(rng, order, 20));
                const Series inv = invert(s);
                CHECK(multiply(s, inv) == Series::one(ring, order));
                CHECK(multiply(inv, s) == Series::one(ring, order));
                CHECK(invert(inv) == s);
            }
        }
    }
    SUBCASE("constant term -1 works in the exact ring") {
        const Series s(Ring::exact(), to_mpz({-1, 2, 5}));
        CHECK(multiply(s, invert(s)) == Series::one(Ring::exact(), 2));
    }
    SUBCASE("non-units are rejected with the offending coefficient named") {
        CHECK_THROWS_WITH_AS(invert(Series(Ring::exact(), to_mpz({2, 1}))),
                             "constant term 2 is not a unit in Z", std::domain_error);
        CHECK_THROWS_WITH_AS(invert(Series(Ring::mod(4), to_mpz({2, 1}))),
                             "constant term 2 is not a unit in Z/4", std::domain_error);
        // 3 is a unit mod 4, so this one must succeed
        const Series ok(Ring::mod(4), to_mpz({3, 1}));
        CHECK(multiply(ok, invert(ok)) == Series::one(Ring::mod(4), 1));
    }
}

TEST_CASE("pow_int") {
    const Series f(Ring::exact(), to_mpz({1, -1, -1, 0, 0, 1, 0, 1}));
    SUBCASE("zero exponent gives 1 at the same order") {
        CHECK(pow_int(f, 0) == Series::one(Ring::exact(), 7));
    }
    SUBCASE("agrees with repeated multiplication") {
        Series acc = f;
        for (long e = 2; e <= 6; ++e) {
            acc = multiply(acc, f);
            CHECK(pow_int(f, e) == acc);
        }
    }
    SUBCASE("negative exponents invert first") {
        CHECK(pow_int(f, -3) == invert(pow_int(f, 3)));
        CHECK(multiply(pow_int(f, -2), pow_int(f, 2)) == Series::one(Ring::exact(), 7));
    }
    SUBCASE("mod ring") {
        const Series g(Ring::mod(13), to_mpz({1, 5, 7}));
        CHECK(pow_int(g, 4) == multiply(multiply(g, g), multiply(g, g)));
    }
}

TEST_CASE("substitute_power") {
    const Series s(Ring::exact(), to_mpz({1, 2, 3, 4}));
    SUBCASE("frozen example") {
        CHECK(substitute_power(s, 2) == Series(Ring::exact(), to_mpz({1, 0, 2, 0})));
        CHECK(substitute_power(s, 1) == s);
        CHECK_THROWS_AS(substitute_power(s, 0), std::invalid_argument);
    }
    SUBCASE("multiplicative in the power") {
        std::mt19937_64 rng(5);
        for (const Ring& ring : {Ring::exact(), Ring::mod(11)}) {
            const Series r(ring, qtest::random_coeffs(rng, 30, 9));
            for (long a : {2L, 3L})
                for (long b : {2L, 5L})
                    CHECK(substitute_power(substitute_power(r, a), b) ==
                          substitute_power(r, a * b));
        }
    }
}

TEST_CASE("extract_progression") {
    const Series s(Ring::exact(), to_mpz({1, 2, 3, 4}));
    SUBCASE("frozen example") {
        CHECK(extract_progression(s, 2, 1) == Series(Ring::exact(), to_mpz({2, 4})));
        CHECK(extract_progression(s, 2, 0) == Series(Ring::exact(), to_mpz({1, 3})));
    }
    SUBCASE("step 1 offset 0 is the identity, even on order 0") {
        CHECK(extract_progression(s, 1, 0) == s);
        const Series c = Series::constant(Ring::mod(3), 0, 2);
        CHECK(extract_progression(c, 1, 0) == c);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(extract_progression(s, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(extract_progression(s, 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(extract_progression(s, 2, -1), std::invalid_argument);
        CHECK_THROWS_AS(extract_progression(Series::constant(Ring::exact(), 0, 1), 2, 1),
                        std::invalid_argument); // offset past the order
    }
    SUBCASE("dissection round-trip") {
        std::mt19937_64 rng(4242);
        for (const Ring& ring : {Ring::exact(), Ring::mod(8)}) {
            const long order = 25;
            const Series r(ring, qtest::random_coeffs(rng, order, 40));
            for (long p : {2L, 3L, 5L}) {
                const long limit = p * (order / p);
                for (long idx = 0; idx <= limit; ++idx) {
                    const Series piece = extract_progression(r, p, idx % p);
                    CHECK(piece.at(idx / p) == r.at(idx));
                }
            }
        }
    }
}

TEST_CASE("reduce_mod") {
    const Series s(Ring::exact(), to_mpz({10, -1, 7, 3}));
    const Series r = reduce_mod(s, 7);
    CHECK(r.ring() == Ring::mod(7));
    CHECK(r == Series(Ring::mod(7), to_mpz({3, 6, 0, 3})));
    CHECK_THROWS_AS(reduce_mod(r, 7), std::invalid_argument); // already modular
    CHECK_THROWS_AS(reduce_mod(s, 1), std::invalid_argument);

    SUBCASE("reduction is a ring homomorphism") {
        std::mt19937_64 rng(31337);
        for (std::uint64_t m : {std::uint64_t{2}, std::uint64_t{7}, std::uint64_t{360},
                                (std::uint64_t{1} << 33) + 5}) {
            const Series a(Ring::exact(), qtest::random_coeffs(rng, 24, 100));
            const Series b(Ring::exact(), qtest::random_coeffs(rng, 24, 100));
            CHECK(reduce_mod(multiply(a, b), m) == multiply(reduce_mod(a, m), reduce_mod(b, m)));
            CHECK(reduce_mod(linear_combine(3, a, -2, b), m) ==
                  linear_combine(3, reduce_mod(a, m), -2, reduce_mod(b, m)));
        }
    }

    SUBCASE("whole pipelines agree exact-then-reduce vs modular throughout") {
        std::mt19937_64 rng(777);
        for (std::uint64_t m : {std::uint64_t{5}, std::uint64_t{49}}) {
            const auto coeffs = qtest::random_unit_coeffs(rng, 30, 6);
            const Series exact(Ring::exact(), coeffs);
            const Series modular(Ring::mod(m), coeffs);
            const Series via_exact =
                reduce_mod(substitute_power(invert(pow_int(exact, 2)), 2), m);
            const Series via_mod = substitute_power(invert(pow_int(modular, 2)), 2);
            CHECK(via_exact == via_mod);
        }
    }
}
