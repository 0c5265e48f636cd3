#include "doctest.h"

#include <stdexcept>

#include "qcong/congruence.hpp"
#include "qcong/errors.hpp"

using namespace qcong;

TEST_CASE("claim tags round-trip") {
    for (ClaimTag tag : {ClaimTag::Thm11, ClaimTag::Thm31, ClaimTag::Thm32, ClaimTag::Search})
        CHECK(claim_tag_from_name(claim_tag_name(tag)) == tag);
    CHECK(claim_tag_name(ClaimTag::Thm31) == "THM31");
    CHECK_THROWS_AS(claim_tag_from_name("THM99"), std::invalid_argument);
}

TEST_CASE("claim builders, frozen") {
    const auto [first, second] = build_thm11_claims();
    CHECK(first == CongruenceClaim{3, 7, 4, 7, ClaimTag::Thm11});
    CHECK(second == CongruenceClaim{5, 11, 10, 11, ClaimTag::Thm11});

    CHECK(build_thm31_claim(5) == CongruenceClaim{1, 5, 4, 5, ClaimTag::Thm31});
    CHECK(build_thm31_claim(13) == CongruenceClaim{9, 13, 11, 13, ClaimTag::Thm31});
    CHECK(build_thm31_claim(31) == CongruenceClaim{27, 31, 19, 31, ClaimTag::Thm31});
    CHECK(build_thm32_claim(7) == CongruenceClaim{1, 7, 26, 7, ClaimTag::Thm32});
    CHECK(build_thm32_claim(11) == CongruenceClaim{5, 11, 65, 11, ClaimTag::Thm32});

    CHECK_THROWS_AS(build_thm31_claim(11), HypothesisError); // 11 == 3 mod 8
    CHECK_THROWS_AS(build_thm31_claim(6), HypothesisError);  // composite
    CHECK_THROWS_AS(build_thm32_claim(5), HypothesisError);  // p < 7, wrong class
    CHECK_THROWS_AS(build_thm32_claim(13), HypothesisError); // 5 mod 8
}

TEST_CASE("verify_claim") {
    SUBCASE("the a_3(7n+4) family passes with the right bookkeeping") {
        const auto report = verify_claim(CongruenceClaim{3, 7, 4, 7, ClaimTag::Thm11}, 60);
        CHECK(report.pass);
        CHECK(report.n_checked == 60);
        CHECK(report.order == 7 * 59 + 4);
        CHECK(!report.first_fail_n.has_value());
        CHECK(!report.residue.has_value());
    }
    SUBCASE("a false claim fails at the first witness: a_3(5) = 18 == 4 (mod 7)") {
        const auto report = verify_claim(CongruenceClaim{3, 7, 5, 7, ClaimTag::Search}, 50);
        CHECK(!report.pass);
        CHECK(report.first_fail_n == 0);
        CHECK(report.residue == 4);
        CHECK(report.n_checked == 1);
    }
    SUBCASE("every wrong offset of the a_3 family is refuted immediately") {
        const std::uint64_t expected_residue[] = {1, 1, 4, 5, 0, 4, 6}; // index = r
        for (long r : {0L, 1L, 2L, 3L, 5L, 6L}) {
            CAPTURE(r);
            const auto report = verify_claim(CongruenceClaim{3, 7, r, 7, ClaimTag::Search}, 50);
            CHECK(!report.pass);
            CHECK(report.first_fail_n == 0);
            CHECK(report.residue == expected_residue[r]);
        }
    }
    SUBCASE("thm32 claims keep their unreduced offsets") {
        const auto report = verify_claim(build_thm32_claim(7), 40);
        CHECK(report.pass);
        CHECK(report.order == 7 * 39 + 26);
    }
    SUBCASE("input validation") {
        const CongruenceClaim good{3, 7, 4, 7, ClaimTag::Thm11};
        CHECK_THROWS_AS(verify_claim(good, 0), std::invalid_argument);
        CHECK_THROWS_AS(verify_claim(CongruenceClaim{0, 7, 4, 7, ClaimTag::Search}, 5),
                        std::invalid_argument);
        CHECK_THROWS_AS(verify_claim(CongruenceClaim{3, 0, 4, 7, ClaimTag::Search}, 5),
                        std::invalid_argument);
        CHECK_THROWS_AS(verify_claim(CongruenceClaim{3, 7, -1, 7, ClaimTag::Search}, 5),
                        std::invalid_argument);
        CHECK_THROWS_AS(verify_claim(CongruenceClaim{3, 7, 4, 1, ClaimTag::Search}, 5),
                        std::invalid_argument);
    }
    SUBCASE("the order ceiling is enforced up front") {
        VerifyOptions options;
        options.order_ceiling = 100;
        const CongruenceClaim claim{3, 7, 4, 7, ClaimTag::Thm11};
        CHECK_THROWS_AS(verify_claim(claim, 1000, options), ResourceLimitError);
        CHECK(verify_claim(claim, 14, options).pass); // order 95 <= 100 still fine
    }
}

TEST_CASE("search") {
    const auto found = search_congruences(3, 7, 120);
    SUBCASE("exactly the expected rows, sorted by (c, p, r)") {
        REQUIRE(found.size() == 4);
        CHECK(found[0] == CongruenceClaim{1, 5, 4, 5, ClaimTag::Thm31});
        CHECK(found[1] == CongruenceClaim{1, 7, 5, 7, ClaimTag::Search});
        CHECK(found[2] == CongruenceClaim{2, 3, 2, 3, ClaimTag::Search});
        CHECK(found[3] == CongruenceClaim{3, 7, 4, 7, ClaimTag::Thm11});
    }
    SUBCASE("every emitted claim re-verifies at double depth") {
        for (const auto& claim : found) CHECK(verify_claim(claim, 240).pass);
    }
    SUBCASE("the schedule does not change the result") {
        CHECK(search_congruences(3, 7, 120, {}, 4) == found);
        CHECK(search_congruences(3, 7, 120, {}, 2) == found);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(search_congruences(0, 7, 10), std::invalid_argument);
        CHECK_THROWS_AS(search_congruences(2, 1, 10), std::invalid_argument);
        CHECK_THROWS_AS(search_congruences(2, 7, 0), std::invalid_argument);
        CHECK_THROWS_AS(search_congruences(2, 7, 10, {}, 0), std::invalid_argument);
        VerifyOptions tiny;
        tiny.order_ceiling = 10;
        CHECK_THROWS_AS(search_congruences(2, 7, 100, tiny), ResourceLimitError);
    }
}
