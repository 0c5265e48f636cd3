#pragma once

// The congruence lab: claims of the form  a_c(p n + r) == 0 (mod m)  for all
// n, their verification to a finite depth, and an exhaustive small-parameter
// search.  Verification runs the series modularly and cross-checks a prefix
// against the combinatorial oracle; the two paths disagreeing is an internal
// error, not a failed claim.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/errors.hpp"

namespace qcong {

enum class ClaimTag { Thm11, Thm31, Thm32, Search };

std::string claim_tag_name(ClaimTag tag);          // "THM11", ...
ClaimTag claim_tag_from_name(const std::string&);  // inverse, throws on junk

struct CongruenceClaim {
    long colors;           // c
    long step;             // p (progression step; equal to the modulus in the families)
    long offset;           // r
    std::uint64_t modulus; // m
    ClaimTag tag;

    bool operator==(const CongruenceClaim&) const = default;
};

// The two headline congruences: a_3(7n+4) == 0 (mod 7), a_5(11n+10) == 0 (mod 11).
std::pair<CongruenceClaim, CongruenceClaim> build_thm11_claims();

// a_{p-4}(p n + l) == 0 (mod p) with 8l + 3 == 0 (mod p); requires prime
// p == 5 or 7 (mod 8) and p >= 5 (so c >= 1).  p = 5 specializes to the
// classical p(5n+4) congruence and is deliberately admitted.
CongruenceClaim build_thm31_claim(std::uint64_t p);

// a_{p-6}(p n + 13(p^2-1)/24) == 0 (mod p); requires prime p >= 7 with
// p == 3 or 7 (mod 8).
CongruenceClaim build_thm32_claim(std::uint64_t p);

struct VerifyOptions {
    long order_ceiling = kDefaultOrderCeiling;
    bool oracle_crosscheck = true; // DP cross-check of a small coefficient prefix
};

struct VerificationReport {
    CongruenceClaim claim;
    long n_checked;                        // progression terms examined
    long order;                            // truncation order of the expansion
    bool pass;
    std::optional<long> first_fail_n;      // absent when pass
    std::optional<std::uint64_t> residue;  // offending residue, absent when pass
};

// Expands a_c mod m to order step*(depth-1) + offset and scans the
// progression for n = 0..depth-1.  Throws ResourceLimitError when the order
// would exceed options.order_ceiling.
VerificationReport verify_claim(const CongruenceClaim& claim, long depth,
                                const VerifyOptions& options = {});

// Every claim (c <= c_max, prime p <= p_max, 0 <= r < p, m = p) that
// survives verification to `depth`, sorted by (c, p, r).  `jobs` > 1
// distributes the (c, p) cells across threads; output order is independent
// of the schedule.
std::vector<CongruenceClaim> search_congruences(long c_max, long p_max, long depth,
                                                const VerifyOptions& options = {},
                                                int jobs = 1);

} // namespace qcong
