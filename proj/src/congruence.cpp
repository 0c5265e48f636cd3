#include "qcong/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qcong/arith.hpp"
#include "qcong/eta.hpp"
#include "qcong/oracle.hpp"
#include "qcong/series.hpp"

namespace qcong {

std::string claim_tag_name(ClaimTag tag) {
    switch (tag) {
        case ClaimTag::Thm11: return "THM11";
        case ClaimTag::Thm31: return "THM31";
        case ClaimTag::Thm32: return "THM32";
        case ClaimTag::Search: return "SEARCH";
    }
    throw std::logic_error("unknown claim tag");
}

ClaimTag claim_tag_from_name(const std::string& name) {
    if (name == "THM11") return ClaimTag::Thm11;
    if (name == "THM31") return ClaimTag::Thm31;
    if (name == "THM32") return ClaimTag::Thm32;
    if (name == "SEARCH") return ClaimTag::Search;
    throw std::invalid_argument("unknown claim tag \"" + name + "\"");
}

namespace {

void validate_claim(const CongruenceClaim& claim) {
    if (claim.colors < 1)
        throw std::invalid_argument("claim colors must be >= 1, got " +
                                    std::to_string(claim.colors));
    if (claim.step < 1)
        throw std::invalid_argument("claim step must be >= 1, got " +
                                    std::to_string(claim.step));
    if (claim.offset < 0)
        throw std::invalid_argument("claim offset must be >= 0, got " +
                                    std::to_string(claim.offset));
    if (claim.modulus < 2)
        throw std::invalid_argument("claim modulus must be >= 2, got " +
                                    std::to_string(claim.modulus));
}

long required_order(const CongruenceClaim& claim, long depth, long ceiling) {
    const __int128 order =
        static_cast<__int128>(claim.step) * (depth - 1) + claim.offset;
    if (order > static_cast<__int128>(ceiling))
        throw ResourceLimitError(
            "verification of a_" + std::to_string(claim.colors) + "(" +
            std::to_string(claim.step) + "n+" + std::to_string(claim.offset) +
            ") at depth " + std::to_string(depth) + " needs order " +
            std::to_string(static_cast<long long>(order)) + " > ceiling " +
            std::to_string(ceiling));
    return static_cast<long>(order);
}

// Compare a short prefix of the modular expansion against the DP oracle.
// These are independent computational paths; disagreement means the engine
// is broken, so abort loudly rather than report anything about the claim.
void oracle_crosscheck_prefix(const CongruenceClaim& claim, const Series& S, long depth) {
    const long limit = std::min<long>(depth, 8);
    const long top_index = claim.step * (limit - 1) + claim.offset;
    const std::vector<mpz_class> table = colored_partition_table(top_index, claim.colors);
    const auto& res = S.residue_coeffs();
    for (long n = 0; n < limit; ++n) {
        const long idx = claim.step * n + claim.offset;
        const std::uint64_t expect =
            mpz_fdiv_ui(table[static_cast<std::size_t>(idx)].get_mpz_t(),
                        static_cast<unsigned long>(claim.modulus));
        const std::uint64_t got = res[static_cast<std::size_t>(idx)];
        if (expect != got)
            throw std::logic_error(
                "internal cross-check failure: modular series gives a_" +
                std::to_string(claim.colors) + "(" + std::to_string(idx) + ") == " +
                std::to_string(got) + " (mod " + std::to_string(claim.modulus) +
                ") but the combinatorial oracle gives " + std::to_string(expect));
    }
}

ClaimTag classify_claim(long c, long p, long r, std::uint64_t m) {
    if ((c == 3 && p == 7 && r == 4 && m == 7) ||
        (c == 5 && p == 11 && r == 10 && m == 11))
        return ClaimTag::Thm11;
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    if (m == up && p >= 5 && is_prime(up) && (p % 8 == 5 || p % 8 == 7) &&
        c == p - 4 && r == static_cast<long>(thm31_offset(up)))
        return ClaimTag::Thm31;
    if (m == up && p >= 7 && is_prime(up) && (p % 8 == 3 || p % 8 == 7) &&
        c == p - 6 && r == static_cast<long>(thm32_offset(up)))
        return ClaimTag::Thm32;
    return ClaimTag::Search;
}

// All congruence survivors in one (c, p) cell, offsets ascending.
std::vector<CongruenceClaim> scan_cell(long c, long p, long depth,
                                       const VerifyOptions& options) {
    const long order = p * (depth - 1) + (p - 1);
    const Series S = generalized_cubic_series(c, order, Ring::mod(static_cast<std::uint64_t>(p)));
    const auto& res = S.residue_coeffs();
    std::vector<CongruenceClaim> found;
    for (long r = 0; r < p; ++r) {
        bool all_zero = true;
        for (long n = 0; n < depth; ++n) {
            if (res[static_cast<std::size_t>(p * n + r)] != 0) {
                all_zero = false;
                break;
            }
        }
        if (!all_zero) continue;
        CongruenceClaim claim{c, p, r, static_cast<std::uint64_t>(p),
                              classify_claim(c, p, r, static_cast<std::uint64_t>(p))};
        if (options.oracle_crosscheck) oracle_crosscheck_prefix(claim, S, depth);
        found.push_back(claim);
    }
    return found;
}

} // namespace

std::pair<CongruenceClaim, CongruenceClaim> build_thm11_claims() {
    return {CongruenceClaim{3, 7, 4, 7, ClaimTag::Thm11},
            CongruenceClaim{5, 11, 10, 11, ClaimTag::Thm11}};
}

CongruenceClaim build_thm31_claim(std::uint64_t p) {
    const std::uint64_t l = thm31_offset(p); // validates primality and p mod 8
    return CongruenceClaim{static_cast<long>(p - 4), static_cast<long>(p),
                           static_cast<long>(l), p, ClaimTag::Thm31};
}

CongruenceClaim build_thm32_claim(std::uint64_t p) {
    const std::uint64_t offset = thm32_offset(p); // validates p >= 7 and p mod 8
    return CongruenceClaim{static_cast<long>(p - 6), static_cast<long>(p),
                           static_cast<long>(offset), p, ClaimTag::Thm32};
}

VerificationReport verify_claim(const CongruenceClaim& claim, long depth,
                                const VerifyOptions& options) {
    validate_claim(claim);
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1, got " + std::to_string(depth));
    const long order = required_order(claim, depth, options.order_ceiling);
    const Series S = generalized_cubic_series(claim.colors, order, Ring::mod(claim.modulus));
    if (options.oracle_crosscheck) oracle_crosscheck_prefix(claim, S, depth);

    const auto& res = S.residue_coeffs();
    VerificationReport report{claim, depth, order, true, std::nullopt, std::nullopt};
    for (long n = 0; n < depth; ++n) {
        const std::uint64_t v = res[static_cast<std::size_t>(claim.step * n + claim.offset)];
        if (v != 0) {
            report.pass = false;
            report.first_fail_n = n;
            report.residue = v;
            report.n_checked = n + 1;
            break;
        }
    }
    return report;
}

std::vector<CongruenceClaim> search_congruences(long c_max, long p_max, long depth,
                                                const VerifyOptions& options, int jobs) {
    if (c_max < 1)
        throw std::invalid_argument("c_max must be >= 1, got " + std::to_string(c_max));
    if (p_max < 2)
        throw std::invalid_argument("p_max must be >= 2, got " + std::to_string(p_max));
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1, got " + std::to_string(depth));
    if (jobs < 1)
        throw std::invalid_argument("jobs must be >= 1, got " + std::to_string(jobs));

    std::vector<long> primes;
    for (long p = 2; p <= p_max; ++p)
        if (is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);

    struct Cell { long c, p; };
    std::vector<Cell> cells;
    for (long c = 1; c <= c_max; ++c)
        for (long p : primes) cells.push_back({c, p});

    // Refuse up front if any cell would blow the ceiling; no thread ever
    // throws ResourceLimitError mid-flight.
    for (const Cell& cell : cells)
        required_order(CongruenceClaim{cell.c, cell.p, cell.p - 1, 2, ClaimTag::Search},
                       depth, options.order_ceiling);

    std::vector<std::vector<CongruenceClaim>> per_cell(cells.size());
    const auto run_cell = [&](std::size_t i) {
        per_cell[i] = scan_cell(cells[i].c, cells[i].p, depth, options);
    };

    if (jobs == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(
            static_cast<std::size_t>(jobs), nullptr);
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    try {
                        run_cell(i);
                    } catch (...) {
                        errors[static_cast<std::size_t>(t)] = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Cells were generated c-major, p-minor and each cell is offset-ascending,
    // so plain concatenation is already sorted by (c, p, r).
    std::vector<CongruenceClaim> out;
    for (const auto& cell : per_cell)
        for (const CongruenceClaim& claim : cell) out.push_back(claim);
    return out;
}

} // namespace qcong
