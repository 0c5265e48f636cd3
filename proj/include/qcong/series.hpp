#pragma once

// Truncated power series with exact coefficient arithmetic.
//
// A Series holds coefficients c_0..c_N of sum c_n q^n over one of two rings:
//   - the exact integers (mpz_class), or
//   - the residues mod m (canonical uint64_t representatives in [0, m)).
// The truncation order N is explicit, operations truncate to the minimum
// order of their inputs, and reading past the order is an error — never a
// silent zero.  Series are immutable; every operation returns a fresh value,
// so concurrent use of shared inputs is safe.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcong {

enum class RingKind { Exact, Mod };

// Coefficient ring descriptor: Z, or Z/m for some m >= 2.
class Ring {
public:
    static Ring exact() { return Ring(RingKind::Exact, 0); }
    static Ring mod(std::uint64_t modulus);

    RingKind kind() const { return kind_; }
    bool is_exact() const { return kind_ == RingKind::Exact; }
    std::uint64_t modulus() const; // only valid for Mod rings

    bool operator==(const Ring&) const = default;
    std::string describe() const; // "Z" or "Z/m"

private:
    Ring(RingKind k, std::uint64_t m) : kind_(k), modulus_(m) {}
    RingKind kind_;
    std::uint64_t modulus_; // 0 when exact
};

class Series {
public:
    // General constructor: order = coeffs.size() - 1.  In a Mod ring the
    // values are reduced to canonical representatives.  coeffs must be
    // non-empty (an order-0 series still has one coefficient).
    Series(Ring ring, std::vector<mpz_class> coeffs);

    static Series zero(Ring ring, long order);
    static Series one(Ring ring, long order);
    static Series constant(Ring ring, long order, const mpz_class& value);

    const Ring& ring() const { return ring_; }
    long order() const { return order_; }

    // Coefficient of q^n as a canonical value (exact integer, or the
    // representative in [0, m)).  Throws std::out_of_range past the order:
    // a truncated series knows nothing beyond it.
    mpz_class at(long n) const;

    // Same ring, same order, same coefficients.
    bool operator==(const Series& other) const;

    // Internal canonical storage, exposed for the serializers and kernels.
    const std::vector<mpz_class>& exact_coeffs() const;      // Exact rings
    const std::vector<std::uint64_t>& residue_coeffs() const; // Mod rings

    // Fast-path constructor for Mod rings: residues must already be canonical.
    static Series from_residues(Ring ring, std::vector<std::uint64_t> residues);

private:
    Series(Ring ring, std::vector<mpz_class> exact, std::vector<std::uint64_t> residues, long order)
        : ring_(ring), order_(order), exact_(std::move(exact)), residues_(std::move(residues)) {}

    Ring ring_;
    long order_;
    std::vector<mpz_class> exact_;         // populated iff ring is Exact
    std::vector<std::uint64_t> residues_;  // populated iff ring is Mod
};

// a*S + b*T.  S and T must live in the same ring; result order is
// min(S.order, T.order).
Series linear_combine(const mpz_class& a, const Series& S,
                      const mpz_class& b, const Series& T);

// Cauchy product, truncated to min(S.order, T.order).
Series multiply(const Series& S, const Series& T);

// Multiplicative inverse of S, same order.  The constant term must be a unit
// (±1 in Z; coprime to m in Z/m); otherwise std::domain_error reporting the
// offending coefficient and ring.
Series invert(const Series& S);

// S^e by repeated squaring; e may be negative (inverts first), e == 0 gives 1
// at S.order.
Series pow_int(const Series& S, long e);

// q -> q^k dilation, k >= 1.  Result keeps S's order: coefficient of q^(k*n)
// is S[n] for k*n <= order, everything else 0.
Series substitute_power(const Series& S, long k);

// The arithmetic-progression slice T[n] = S[step*n + offset], defined for
// 0 <= offset < step and offset <= S.order; result order is
// (S.order - offset) / step.
Series extract_progression(const Series& S, long step, long offset);

// Coefficientwise reduction of an exact series into Z/m, m >= 2.
Series reduce_mod(const Series& S, std::uint64_t m);

} // namespace qcong
