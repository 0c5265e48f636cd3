#pragma once

// Classical bilateral theta expansions and the identity checks built on
// them.  Every check compares two independently computed series
// coefficient-by-coefficient and reports the first mismatch instead of a
// bare boolean.

#include <optional>
#include <string>
#include <vector>

#include "qcong/errors.hpp"
#include "qcong/series.hpp"

namespace qcong {

// The three bilateral sums, sum over all integers n of w(n) q^{e(n)}:
//   EulerPentagonal:   w = (-1)^n,        e = n(3n+1)/2   (= f_1)
//   RamanujanF15F22:   w = 6n+1,          e = n(3n+1)/2   (= f_1^5 / f_2^2)
//   RamanujanF25F12:   w = (-1)^n (3n+1), e = 3n^2+2n     (= f_2^5 / f_1^2)
enum class BilateralKind { EulerPentagonal, RamanujanF15F22, RamanujanF25F12 };

// Terms are accumulated in the order n = 0, -1, +1, -2, +2, ... and the
// iteration stops only once both branches exceed the order.
Series bilateral_series(BilateralKind kind, long order, const Ring& ring);

struct IdentityReport {
    std::string identity;
    long order;
    bool pass;
    std::optional<long> first_mismatch; // absent when pass
};

// Coefficientwise comparison; both series must share ring and order.
IdentityReport compare_series(std::string identity, const Series& lhs, const Series& rhs);

// Bilateral sum vs. the eta-quotient side, exact ring:
//   EulerPentagonal vs. the literal dense product of (1 - q^k) — an
//   independent path, since euler_product_series is itself pentagonal;
//   RamanujanF15F22 vs. f_1^5 * f_2^{-2};  RamanujanF25F12 vs. f_2^5 * f_1^{-2}.
IdentityReport check_identity(BilateralKind kind, long order);

// The two classical progression identities, exact ring, each compared to
// `order`: the 2-colored slice sum a_2(3n+2) q^n = 3 f_3^3 f_6^3 / (f_1^4 f_2^4)
// and Ramanujan's sum p(5n+4) q^n = 5 f_5^5 / f_1^6.
std::vector<IdentityReport> check_classical_identities(long order);

// A(n) = [q^n] f_2^7 / f_1, the auxiliary series behind the second family.
Series ahlgren_A_series(long order);

// Checks A(p n + 13(p^2-1)/24) = eps * p^2 * A(n/p) for n = 0..n_max, where
// A(n/p) is 0 unless p | n; requires prime p == 7 or 11 (mod 12).
IdentityReport check_ahlgren_relation(long p, long n_max,
                                      long order_ceiling = kDefaultOrderCeiling);

// Freshman's-dream check in Z/p: f_1(q)^p vs. f_1(q^p) to `order`.
IdentityReport check_binomial_congruence(long p, long order);

} // namespace qcong
