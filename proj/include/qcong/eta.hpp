#pragma once

// Euler products f_m = prod_{n>=1} (1 - q^{m n}) and integer-exponent
// quotients of them, expanded as truncated series in either ring.
//
// f_m is generated sparsely from the pentagonal-number expansion of f_1
// dilated by m, not by literal multiplication; the test suite pins it
// against the dense product.

#include <string>
#include <string_view>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

struct EtaFactor {
    long scale;    // the m of f_m, >= 1
    long exponent; // nonzero
};

// A formal product prod f_{m_i}^{e_i} with pairwise distinct scales, kept
// sorted ascending by scale.
class EtaQuotient {
public:
    // Sorts by scale; rejects duplicate scales, zero exponents, scales < 1.
    explicit EtaQuotient(std::vector<EtaFactor> factors);

    const std::vector<EtaFactor>& factors() const { return factors_; }
    std::string notation() const; // e.g. "f1^-1*f2^-2"

private:
    std::vector<EtaFactor> factors_;
};

// Strict parser for the notation accepted by the CLI: one or more terms
// joined by '*', each term exactly f<scale>^<exponent> with decimal integers
// and no whitespace, e.g. "f1^5*f2^-2".
EtaQuotient parse_eta_quotient(std::string_view text);

// f_scale truncated at `order`.
Series euler_product_series(long scale, long order, const Ring& ring);

// The quotient expanded at `order`.  Negative exponents invert the (unit
// constant) Euler factor first; in an exact ring that is always legal since
// every f_m has constant term 1.
Series eta_quotient_series(const EtaQuotient& quotient, long order, const Ring& ring);

// Generating series of c-colored cubic partitions: 1 / (f_1 * f_2^{c-1}),
// c >= 1.  c = 1 is the ordinary partition generating function.
Series generalized_cubic_series(long colors, long order, const Ring& ring);

} // namespace qcong
