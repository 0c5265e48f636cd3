#include "qcong/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qcong/detail/modmath.hpp"

namespace qcong {

namespace {

using detail::mulmod;
using u128 = unsigned __int128;

std::string ring_name(const Ring& r) { return r.describe(); }

[[noreturn]] void throw_ring_mismatch(const Ring& a, const Ring& b) {
    throw std::invalid_argument("ring mismatch: " + ring_name(a) + " vs " + ring_name(b));
}

void check_order_nonneg(long order) {
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0, got " + std::to_string(order));
}

// Canonical representative of v in [0, m).
std::uint64_t reduce_value(const mpz_class& v, std::uint64_t m) {
    if (m <= std::numeric_limits<unsigned long>::max())
        return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
    // Unreachable on LP64, kept for completeness.
    mpz_class r, mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

std::vector<long> nonzero_indices_u64(const std::vector<std::uint64_t>& v, long order) {
    std::vector<long> nz;
    for (long i = 0; i <= order; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) nz.push_back(i);
    return nz;
}

long count_nonzero_mpz(const std::vector<mpz_class>& v, long order) {
    long n = 0;
    for (long i = 0; i <= order; ++i)
        if (mpz_sgn(v[static_cast<std::size_t>(i)].get_mpz_t()) != 0) ++n;
    return n;
}

long count_nonzero_u64(const std::vector<std::uint64_t>& v, long order) {
    long n = 0;
    for (long i = 0; i <= order; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) ++n;
    return n;
}

// out = s * t truncated to `order`; the sparser operand drives the outer loop.
std::vector<mpz_class> conv_exact(const std::vector<mpz_class>& s,
                                  const std::vector<mpz_class>& t,
                                  long order) {
    const bool s_outer = count_nonzero_mpz(s, order) <= count_nonzero_mpz(t, order);
    const auto& a = s_outer ? s : t;
    const auto& b = s_outer ? t : s;
    std::vector<mpz_class> out(static_cast<std::size_t>(order) + 1);
    for (long i = 0; i <= order; ++i) {
        const mpz_class& ai = a[static_cast<std::size_t>(i)];
        if (mpz_sgn(ai.get_mpz_t()) == 0) continue;
        const long jmax = order - i;
        for (long j = 0; j <= jmax; ++j) {
            const mpz_class& bj = b[static_cast<std::size_t>(j)];
            if (mpz_sgn(bj.get_mpz_t()) == 0) continue;
            mpz_addmul(out[static_cast<std::size_t>(i + j)].get_mpz_t(),
                       ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return out;
}

std::vector<std::uint64_t> conv_mod(const std::vector<std::uint64_t>& s,
                                    const std::vector<std::uint64_t>& t,
                                    long order, std::uint64_t m) {
    const bool s_outer = count_nonzero_u64(s, order) <= count_nonzero_u64(t, order);
    const auto& a = s_outer ? s : t;
    const auto& b = s_outer ? t : s;
    const std::vector<long> nz = nonzero_indices_u64(a, order);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(order) + 1, 0);
    if (m <= (std::uint64_t{1} << 32)) {
        // Products fit in 64 bits; a 128-bit column accumulator needs a
        // single reduction per output coefficient.
        for (long n = 0; n <= order; ++n) {
            u128 acc = 0;
            for (long i : nz) {
                if (i > n) break;
                acc += static_cast<u128>(a[static_cast<std::size_t>(i)]) *
                       b[static_cast<std::size_t>(n - i)];
            }
            out[static_cast<std::size_t>(n)] = static_cast<std::uint64_t>(acc % m);
        }
    } else {
        for (long n = 0; n <= order; ++n) {
            std::uint64_t acc = 0;
            for (long i : nz) {
                if (i > n) break;
                const std::uint64_t p = mulmod(a[static_cast<std::size_t>(i)],
                                               b[static_cast<std::size_t>(n - i)], m);
                acc = static_cast<std::uint64_t>((static_cast<u128>(acc) + p) % m);
            }
            out[static_cast<std::size_t>(n)] = acc;
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Ring

Ring Ring::mod(std::uint64_t modulus) {
    if (modulus < 2)
        throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(modulus));
    return Ring(RingKind::Mod, modulus);
}

std::uint64_t Ring::modulus() const {
    if (kind_ != RingKind::Mod)
        throw std::logic_error("exact ring has no modulus");
    return modulus_;
}

std::string Ring::describe() const {
    return kind_ == RingKind::Exact ? "Z" : "Z/" + std::to_string(modulus_);
}

// ---------------------------------------------------------------------------
// Series construction and access

Series::Series(Ring ring, std::vector<mpz_class> coeffs)
    : ring_(ring), order_(0) {
    if (coeffs.empty())
        throw std::invalid_argument("a series needs at least the constant coefficient");
    order_ = static_cast<long>(coeffs.size()) - 1;
    if (ring_.is_exact()) {
        exact_ = std::move(coeffs);
    } else {
        const std::uint64_t m = ring_.modulus();
        residues_.reserve(coeffs.size());
        for (const mpz_class& c : coeffs) residues_.push_back(reduce_value(c, m));
    }
}

Series Series::from_residues(Ring ring, std::vector<std::uint64_t> residues) {
    if (ring.is_exact())
        throw std::logic_error("from_residues requires a Mod ring");
    if (residues.empty())
        throw std::invalid_argument("a series needs at least the constant coefficient");
    const std::uint64_t m = ring.modulus();
    for (std::uint64_t r : residues)
        if (r >= m) throw std::invalid_argument("residue " + std::to_string(r) +
                                                " is not canonical mod " + std::to_string(m));
    const long order = static_cast<long>(residues.size()) - 1;
    return Series(ring, {}, std::move(residues), order);
}

Series Series::zero(Ring ring, long order) {
    check_order_nonneg(order);
    if (ring.is_exact())
        return Series(ring, std::vector<mpz_class>(static_cast<std::size_t>(order) + 1),
                      {}, order);
    return Series(ring, {}, std::vector<std::uint64_t>(static_cast<std::size_t>(order) + 1, 0),
                  order);
}

Series Series::one(Ring ring, long order) {
    return constant(ring, order, 1);
}

Series Series::constant(Ring ring, long order, const mpz_class& value) {
    check_order_nonneg(order);
    Series s = zero(ring, order);
    if (ring.is_exact())
        s.exact_[0] = value;
    else
        s.residues_[0] = reduce_value(value, ring.modulus());
    return s;
}

mpz_class Series::at(long n) const {
    if (n < 0 || n > order_)
        throw std::out_of_range("coefficient of q^" + std::to_string(n) +
                                " requested, but series is truncated at order " +
                                std::to_string(order_));
    if (ring_.is_exact()) return exact_[static_cast<std::size_t>(n)];
    return mpz_class(static_cast<unsigned long>(residues_[static_cast<std::size_t>(n)]));
}

bool Series::operator==(const Series& other) const {
    if (ring_ != other.ring_ || order_ != other.order_) return false;
    return ring_.is_exact() ? exact_ == other.exact_ : residues_ == other.residues_;
}

const std::vector<mpz_class>& Series::exact_coeffs() const {
    if (!ring_.is_exact()) throw std::logic_error("exact_coeffs on a Mod-ring series");
    return exact_;
}

const std::vector<std::uint64_t>& Series::residue_coeffs() const {
    if (ring_.is_exact()) throw std::logic_error("residue_coeffs on an exact-ring series");
    return residues_;
}

// ---------------------------------------------------------------------------
// Arithmetic

Series linear_combine(const mpz_class& a, const Series& S,
                      const mpz_class& b, const Series& T) {
    if (S.ring() != T.ring()) throw_ring_mismatch(S.ring(), T.ring());
    const long order = std::min(S.order(), T.order());
    if (S.ring().is_exact()) {
        const auto& s = S.exact_coeffs();
        const auto& t = T.exact_coeffs();
        std::vector<mpz_class> out(static_cast<std::size_t>(order) + 1);
        for (long n = 0; n <= order; ++n) {
            mpz_class& o = out[static_cast<std::size_t>(n)];
            o = a * s[static_cast<std::size_t>(n)];
            mpz_addmul(o.get_mpz_t(), b.get_mpz_t(), t[static_cast<std::size_t>(n)].get_mpz_t());
        }
        return Series(S.ring(), std::move(out));
    }
    const std::uint64_t m = S.ring().modulus();
    const std::uint64_t ra = reduce_value(a, m);
    const std::uint64_t rb = reduce_value(b, m);
    const auto& s = S.residue_coeffs();
    const auto& t = T.residue_coeffs();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
        const u128 v = static_cast<u128>(mulmod(ra, s[static_cast<std::size_t>(n)], m)) +
                       mulmod(rb, t[static_cast<std::size_t>(n)], m);
        out[static_cast<std::size_t>(n)] = static_cast<std::uint64_t>(v % m);
    }
    return Series::from_residues(S.ring(), std::move(out));
}

Series multiply(const Series& S, const Series& T) {
    if (S.ring() != T.ring()) throw_ring_mismatch(S.ring(), T.ring());
    const long order = std::min(S.order(), T.order());
    if (S.ring().is_exact())
        return Series(S.ring(), conv_exact(S.exact_coeffs(), T.exact_coeffs(), order));
    return Series::from_residues(
        S.ring(), conv_mod(S.residue_coeffs(), T.residue_coeffs(), order, S.ring().modulus()));
}

Series invert(const Series& S) {
    const long order = S.order();
    if (S.ring().is_exact()) {
        const auto& s = S.exact_coeffs();
        const mpz_class& s0 = s[0];
        if (s0 != 1 && s0 != -1)
            throw std::domain_error("constant term " + s0.get_str() +
                                    " is not a unit in " + S.ring().describe());
        const bool plus = (s0 == 1);
        std::vector<long> nz; // nonzero indices of s, skipping the constant
        for (long i = 1; i <= order; ++i)
            if (mpz_sgn(s[static_cast<std::size_t>(i)].get_mpz_t()) != 0) nz.push_back(i);
        std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
        c[0] = s0;
        mpz_class acc;
        for (long n = 1; n <= order; ++n) {
            acc = 0;
            for (long i : nz) {
                if (i > n) break;
                mpz_addmul(acc.get_mpz_t(), s[static_cast<std::size_t>(i)].get_mpz_t(),
                           c[static_cast<std::size_t>(n - i)].get_mpz_t());
            }
            // s0 * c[n] + acc = 0, and s0 is its own inverse here.
            c[static_cast<std::size_t>(n)] = plus ? mpz_class(-acc) : acc;
        }
        return Series(S.ring(), std::move(c));
    }

    const std::uint64_t m = S.ring().modulus();
    const auto& s = S.residue_coeffs();
    const auto inv0 = detail::try_mod_inverse(s[0], m);
    if (!inv0)
        throw std::domain_error("constant term " + std::to_string(s[0]) +
                                " is not a unit in " + S.ring().describe());
    const std::vector<long> nz = [&] {
        std::vector<long> v;
        for (long i = 1; i <= order; ++i)
            if (s[static_cast<std::size_t>(i)] != 0) v.push_back(i);
        return v;
    }();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = *inv0;
    const bool fits = m <= (std::uint64_t{1} << 32);
    for (long n = 1; n <= order; ++n) {
        std::uint64_t red;
        if (fits) {
            u128 acc = 0;
            for (long i : nz) {
                if (i > n) break;
                acc += static_cast<u128>(s[static_cast<std::size_t>(i)]) *
                       c[static_cast<std::size_t>(n - i)];
            }
            red = static_cast<std::uint64_t>(acc % m);
        } else {
            std::uint64_t acc = 0;
            for (long i : nz) {
                if (i > n) break;
                const std::uint64_t p = mulmod(s[static_cast<std::size_t>(i)],
                                               c[static_cast<std::size_t>(n - i)], m);
                acc = static_cast<std::uint64_t>((static_cast<u128>(acc) + p) % m);
            }
            red = acc;
        }
        c[static_cast<std::size_t>(n)] = red == 0 ? 0 : mulmod(*inv0, m - red, m);
    }
    return Series::from_residues(S.ring(), std::move(c));
}

Series pow_int(const Series& S, long e) {
    if (e < 0) {
        if (e == std::numeric_limits<long>::min())
            throw std::invalid_argument("exponent out of range");
        return pow_int(invert(S), -e);
    }
    Series acc = Series::one(S.ring(), S.order());
    Series base = S;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return acc;
}

Series substitute_power(const Series& S, long k) {
    if (k < 1)
        throw std::invalid_argument("substitution power must be >= 1, got " + std::to_string(k));
    const long order = S.order();
    if (S.ring().is_exact()) {
        const auto& s = S.exact_coeffs();
        std::vector<mpz_class> out(static_cast<std::size_t>(order) + 1);
        for (long n = 0; k * n <= order; ++n)
            out[static_cast<std::size_t>(k * n)] = s[static_cast<std::size_t>(n)];
        return Series(S.ring(), std::move(out));
    }
    const auto& s = S.residue_coeffs();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(order) + 1, 0);
    for (long n = 0; k * n <= order; ++n)
        out[static_cast<std::size_t>(k * n)] = s[static_cast<std::size_t>(n)];
    return Series::from_residues(S.ring(), std::move(out));
}

Series extract_progression(const Series& S, long step, long offset) {
    if (step < 1)
        throw std::invalid_argument("progression step must be >= 1, got " + std::to_string(step));
    if (offset < 0 || offset >= step)
        throw std::invalid_argument("progression offset must satisfy 0 <= offset < step, got offset " +
                                    std::to_string(offset) + " with step " + std::to_string(step));
    if (offset > S.order())
        throw std::invalid_argument("progression offset " + std::to_string(offset) +
                                    " exceeds series order " + std::to_string(S.order()));
    const long out_order = (S.order() - offset) / step;
    if (S.ring().is_exact()) {
        const auto& s = S.exact_coeffs();
        std::vector<mpz_class> out(static_cast<std::size_t>(out_order) + 1);
        for (long n = 0; n <= out_order; ++n)
            out[static_cast<std::size_t>(n)] = s[static_cast<std::size_t>(step * n + offset)];
        return Series(S.ring(), std::move(out));
    }
    const auto& s = S.residue_coeffs();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(out_order) + 1);
    for (long n = 0; n <= out_order; ++n)
        out[static_cast<std::size_t>(n)] = s[static_cast<std::size_t>(step * n + offset)];
    return Series::from_residues(S.ring(), std::move(out));
}

Series reduce_mod(const Series& S, std::uint64_t m) {
    if (!S.ring().is_exact())
        throw std::invalid_argument("reduce_mod expects an exact-ring series, got " +
                                    S.ring().describe());
    const Ring ring = Ring::mod(m);
    const auto& s = S.exact_coeffs();
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (const mpz_class& c : s) out.push_back(reduce_value(c, m));
    return Series::from_residues(ring, std::move(out));
}

} // namespace qcong
