#pragma once

// Combinatorial ground truth for a_c(n), the number of partitions of n in
// which each even part comes in one of c colors (odd parts uncolored).
// Two deliberately different routes:
//   - a bounded-part dynamic program (the workhorse), and
//   - exhaustive multiset enumeration (small n only, the sanity anchor).
// Neither touches the series engine; the congruence lab cross-checks its
// series coefficients against these counts.

#include <vector>

#include <gmpxx.h>

namespace qcong {

// a_c(n) by dynamic programming.  n >= 0, colors >= 1.
mpz_class count_colored_partitions(long n, long colors);

// The full table a_c(0..n_max) in one DP sweep (cheaper than n_max+1
// independent calls).
std::vector<mpz_class> colored_partition_table(long n_max, long colors);

// One colored part: a size and, for even sizes, a color in [0, colors);
// odd sizes always carry color 0.
struct ColoredPart {
    long size;
    long color;
    bool operator==(const ColoredPart&) const = default;
};

// a_c(n) by brute-force enumeration of all colored-part multisets.
// Guarded to n <= 20 (the count of raw multisets explodes).  When `listing`
// is non-null the multisets themselves are appended, each sorted descending
// by (size, color), the whole listing in lexicographically descending order.
mpz_class enumerate_colored_partitions(long n, long colors,
                                       std::vector<std::vector<ColoredPart>>* listing = nullptr);

} // namespace qcong
