#include "qcong/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcong {

namespace {

void check_args(long n, long colors) {
    if (n < 0)
        throw std::invalid_argument("partition argument must be >= 0, got " + std::to_string(n));
    if (colors < 1)
        throw std::invalid_argument("colors must be >= 1, got " + std::to_string(colors));
}

// Recursion for the enumerator: extend the current multiset with parts
// (size, color) <= bound in the (size, color) lexicographic order, sizes
// and colors descending.  Completed multisets are already sorted descending.
void enumerate_rec(long remaining, long colors, ColoredPart bound,
                   std::vector<ColoredPart>& current,
                   std::vector<std::vector<ColoredPart>>* listing,
                   mpz_class& count) {
    if (remaining == 0) {
        ++count;
        if (listing) listing->push_back(current);
        return;
    }
    for (long size = std::min(remaining, bound.size); size >= 1; --size) {
        const long top_color = (size % 2 == 0) ? colors - 1 : 0;
        long start_color = top_color;
        if (size == bound.size) start_color = std::min(start_color, bound.color);
        for (long color = start_color; color >= 0; --color) {
            current.push_back({size, color});
            enumerate_rec(remaining - size, colors, {size, color}, current, listing, count);
            current.pop_back();
        }
    }
}

} // namespace

std::vector<mpz_class> colored_partition_table(long n_max, long colors) {
    check_args(n_max, colors);
    // Coin-style DP: one unbounded pass per part kind, sizes ascending,
    // even sizes contributing `colors` identical passes.
    std::vector<mpz_class> table(static_cast<std::size_t>(n_max) + 1);
    table[0] = 1;
    for (long size = 1; size <= n_max; ++size) {
        const long passes = (size % 2 == 0) ? colors : 1;
        for (long k = 0; k < passes; ++k)
            for (long v = size; v <= n_max; ++v)
                table[static_cast<std::size_t>(v)] += table[static_cast<std::size_t>(v - size)];
    }
    return table;
}

mpz_class count_colored_partitions(long n, long colors) {
    return colored_partition_table(n, colors).back();
}

mpz_class enumerate_colored_partitions(long n, long colors,
                                       std::vector<std::vector<ColoredPart>>* listing) {
    check_args(n, colors);
    if (n > 20)
        throw std::invalid_argument("enumeration is guarded to n <= 20, got n = " +
                                    std::to_string(n));
    mpz_class count = 0;
    std::vector<ColoredPart> current;
    enumerate_rec(n, colors, {n == 0 ? 1 : n, colors - 1}, current, listing, count);
    return count;
}

} // namespace qcong
