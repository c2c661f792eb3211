#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace sombor {

// Ryser's formula with Gray-code subset stepping:
//   per(A) = (-1)^n * sum over nonempty column subsets S of
//            (-1)^{|S|} * prod_i rowsum_i(S)
// Each Gray step toggles one column, so row sums update in O(n). Row sums of
// a 0/1 matrix stay within int64; the product needs arbitrary precision.
inline mpz_class ryser_permanent(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    if (n > 30)
        throw std::invalid_argument("ryser_permanent: n = " + std::to_string(n) +
                                    " exceeds the n <= 30 cost cap (2^n terms)");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("ryser_permanent: matrix must be square");
    if (n == 0) return 1; // empty product convention

    std::vector<std::int64_t> rowsum(n, 0);
    mpz_class total = 0;
    std::uint32_t prev_gray = 0;
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t s = 1; s < count; ++s) {
        std::uint32_t gray = static_cast<std::uint32_t>(s ^ (s >> 1));
        std::uint32_t diff = gray ^ prev_gray;
        int j = 0;
        while (!((diff >> j) & 1)) ++j;
        if (gray & diff) {
            for (int i = 0; i < n; ++i) rowsum[i] += a[i][j];
        } else {
            for (int i = 0; i < n; ++i) rowsum[i] -= a[i][j];
        }
        prev_gray = gray;

        mpz_class prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        int bits = __builtin_popcount(gray);
        if (bits & 1)
            total -= prod;
        else
            total += prod;
    }
    if (n & 1) total = -total;
    return total;
}

inline mpz_class ryser_permanent(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return ryser_permanent(a);
}

} // namespace sombor
