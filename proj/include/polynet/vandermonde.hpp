#pragma once

#include <vector>

#include "polynet/errors.hpp"
#include "polynet/rational.hpp"

namespace polynet {

/// Selector weights on powers of distinct nonzero values: returns r_1..r_n
/// with sum_i r_i * c_j^{i+s} == (j == k ? 1 : 0) for every j. Solved by
/// exact Gaussian elimination on the power matrix; the Vandermonde structure
/// guarantees a unique solution.
inline std::vector<Rational> vandermonde_selectors(const std::vector<Rational>& c, int s, int k) {
    const int n = static_cast<int>(c.size());
    if (n == 0) throw DegenerateInput("selector system needs at least one value");
    if (k < 1 || k > n)
        throw DegenerateInput("selector index k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (c[i] == 0) throw DegenerateInput("selector value c_" + std::to_string(i + 1) + " is zero");
        for (int j = i + 1; j < n; ++j)
            if (c[i] == c[j])
                throw DegenerateInput("selector values c_" + std::to_string(i + 1) + " and c_" +
                                      std::to_string(j + 1) + " coincide");
    }

    // Augmented system M r = e_k with M[j][i] = c_j^{i+1+s}.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (int j = 0; j < n; ++j) {
        Rational pw(1);
        for (int e = 0; e < s + 1; ++e) pw *= c[j];
        for (int i = 0; i < n; ++i) {
            m[j][i] = pw;
            pw *= c[j];
        }
        m[j][n] = (j == k - 1) ? Rational(1) : Rational(0);
    }

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) throw DegenerateInput("singular selector system"); // unreachable for valid input
        std::swap(m[col], m[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (int i = col; i <= n; ++i) m[col][i] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (int i = col; i <= n; ++i) m[row][i] -= f * m[col][i];
        }
    }

    std::vector<Rational> r(n);
    for (int i = 0; i < n; ++i) r[i] = m[i][n];
    return r;
}

} // namespace polynet
