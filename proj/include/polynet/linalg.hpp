#pragma once

#include <vector>

#include "polynet/rational.hpp"

namespace polynet {

/// Exact rank of a rational matrix: rows are cleared to integers, then
/// reduced by Bareiss fraction-free elimination. No thresholds anywhere.
inline int exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();

    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt scale(1);
        for (const auto& x : m[r]) scale = boost::multiprecision::lcm(scale, denominator(x));
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = numerator(m[r][c]) * (scale / denominator(m[r][c]));
    }

    int rank = 0;
    BigInt prev(1);
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[static_cast<std::size_t>(rank)][col] * a[r][c] -
                           a[r][col] * a[static_cast<std::size_t>(rank)][c]) /
                          prev;
            a[r][col] = 0;
        }
        prev = a[static_cast<std::size_t>(rank)][col];
        ++rank;
    }
    return rank;
}

/// Incremental exact echelon basis: insert vectors one at a time, rank grows
/// when the vector leaves the current span. Used for pointwise saturation
/// ranks where vectors arrive one generation after another.
class RationalEchelon {
public:
    explicit RationalEchelon(std::size_t dim) : dim_(dim) {}

    /// Returns true when the vector increased the rank.
    bool insert(std::vector<Rational> v) {
        for (const auto& row : rows_) {
            const Rational lead = v[row.pivot]; // copy: the loop writes v[row.pivot]
            if (lead == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i) v[i] -= lead * row.values[i];
        }
        std::size_t pivot = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == dim_) return false;
        const Rational inv = Rational(1) / v[pivot];
        for (auto& x : v) x *= inv;
        rows_.push_back(Row{pivot, std::move(v)});
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    bool full() const { return rows_.size() == dim_; }

    /// Whether the vector already lies in the span (no state change).
    bool contains(std::vector<Rational> v) const {
        for (const auto& row : rows_) {
            const Rational lead = v[row.pivot];
            if (lead == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i) v[i] -= lead * row.values[i];
        }
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rational> values; // normalized so values[pivot] == 1
    };

    std::size_t dim_;
    std::vector<Row> rows_;
};

} // namespace polynet
