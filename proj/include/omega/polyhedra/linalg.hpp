#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "../rational.hpp"

namespace omega {

using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form of a rational matrix.
struct RowEchelon {
    RationalMatrix rows;               ///< nonzero rows only, one per pivot
    std::vector<std::size_t> pivots;   ///< pivot column of each row, increasing
    std::size_t cols = 0;

    std::size_t rank() const noexcept { return pivots.size(); }
};

inline RowEchelon row_echelon(RationalMatrix m, std::size_t cols)
{
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("row_echelon: ragged matrix");

    RowEchelon out;
    out.cols = cols;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
        std::size_t pivot = top;
        while (pivot < m.size() && m[pivot][c].is_zero())
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[top], m[pivot]);
        const Rational inv = 1 / m[top][c];
        for (auto& x : m[top])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == top || m[r][c].is_zero())
                continue;
            const Rational factor = m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[top][k].is_zero())
                    m[r][k] -= factor * m[top][k];
        }
        out.pivots.push_back(c);
        ++top;
    }
    m.resize(top);
    out.rows = std::move(m);
    return out;
}

inline std::size_t matrix_rank(RationalMatrix m, std::size_t cols)
{
    return row_echelon(std::move(m), cols).rank();
}

/// Basis of {x : M x = 0}, one vector per free column, in column order.
inline RationalMatrix null_space(const RowEchelon& e)
{
    std::vector<bool> is_pivot(e.cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t f = 0; f < e.cols; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(e.cols, Rational(0));
        v[f] = 1;
        for (std::size_t t = 0; t < e.pivots.size(); ++t)
            v[e.pivots[t]] = -e.rows[t][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square nonsingular matrix (Gauss-Jordan).
inline RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n)
            throw std::invalid_argument("inverse: matrix is not square");
        for (std::size_t c = 0; c < n; ++c)
            aug[r][c] = m[r][c];
        aug[r][n + r] = 1;
    }
    auto e = row_echelon(std::move(aug), 2 * n);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        throw std::invalid_argument("inverse: matrix is singular");
    RationalMatrix out(n, RationalVector(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r][c] = e.rows[r][n + c];
    return out;
}

} // namespace omega
