#pragma once

#include <vector>

#include "susp/polynomial.hpp"

namespace susp {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
inline std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            const Rational factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Determinant of a square polynomial matrix by cofactor expansion along
/// the first row. Intended for the small minors of Jacobian matrices.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const Context& ctx) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ctx, Rational(1));
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det(ctx);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        const Polynomial term = m[0][col] * determinant(sub, ctx);
        det = col % 2 == 0 ? det + term : det - term;
    }
    return det;
}

/// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace susp
