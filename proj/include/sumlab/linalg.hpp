#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/point.hpp"
#include "sumlab/rational.hpp"

// Exact Gaussian elimination over Q.

namespace sumlab::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

inline Matrix identity(std::size_t n) {
    Matrix m(n, Row(n));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

/// Reduces m in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[r], m[piv]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

inline std::size_t rank(const std::vector<Point>& vectors) {
    Matrix m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) {
        m.emplace_back(v.coords().begin(), v.coords().end());
    }
    return rank(std::move(m));
}

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
inline std::vector<Row> null_space(Matrix m, std::size_t cols) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<Row> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Row v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix aug(n, Row(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            throw DimensionError("inverse: matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = m[i][j];
        }
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n) {
        return std::nullopt;
    }
    Matrix inv(n, Row(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv[i][j] = aug[i][n + j];
        }
    }
    return inv;
}

inline Point multiply(const Matrix& m, const Point& p) {
    std::vector<Rational> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != p.dim()) {
            throw DimensionError("matrix-vector dimensions differ");
        }
        for (std::size_t j = 0; j < p.dim(); ++j) {
            out[i] += m[i][j] * p[j];
        }
    }
    return Point(std::move(out));
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    Matrix out(n, Row(cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return out;
}

}  // namespace sumlab::linalg
