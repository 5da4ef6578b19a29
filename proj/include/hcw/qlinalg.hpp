#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace hcw {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major, possibly ragged-checked by callers

inline QMat qmat(size_t rows, size_t cols) { return QMat(rows, QVec(cols, Rat(0))); }

inline QMat qmat_identity(size_t n) {
    QMat m = qmat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    QMat r = qmat(n, p);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t qrank(QMat m) { return rref(m).size(); }

// One solution of A x = b, if any.
inline std::optional<QVec> solve(const QMat& A, const QVec& b) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    QMat aug = qmat(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    for (size_t p : piv)
        if (p == cols) return std::nullopt;  // inconsistent
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
    return x;
}

// Basis of the nullspace of A.
inline std::vector<QVec> nullspace(QMat A) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    auto piv = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : piv) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = Rat(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<QMat> qmat_inverse(const QMat& A) {
    size_t n = A.size();
    QMat aug = qmat(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = Rat(1);
    }
    auto piv = rref(aug);
    if (piv.size() != n) return std::nullopt;
    QMat r = qmat(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

}  // namespace hcw
