#pragma once

#include <Eigen/SVD>
#include <gmpxx.h>

#include <span>
#include <vector>

#include "weightsys/scalar.hpp"

namespace weightsys {

/**
 * Rank of a rows x cols rational matrix (row-major) by fraction-free
 * (Bareiss) elimination. Rows are first scaled to integers; every
 * intermediate entry is then a minor of the integer matrix, so the division
 * by the previous pivot is exact.
 */
inline std::size_t rank_exact(std::span<const Rational> entries, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) l = lcm(l, mpz_class(entries[i * cols + j].get_den()));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& q = entries[i * cols + j];
            m[i][j] = q.get_num() * (l / q.get_den());
        }
    }

    std::size_t rank = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const mpz_class& p = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class v = p * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][col] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

/// Numerical rank: number of singular values above `relative_tol` * sigma_max.
/// Values at or below `absolute_floor` never count, so a matrix of pure
/// rounding noise has rank 0 instead of a spurious full rank.
inline std::size_t rank_numeric(std::span<const Complex> entries, std::size_t rows, std::size_t cols,
                                double relative_tol = 1e-8, double absolute_floor = 1e-12) {
    if (rows == 0 || cols == 0) return 0;
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[i * cols + j];
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) <= absolute_floor) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > relative_tol * s(0)) ++r;
    return r;
}

inline std::size_t matrix_rank(std::span<const Rational> entries, std::size_t rows, std::size_t cols) {
    return rank_exact(entries, rows, cols);
}

inline std::size_t matrix_rank(std::span<const Complex> entries, std::size_t rows, std::size_t cols) {
    return rank_numeric(entries, rows, cols);
}

}  // namespace weightsys
