#pragma once

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "weightsys/error.hpp"
#include "weightsys/lie_algebra.hpp"
#include "weightsys/tensor.hpp"

namespace weightsys {

namespace detail {

/// Bracket constants of a matrix Lie algebra (commutator) with trace form tr(XY).
inline MetricLieAlgebra matrix_algebra(const std::vector<Eigen::MatrixXd>& basis) {
    const int d = static_cast<int>(basis.size());
    const auto m = d == 0 ? 0 : basis[0].rows();
    Eigen::MatrixXd coords(m * m, d);
    for (int i = 0; i < d; ++i) coords.col(i) = basis[i].reshaped();
    auto solver = coords.colPivHouseholderQr();

    std::vector<Complex> bracket(static_cast<std::size_t>(d) * d * d), gram(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::MatrixXd z = basis[i] * basis[j] - basis[j] * basis[i];
            Eigen::VectorXd a = solver.solve(Eigen::VectorXd(z.reshaped()));
            for (int k = 0; k < d; ++k) bracket[(i * d + j) * d + k] = std::round(a(k) * 1e12) / 1e12;
            gram[i * d + j] = (basis[i] * basis[j]).trace();
        }
    return {d, std::move(bracket), std::move(gram)};
}

inline Eigen::MatrixXd unit_matrix(int n, int a, int b) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    e(a, b) = 1.0;
    return e;
}

}  // namespace detail

/// sl(n) on the basis E_ab (a != b, row-major) then H_a = E_aa - E_{a+1,a+1}, with trace form.
inline MetricLieAlgebra sl_n_algebra(int n) {
    std::vector<Eigen::MatrixXd> basis;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) basis.push_back(detail::unit_matrix(n, a, b));
    for (int a = 0; a + 1 < n; ++a) basis.push_back(detail::unit_matrix(n, a, a) - detail::unit_matrix(n, a + 1, a + 1));
    return detail::matrix_algebra(basis);
}

/// gl(n) on the basis E_ab (row-major), with trace form.
inline MetricLieAlgebra gl_n_algebra(int n) {
    std::vector<Eigen::MatrixXd> basis;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) basis.push_back(detail::unit_matrix(n, a, b));
    return detail::matrix_algebra(basis);
}

/// so(n) on the basis E_ab - E_ba (a < b), with trace form.
inline MetricLieAlgebra so_n_algebra(int n) {
    std::vector<Eigen::MatrixXd> basis;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) basis.push_back(detail::unit_matrix(n, a, b) - detail::unit_matrix(n, b, a));
    return detail::matrix_algebra(basis);
}

/// sl(2) on the basis {H, E, F}, with trace form.
inline MetricLieAlgebra sl2_algebra() {
    std::vector<Eigen::MatrixXd> basis{detail::unit_matrix(2, 0, 0) - detail::unit_matrix(2, 1, 1),
                                       detail::unit_matrix(2, 0, 1), detail::unit_matrix(2, 1, 0)};
    return detail::matrix_algebra(basis);
}

// ---------------------------------------------------------------------------
// Structure tensors

inline RationalTensor abelian(int n) { return RationalTensor(n, true); }

/// Levi-Civita symbol on three indices.
inline RationalTensor so3_eps() {
    RationalTensor c(3, true);
    c.set_antisymmetric(0, 1, 2, Rational(1));
    return c;
}

/**
 * so(n) on the basis X_ab = E_ab - E_ba (a < b) with <X,Y> = -tr(XY)/2, for
 * which the basis is orthonormal. Entries lie in {0, 1, -1}.
 */
inline RationalTensor so_n_rational(int n) {
    std::vector<std::pair<int, int>> basis;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) basis.emplace_back(a, b);
    const int d = static_cast<int>(basis.size());
    auto matrix = [n](std::pair<int, int> ab) {
        std::vector<long> m(static_cast<std::size_t>(n) * n, 0);
        m[ab.first * n + ab.second] = 1;
        m[ab.second * n + ab.first] = -1;
        return m;
    };
    auto mul = [n](const std::vector<long>& x, const std::vector<long>& y) {
        std::vector<long> z(x.size(), 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (x[i * n + k] != 0)
                    for (int j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
        return z;
    };
    auto trace_product = [n](const std::vector<long>& x, const std::vector<long>& y) {
        long t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t += x[i * n + j] * y[j * n + i];
        return t;
    };
    std::vector<std::vector<long>> mats;
    for (auto ab : basis) mats.push_back(matrix(ab));
    RationalTensor c(d, true);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto xy = mul(mats[i], mats[j]);
            auto yx = mul(mats[j], mats[i]);
            for (std::size_t e = 0; e < xy.size(); ++e) xy[e] -= yx[e];
            for (int k = 0; k < d; ++k) {
                c(i, j, k) = Rational(-trace_product(xy, mats[k]), 2);
                c(i, j, k).canonicalize();
            }
        }
    return c;
}

inline ComplexTensor sl_n_trace(int n) { return orthonormalize(sl_n_algebra(n)); }

inline ComplexTensor gl_n_trace(int n) { return orthonormalize(gl_n_algebra(n)); }

/// sl(2) with its Killing form, in closed form: lambda * epsilon with lambda^2 = -1/2.
inline ComplexTensor sl2_killing() {
    const Complex lambda(0.0, 1.0 / std::sqrt(2.0));
    ComplexTensor c(3, true);
    c.set_antisymmetric(0, 1, 2, lambda);
    return c;
}

/**
 * Generator lookup by name: `so3`, `abelian:N`, `so:N`, `sl:N`, `gl:N`,
 * `sl2-killing`.
 */
inline AnyTensor make_algebra(std::string_view name) {
    auto param = [&](std::string_view prefix) -> int {
        std::string_view rest = name.substr(prefix.size());
        int v = -1;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc() || p != rest.data() + rest.size() || v < 0)
            throw Error(ErrorKind::ParseError, "bad algebra parameter in '" + std::string(name) + "'");
        return v;
    };
    if (name == "so3") return so3_eps();
    if (name == "sl2-killing") return sl2_killing();
    if (name.starts_with("abelian:")) return abelian(param("abelian:"));
    if (name.starts_with("so:")) return so_n_rational(param("so:"));
    if (name.starts_with("sl:")) return sl_n_trace(param("sl:"));
    if (name.starts_with("gl:")) return gl_n_trace(param("gl:"));
    throw Error(ErrorKind::ParseError, "unknown algebra '" + std::string(name) + "'");
}

}  // namespace weightsys
