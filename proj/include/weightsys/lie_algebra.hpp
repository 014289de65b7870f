#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "weightsys/error.hpp"
#include "weightsys/scalar.hpp"
#include "weightsys/tensor.hpp"

namespace weightsys {

/**
 * A Lie algebra on an arbitrary basis u_1..u_n together with a symmetric
 * bilinear form. bracket(i,j,k) is the coefficient of u_k in [u_i,u_j];
 * gram(i,j) = <u_i,u_j>.
 */
class MetricLieAlgebra {
public:
    MetricLieAlgebra(int dim, std::vector<Complex> bracket, std::vector<Complex> gram)
        : dim_(dim), bracket_(std::move(bracket)), gram_(std::move(gram)) {
        const auto n = static_cast<std::size_t>(dim);
        if (dim < 0 || bracket_.size() != n * n * n || gram_.size() != n * n)
            throw Error(ErrorKind::InvalidAlgebra, "bracket or gram has the wrong size");
    }

    int dim() const noexcept { return dim_; }
    const Complex& bracket(int i, int j, int k) const { return bracket_[(i * dim_ + j) * dim_ + k]; }
    const Complex& gram(int i, int j) const { return gram_[i * dim_ + j]; }

    MetricLieAlgebra with_gram(std::vector<Complex> gram) const { return {dim_, bracket_, std::move(gram)}; }

    /// K(u_i,u_j) = tr(ad u_i ad u_j).
    std::vector<Complex> killing_form() const {
        const int n = dim_;
        std::vector<Complex> k(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex s = 0.0;
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) s += bracket(i, q, r) * bracket(j, r, q);
                k[i * n + j] = s;
            }
        return k;
    }

    double bracket_antisymmetry_residual() const {
        double worst = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) worst = std::max(worst, std::abs(bracket(i, j, k) + bracket(j, i, k)));
        return worst;
    }

    /// [[u_i,u_j],u_k] + [[u_j,u_k],u_i] + [[u_k,u_i],u_j] = 0.
    double jacobi_residual() const {
        const int n = dim_;
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int m = 0; m < n; ++m) {
                        Complex s = 0.0;
                        for (int a = 0; a < n; ++a)
                            s += bracket(i, j, a) * bracket(a, k, m) + bracket(j, k, a) * bracket(a, i, m) +
                                 bracket(k, i, a) * bracket(a, j, m);
                        worst = std::max(worst, std::abs(s));
                    }
        return worst;
    }

    /// <[x,y],z> = <x,[y,z]> on basis triples.
    double ad_invariance_residual() const {
        const int n = dim_;
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Complex lhs = 0.0, rhs = 0.0;
                    for (int r = 0; r < n; ++r) {
                        lhs += bracket(i, j, r) * gram(r, k);
                        rhs += gram(i, r) * bracket(j, k, r);
                    }
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
        return worst;
    }

    double gram_symmetry_residual() const {
        double worst = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) worst = std::max(worst, std::abs(gram(i, j) - gram(j, i)));
        return worst;
    }

    double scale() const {
        double s = 1.0;
        for (const auto& v : bracket_) s = std::max(s, std::abs(v));
        for (const auto& v : gram_) s = std::max(s, std::abs(v));
        return s;
    }

private:
    int dim_;
    std::vector<Complex> bracket_;
    std::vector<Complex> gram_;
};

struct OrthonormalizeOptions {
    double tolerance = 1e-9;
    int max_retries = 8;
    std::uint64_t seed = 0x5eed;
};

namespace detail {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

inline CMatrix gram_matrix(const MetricLieAlgebra& g) {
    const int n = g.dim();
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g.gram(i, j);
    return m;
}

/**
 * Bilinear (non-conjugated) Gram-Schmidt on the columns of `basis`. Picks the
 * least isotropic remaining vector as pivot; if every remaining vector is
 * isotropic, replaces one by its sum with the partner of largest pairing.
 * Returns false if no usable pivot exists.
 */
inline bool gram_schmidt(const CMatrix& form, CMatrix& basis, double tol) {
    const int n = static_cast<int>(basis.cols());
    auto pair = [&](int a, int b) -> Complex { return (basis.col(a).transpose() * form * basis.col(b))(0, 0); };
    for (int i = 0; i < n; ++i) {
        int best = -1;
        double best_norm = tol;
        for (int j = i; j < n; ++j) {
            double v = std::abs(pair(j, j));
            if (v > best_norm) {
                best_norm = v;
                best = j;
            }
        }
        if (best < 0) {
            int bj = -1, bl = -1;
            double bv = tol;
            for (int j = i; j < n; ++j)
                for (int l = j + 1; l < n; ++l) {
                    double v = std::abs(pair(j, l));
                    if (v > bv) {
                        bv = v;
                        bj = j;
                        bl = l;
                    }
                }
            if (bj < 0) return false;
            basis.col(bj) += basis.col(bl);
            best = bj;
        }
        basis.col(i).swap(basis.col(best));
        basis.col(i) /= std::sqrt(pair(i, i));
        for (int l = i + 1; l < n; ++l) basis.col(l) -= pair(l, i) * basis.col(i);
    }
    return true;
}

}  // namespace detail

/**
 * Structure tensor c_ijk = <[b_i,b_j],b_k> for an orthonormal basis b of g.
 * Square roots use the principal branch. On failure the starting basis is
 * replaced by a seeded random change of basis and the procedure retried.
 */
inline ComplexTensor orthonormalize(const MetricLieAlgebra& g, const OrthonormalizeOptions& opt = {}) {
    const int n = g.dim();
    const double scale = g.scale();
    const auto form = detail::gram_matrix(g);
    if (g.gram_symmetry_residual() > opt.tolerance * scale)
        throw Error(ErrorKind::InvalidAlgebra, "gram matrix is not symmetric");
    if (n > 0) {
        const double det = std::abs(form.fullPivLu().determinant());
        if (det <= 1e-12 * std::pow(form.cwiseAbs().maxCoeff(), n))
            throw Error(ErrorKind::DegenerateForm, "determinant " + format_double(det));
    }

    // D[p][q][s] = <[u_p,u_q],u_s>
    std::vector<Complex> d(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s) {
                Complex acc = 0.0;
                for (int r = 0; r < n; ++r) acc += g.bracket(p, q, r) * g.gram(r, s);
                d[(p * n + q) * n + s] = acc;
            }

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
        detail::CMatrix basis = detail::CMatrix::Identity(n, n);
        if (attempt > 0)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) basis(i, j) += Complex(unit(rng), unit(rng)) * 0.5;
        if (!detail::gram_schmidt(form, basis, opt.tolerance * scale)) continue;

        // Change each index of D to the new basis, one index at a time.
        std::vector<Complex> t1(d.size(), 0.0), t2(d.size(), 0.0);
        auto at = [n](std::vector<Complex>& v, int a, int b, int c) -> Complex& { return v[(a * n + b) * n + c]; };
        for (int i = 0; i < n; ++i)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int s = 0; s < n; ++s) at(t1, i, q, s) += basis(p, i) * at(d, p, q, s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int q = 0; q < n; ++q)
                    for (int s = 0; s < n; ++s) at(t2, i, j, s) += basis(q, j) * at(t1, i, q, s);
        ComplexTensor c(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Complex acc = 0.0;
                    for (int s = 0; s < n; ++s) acc += basis(s, k) * at(t2, i, j, s);
                    c(i, j, k) = acc;
                }

        const double cscale = std::max(1.0, max_entry(c));
        const double tol = opt.tolerance * cscale * cscale;
        if (antisymmetry_check(c) <= opt.tolerance * cscale && jacobi_check(c) <= tol) {
            c.set_lie(true);
            return c;
        }
    }
    throw Error(ErrorKind::OrthonormalizationFailed, "retries exhausted");
}

}  // namespace weightsys
