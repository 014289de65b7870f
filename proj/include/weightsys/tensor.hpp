#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "weightsys/error.hpp"
#include "weightsys/scalar.hpp"

namespace weightsys {

/// Dense n x n x n tensor c[i][j][k] in one scalar backend.
template <Scalar T>
class StructureTensor {
public:
    using value_type = T;

    StructureTensor() = default;
    explicit StructureTensor(int dim, bool lie = false)
        : dim_(dim), lie_(lie), entries_(static_cast<std::size_t>(dim) * dim * dim, scalar_zero<T>()) {
        if (dim < 0) throw Error(ErrorKind::BadIndex, "negative dimension");
    }

    int dim() const noexcept { return dim_; }
    bool is_lie() const noexcept { return lie_; }
    void set_lie(bool lie) noexcept { lie_ = lie; }

    const T& operator()(int i, int j, int k) const { return entries_[index(i, j, k)]; }
    T& operator()(int i, int j, int k) { return entries_[index(i, j, k)]; }

    /// Sets c_{ijk} and its two cyclic rotations.
    void set_cyclic(int i, int j, int k, const T& v) {
        (*this)(i, j, k) = v;
        (*this)(j, k, i) = v;
        (*this)(k, i, j) = v;
    }

    /// Sets all six permutations of (i,j,k) with the permutation sign.
    void set_antisymmetric(int i, int j, int k, const T& v) {
        set_cyclic(i, j, k, v);
        T neg = -v;
        set_cyclic(j, i, k, neg);
    }

    std::span<const T> entries() const& noexcept { return entries_; }
    std::span<T> entries() & noexcept { return entries_; }
    std::span<T> entries() && = delete;

    bool operator==(const StructureTensor&) const = default;

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }

    int dim_ = 0;
    bool lie_ = false;
    std::vector<T> entries_;
};

using RationalTensor = StructureTensor<Rational>;
using ComplexTensor = StructureTensor<Complex>;
using AnyTensor = std::variant<RationalTensor, ComplexTensor>;

inline int dim(const AnyTensor& t) {
    return std::visit([](const auto& c) { return c.dim(); }, t);
}

inline std::string backend_name(const AnyTensor& t) {
    return t.index() == 0 ? "rational" : "complex";
}

inline ComplexTensor to_complex(const RationalTensor& c) {
    ComplexTensor out(c.dim(), c.is_lie());
    auto src = c.entries();
    auto dst = out.entries();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = to_complex(src[i]);
    return out;
}

inline ComplexTensor to_complex(const AnyTensor& t) {
    if (const auto* r = std::get_if<RationalTensor>(&t)) return to_complex(*r);
    return std::get<ComplexTensor>(t);
}

// ---------------------------------------------------------------------------
// Residual checks. Each returns the maximum absolute residual over all index
// tuples; exact backends return an exact rational.

template <Scalar T>
magnitude_t<T> cyclic_check(const StructureTensor<T>& c) {
    using Tr = ScalarTraits<T>;
    magnitude_t<T> worst = Tr::magnitude(scalar_zero<T>());
    const int n = c.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                T d = c(i, j, k) - c(j, k, i);
                worst = std::max(worst, Tr::magnitude(d));
            }
    return worst;
}

/// max |c_ijk + c_jik|, |c_ijk + c_ikj|, |c_ijk + c_kji|.
template <Scalar T>
magnitude_t<T> antisymmetry_check(const StructureTensor<T>& c) {
    using Tr = ScalarTraits<T>;
    magnitude_t<T> worst = Tr::magnitude(scalar_zero<T>());
    const int n = c.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                T a = c(i, j, k) + c(j, i, k);
                T b = c(i, j, k) + c(i, k, j);
                T d = c(i, j, k) + c(k, j, i);
                worst = std::max({worst, Tr::magnitude(a), Tr::magnitude(b), Tr::magnitude(d)});
            }
    return worst;
}

/// Residual of sum_a x_{ija} x_{akl} + x_{kia} x_{ajl} + x_{jka} x_{ail} over all i,j,k,l.
template <Scalar T>
magnitude_t<T> jacobi_check(const StructureTensor<T>& x) {
    using Tr = ScalarTraits<T>;
    magnitude_t<T> worst = Tr::magnitude(scalar_zero<T>());
    const int n = x.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    // Three separate sums, added in this order.
                    T t1 = scalar_zero<T>(), t2 = scalar_zero<T>(), t3 = scalar_zero<T>();
                    for (int a = 0; a < n; ++a) t1 += x(i, j, a) * x(a, k, l);
                    for (int a = 0; a < n; ++a) t2 += x(k, i, a) * x(a, j, l);
                    for (int a = 0; a < n; ++a) t3 += x(j, k, a) * x(a, i, l);
                    T s = t1 + t2;
                    s += t3;
                    worst = std::max(worst, Tr::magnitude(s));
                }
    return worst;
}

/// Largest entry magnitude.
template <Scalar T>
magnitude_t<T> max_entry(const StructureTensor<T>& c) {
    using Tr = ScalarTraits<T>;
    magnitude_t<T> worst = Tr::magnitude(scalar_zero<T>());
    for (const auto& v : c.entries()) worst = std::max(worst, Tr::magnitude(v));
    return worst;
}

/// Block-diagonal tensor on [n1] followed by [n2].
template <Scalar T>
StructureTensor<T> direct_sum(const StructureTensor<T>& a, const StructureTensor<T>& b) {
    const int n1 = a.dim(), n2 = b.dim();
    StructureTensor<T> out(n1 + n2, a.is_lie() && b.is_lie());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k) out(i, j, k) = a(i, j, k);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n2; ++k) out(n1 + i, n1 + j, n1 + k) = b(i, j, k);
    return out;
}

inline AnyTensor direct_sum(const AnyTensor& a, const AnyTensor& b) {
    if (a.index() != b.index())
        throw Error(ErrorKind::BackendMismatch, backend_name(a) + " vs " + backend_name(b));
    if (a.index() == 0) return direct_sum(std::get<0>(a), std::get<0>(b));
    return direct_sum(std::get<1>(a), std::get<1>(b));
}

/// Entrywise mu * c. Rescaling the metric by lambda corresponds to mu = lambda^(-1/2).
template <Scalar T>
StructureTensor<T> scale_tensor(const StructureTensor<T>& c, const T& mu) {
    StructureTensor<T> out = c;
    for (auto& v : out.entries()) v *= mu;
    return out;
}

}  // namespace weightsys
