#pragma once

#include <cstdint>
#include <random>
#include <tuple>

#include "weightsys/enumeration.hpp"
#include "weightsys/scalar.hpp"
#include "weightsys/tensor.hpp"

namespace weightsys {

namespace detail {

/// Small integers in [-bound, bound] for exact tensors, doubles in [-1, 1]^2 for complex ones.
template <Scalar T>
T random_scalar(std::mt19937_64& rng, int bound) {
    if constexpr (ScalarTraits<T>::exact) {
        const auto span = static_cast<std::uint64_t>(2 * bound + 1);
        return ScalarTraits<T>::from_int(static_cast<long>(draw_below(rng, span)) - bound);
    } else {
        auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
        const double re = unit();
        return T(re, unit());
    }
}

}  // namespace detail

/// C3-invariant tensor with independent random values on each rotation class.
template <Scalar T>
StructureTensor<T> random_cyclic_tensor(std::mt19937_64& rng, int n, int bound = 3) {
    StructureTensor<T> c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // visit each rotation class once, at its lexicographically smallest member
                if (!(std::make_tuple(i, j, k) <= std::make_tuple(j, k, i) &&
                      std::make_tuple(i, j, k) <= std::make_tuple(k, i, j)))
                    continue;
                c.set_cyclic(i, j, k, detail::random_scalar<T>(rng, bound));
            }
    return c;
}

/// Fully antisymmetric tensor with random values on i < j < k.
template <Scalar T>
StructureTensor<T> random_antisymmetric_tensor(std::mt19937_64& rng, int n, int bound = 3) {
    StructureTensor<T> c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) c.set_antisymmetric(i, j, k, detail::random_scalar<T>(rng, bound));
    return c;
}

/// Arbitrary tensor, no symmetry.
template <Scalar T>
StructureTensor<T> random_tensor(std::mt19937_64& rng, int n, int bound = 3) {
    StructureTensor<T> c(n);
    for (auto& v : c.entries()) v = detail::random_scalar<T>(rng, bound);
    return c;
}

}  // namespace weightsys
