#pragma once

#include <vector>

#include "weightsys/contraction.hpp"
#include "weightsys/diagram.hpp"
#include "weightsys/error.hpp"
#include "weightsys/tensor.hpp"

namespace weightsys {

inline constexpr double kOracleLimit = 1e7;

namespace detail {

inline void check_oracle_size(int n, int edges) {
    double count = 1.0;
    for (int e = 0; e < edges; ++e) count *= n;
    if (count > kOracleLimit)
        throw Error(ErrorKind::TooLarge, std::to_string(n) + "^" + std::to_string(edges) + " colourings");
}

}  // namespace detail

/// Literal sum over all n^|E| edge colourings of the product of c at every vertex.
template <Scalar T>
T brute_force_oracle(const StructureTensor<T>& c, const FixedDiagram& d) {
    if (d.num_legs() != 0) throw Error(ErrorKind::HasLegs, std::to_string(d.num_legs()) + " legs");
    const int n = c.dim();
    const int edges = d.num_edges();
    detail::check_oracle_size(n, edges);
    const auto edge_of = d.edge_ids();

    T total = scalar_zero<T>();
    std::vector<int> colour(edges, 0);
    if (n > 0 || edges == 0) {
        do {
            T term = scalar_one<T>();
            for (int v = 0; v < d.num_vertices(); ++v)
                term *= c(colour[edge_of[3 * v]], colour[edge_of[3 * v + 1]], colour[edge_of[3 * v + 2]]);
            total += term;
        } while (detail::next_index(colour, n));
    }
    return total * power(ScalarTraits<T>::from_int(n), static_cast<unsigned>(d.loop_count()));
}

/// Brute-force open partition function; same enumeration, accumulated by leg colours.
template <Scalar T>
DenseTensor<T> brute_force_open(const StructureTensor<T>& c, const FixedDiagram& d) {
    const int n = c.dim();
    const int k = d.num_legs();
    const int edges = d.num_edges();
    detail::check_oracle_size(n, edges);
    const auto edge_of = d.edge_ids();
    DenseTensor<T> out(k, n);
    const T loops = power(ScalarTraits<T>::from_int(n), static_cast<unsigned>(d.loop_count()));

    std::vector<int> colour(edges, 0), legs(k, 0);
    if (n > 0 || edges == 0) {
        do {
            T term = loops;
            for (int v = 0; v < d.num_vertices(); ++v)
                term *= c(colour[edge_of[3 * v]], colour[edge_of[3 * v + 1]], colour[edge_of[3 * v + 2]]);
            for (int l = 1; l <= k; ++l) legs[l - 1] = colour[edge_of[d.leg_half_edge(l)]];
            out.at(legs) += term;
        } while (detail::next_index(colour, n));
    }
    return out;
}

}  // namespace weightsys
