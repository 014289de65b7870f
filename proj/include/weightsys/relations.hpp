#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "weightsys/contraction.hpp"
#include "weightsys/diagram.hpp"
#include "weightsys/enumeration.hpp"
#include "weightsys/error.hpp"
#include "weightsys/linalg.hpp"
#include "weightsys/parallel.hpp"
#include "weightsys/permutation.hpp"
#include "weightsys/tensor.hpp"
#include "weightsys/weight_system.hpp"

namespace weightsys {

/// max-norm of the open partition function of the AS element.
template <Scalar T>
magnitude_t<T> as_residual(const StructureTensor<T>& c) {
    return open_partition_function(c, as_element()).max_norm();
}

/// max-norm of the open partition function of the IHX element; the same sums as jacobi_check.
template <Scalar T>
magnitude_t<T> ihx_residual(const StructureTensor<T>& c) {
    return open_partition_function(c, ihx_element()).max_norm();
}

template <Scalar T>
struct PairingResult {
    T lhs;  // bilinear dot of the open partition functions
    T rhs;  // partition function of the glued diagram
    magnitude_t<T> residual;
};

template <Scalar T>
PairingResult<T> pairing_identity_check(const StructureTensor<T>& c, const FixedDiagram& g, const FixedDiagram& h) {
    if (g.num_legs() != h.num_legs())
        throw Error(ErrorKind::LegCountMismatch,
                    std::to_string(g.num_legs()) + " vs " + std::to_string(h.num_legs()) + " legs");
    T lhs = open_partition_function(c, g).dot(open_partition_function(c, h));
    T rhs = partition_function(c, glue(g, h));
    auto r = ScalarTraits<T>::magnitude(lhs - rhs);
    return {std::move(lhs), std::move(rhs), std::move(r)};
}

inline constexpr std::uint64_t kDeltaTermLimit = 1'000'000;

/**
 * sum over pi in S_k of sgn(pi) f(P_pi . h). Terms are computed in parallel
 * and added in lexicographic permutation order, so the result does not
 * depend on the thread count.
 */
template <Scalar T>
T delta_sum(const WeightSystem<T>& f, int k, const FixedDiagram& h, unsigned threads = 1) {
    if (k < 0) throw Error(ErrorKind::BadIndex, "k = " + std::to_string(k));
    if (h.num_legs() != 2 * k)
        throw Error(ErrorKind::LegCountMismatch,
                    "h has " + std::to_string(h.num_legs()) + " legs, expected " + std::to_string(2 * k));
    if (k > 20 || factorial(k) > kDeltaTermLimit) throw Error(ErrorKind::TooLarge, std::to_string(k) + "! terms");
    const std::uint64_t terms = factorial(k);
    std::vector<T> values(terms);
    parallel_chunks<char>(terms, threads, [&](std::uint64_t begin, std::uint64_t end) {
        Evaluator<T> eval(f);
        for (std::uint64_t r = begin; r < end; ++r) {
            const auto pi = unrank_permutation(k, r);
            T v = eval(glue(permutation_diagram(pi), h));
            if (permutation_sign(pi) < 0) v = -v;
            values[r] = std::move(v);
        }
        return char{0};
    });
    T total = scalar_zero<T>();
    for (const auto& v : values) total += v;
    return total;
}

template <Scalar T>
struct DeltaReport {
    int k = 0;
    std::vector<T> sums;  // one per h
    double max_residual = 0.0;
    std::size_t worst = 0;
    double tolerance = 0.0;
    bool pass = true;
};

/// Runs delta_sum on every h. Exact backends pass only on exact zeros; complex ones on |sum| <= tol.
template <Scalar T>
DeltaReport<T> delta_check(const WeightSystem<T>& f, int k, const std::vector<FixedDiagram>& corpus, double tol = 1e-9,
                           unsigned threads = 1) {
    using Tr = ScalarTraits<T>;
    DeltaReport<T> rep;
    rep.k = k;
    rep.tolerance = Tr::exact ? 0.0 : tol;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        T s = delta_sum(f, k, corpus[i], threads);
        const double r = Tr::to_double(Tr::magnitude(s));
        if (i == 0 || r > rep.max_residual) {
            rep.max_residual = r;
            rep.worst = i;
        }
        const bool ok = Tr::exact ? Tr::is_zero(s) : r <= tol;
        rep.pass = rep.pass && ok;
        rep.sums.push_back(std::move(s));
    }
    return rep;
}

/// C_{f,k}: entries f(g_i . g_j) over a corpus, row-major.
template <Scalar T>
struct ConnectionMatrix {
    int k = 0;
    DiagramCorpus corpus;
    std::vector<T> entries;

    std::size_t size() const noexcept { return corpus.size(); }
    const T& operator()(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
};

/// Fills the upper triangle (in parallel) and mirrors it: g.h and h.g are the same diagram.
template <Scalar T>
ConnectionMatrix<T> connection_matrix(const WeightSystem<T>& f, const DiagramCorpus& corpus, unsigned threads = 1) {
    const std::size_t m = corpus.size();
    ConnectionMatrix<T> out{corpus.legs(), corpus, std::vector<T>(m * m, scalar_zero<T>())};
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(m * (m + 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) cells.emplace_back(i, j);
    parallel_chunks<char>(cells.size(), threads, [&](std::uint64_t begin, std::uint64_t end) {
        Evaluator<T> eval(f);
        for (std::uint64_t c = begin; c < end; ++c) {
            auto [i, j] = cells[c];
            out.entries[i * m + j] = eval(glue(corpus[i], corpus[j]));
        }
        return char{0};
    });
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) out.entries[i * m + j] = out.entries[j * m + i];
    return out;
}

template <Scalar T>
std::size_t rank(const ConnectionMatrix<T>& c) {
    return matrix_rank(std::span<const T>(c.entries), c.size(), c.size());
}

template <Scalar T>
struct ConnectedSumReport {
    T phi_g;                  // normalized value of g
    T phi_h;                  // normalized value of h
    std::vector<T> values;    // unnormalized f(g # h), one per (edge, edge, cross) choice
    double max_residual = 0.0;
};

/**
 * |phi'(g # h) - phi'(g) phi'(h)| over every pair of non-loop edges and both
 * ways of joining them, where phi' = f / f(loop).
 */
template <Scalar T>
ConnectedSumReport<T> connected_sum_multiplicativity_check(const StructureTensor<T>& c, const FixedDiagram& g,
                                                           const FixedDiagram& h) {
    using Tr = ScalarTraits<T>;
    const auto phi = normalized(WeightSystem<T>::from_tensor(c));
    ConnectedSumReport<T> rep{phi(g), phi(h), {}, 0.0};
    const T product = rep.phi_g * rep.phi_h;
    const auto eg = g.edges();
    const auto eh = h.edges();
    for (int a = 0; a < static_cast<int>(eg.size()); ++a) {
        if (g.vertex_of(eg[a].first) == g.vertex_of(eg[a].second)) continue;
        for (int b = 0; b < static_cast<int>(eh.size()); ++b) {
            if (h.vertex_of(eh[b].first) == h.vertex_of(eh[b].second)) continue;
            for (bool cross : {false, true}) {
                const auto sum = edge_connected_sum(g, a, h, b, cross);
                T value = evaluate(phi.base(), sum);
                const double r = Tr::to_double(Tr::magnitude(T(value / phi.base().loop_value() - product)));
                rep.max_residual = std::max(rep.max_residual, r);
                rep.values.push_back(std::move(value));
            }
        }
    }
    return rep;
}

template <Scalar T>
struct AdditivityResult {
    T value;  // p of the direct sum
    magnitude_t<T> residual;
};

/// |p_{c1 (+) c2}(g) - p_{c1}(g) - p_{c2}(g)|.
template <Scalar T>
AdditivityResult<T> direct_sum_additivity_check(const StructureTensor<T>& c1, const StructureTensor<T>& c2,
                                                const FixedDiagram& g) {
    T value = partition_function(direct_sum(c1, c2), g);
    T diff = value - partition_function(c1, g) - partition_function(c2, g);
    return {std::move(value), ScalarTraits<T>::magnitude(diff)};
}

}  // namespace weightsys
