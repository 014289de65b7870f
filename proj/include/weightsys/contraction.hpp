#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "weightsys/diagram.hpp"
#include "weightsys/scalar.hpp"
#include "weightsys/tensor.hpp"

namespace weightsys {

/// Rank-k tensor over C^n, row-major with leg 1 most significant.
template <Scalar T>
class DenseTensor {
public:
    DenseTensor(int rank, int dim) : rank_(rank), dim_(dim), data_(size_for(rank, dim), scalar_zero<T>()) {}

    int rank() const noexcept { return rank_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return data_.size(); }

    const T& operator[](std::size_t flat) const { return data_[flat]; }
    T& operator[](std::size_t flat) { return data_[flat]; }

    const T& at(std::span<const int> index) const { return data_[flatten(index)]; }
    T& at(std::span<const int> index) { return data_[flatten(index)]; }

    std::span<const T> data() const noexcept { return data_; }
    std::span<T> data() noexcept { return data_; }

    /// Non-conjugated bilinear pairing sum_x a[x] b[x].
    T dot(const DenseTensor& other) const {
        T acc = scalar_zero<T>();
        for (std::size_t i = 0; i < data_.size(); ++i) acc += data_[i] * other.data_[i];
        return acc;
    }

    magnitude_t<T> max_norm() const {
        magnitude_t<T> worst = ScalarTraits<T>::magnitude(scalar_zero<T>());
        for (const auto& v : data_) worst = std::max(worst, ScalarTraits<T>::magnitude(v));
        return worst;
    }

    DenseTensor& operator+=(const DenseTensor& other) {
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
        return *this;
    }
    DenseTensor& operator-=(const DenseTensor& other) {
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
        return *this;
    }
    DenseTensor& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

private:
    static std::size_t size_for(int rank, int dim) {
        std::size_t s = 1;
        for (int i = 0; i < rank; ++i) s *= static_cast<std::size_t>(dim);
        return s;
    }
    std::size_t flatten(std::span<const int> index) const {
        std::size_t f = 0;
        for (int x : index) f = f * dim_ + x;
        return f;
    }

    int rank_;
    int dim_;
    std::vector<T> data_;
};

struct ContractionOptions {
    /// When set, each step contracts a uniformly chosen connected pair instead of the greedy choice.
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

/// A dense tensor whose axes are labelled by edge ids.
template <Scalar T>
struct Factor {
    std::vector<int> labels;
    std::vector<T> data;
};

inline std::size_t ipow(int n, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= static_cast<std::size_t>(n);
    return r;
}

inline std::vector<std::size_t> strides(std::size_t rank, int n) {
    std::vector<std::size_t> s(rank, 1);
    for (std::size_t i = rank; i-- > 1;) s[i - 1] = s[i] * n;
    return s;
}

/// Advance a mixed-radix counter; returns false after the last combination.
inline bool next_index(std::vector<int>& idx, int n) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < n) return true;
        idx[i] = 0;
    }
    return false;
}

/// Sums over the diagonal of a repeated label (a loop edge at one vertex).
template <Scalar T>
Factor<T> self_trace(Factor<T> f, int n) {
    for (;;) {
        std::size_t p = 0, q = 0;
        bool found = false;
        for (std::size_t i = 0; i < f.labels.size() && !found; ++i)
            for (std::size_t j = i + 1; j < f.labels.size(); ++j)
                if (f.labels[i] == f.labels[j]) {
                    p = i;
                    q = j;
                    found = true;
                    break;
                }
        if (!found) return f;
        const auto st = strides(f.labels.size(), n);
        Factor<T> out;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < f.labels.size(); ++i)
            if (i != p && i != q) {
                out.labels.push_back(f.labels[i]);
                keep.push_back(i);
            }
        out.data.assign(ipow(n, keep.size()), scalar_zero<T>());
        std::vector<int> idx(keep.size(), 0);
        std::size_t flat = 0;
        do {
            std::size_t base = 0;
            for (std::size_t i = 0; i < keep.size(); ++i) base += idx[i] * st[keep[i]];
            for (int a = 0; a < n; ++a) out.data[flat] += f.data[base + a * (st[p] + st[q])];
            ++flat;
        } while (next_index(idx, n));
        f = std::move(out);
    }
}

/// Contracts every label shared by a and b. Result axes: a's free labels, then b's.
template <Scalar T>
Factor<T> contract(const Factor<T>& a, const Factor<T>& b, int n) {
    const auto sa = strides(a.labels.size(), n);
    const auto sb = strides(b.labels.size(), n);
    Factor<T> out;
    std::vector<std::size_t> free_stride_a, free_stride_b;  // per result axis, stride in a and b
    std::vector<std::size_t> shared_a, shared_b;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
        if (it == b.labels.end()) {
            out.labels.push_back(a.labels[i]);
            free_stride_a.push_back(sa[i]);
            free_stride_b.push_back(0);
        } else {
            shared_a.push_back(sa[i]);
            shared_b.push_back(sb[static_cast<std::size_t>(it - b.labels.begin())]);
        }
    }
    for (std::size_t j = 0; j < b.labels.size(); ++j)
        if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end()) {
            out.labels.push_back(b.labels[j]);
            free_stride_a.push_back(0);
            free_stride_b.push_back(sb[j]);
        }

    // Offsets of every shared-index combination, in increasing index order.
    std::vector<std::pair<std::size_t, std::size_t>> inner;
    {
        std::vector<int> idx(shared_a.size(), 0);
        do {
            std::size_t oa = 0, ob = 0;
            for (std::size_t s = 0; s < idx.size(); ++s) {
                oa += idx[s] * shared_a[s];
                ob += idx[s] * shared_b[s];
            }
            inner.emplace_back(oa, ob);
        } while (next_index(idx, n));
    }

    out.data.assign(ipow(n, out.labels.size()), scalar_zero<T>());
    std::vector<int> idx(out.labels.size(), 0);
    std::size_t flat = 0;
    do {
        std::size_t ba = 0, bb = 0;
        for (std::size_t r = 0; r < idx.size(); ++r) {
            ba += idx[r] * free_stride_a[r];
            bb += idx[r] * free_stride_b[r];
        }
        T acc = scalar_zero<T>();
        for (const auto& [oa, ob] : inner) acc += a.data[ba + oa] * b.data[bb + ob];
        out.data[flat++] = std::move(acc);
    } while (next_index(idx, n));
    return out;
}

inline std::size_t shared_count(const std::vector<int>& a, const std::vector<int>& b, int* first = nullptr) {
    std::size_t count = 0;
    int lowest = -1;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            ++count;
            if (lowest < 0 || x < lowest) lowest = x;
        }
    if (first) *first = lowest;
    return count;
}

/**
 * Contracts all vertex tensors of d. Returns the product of the per-component
 * results, whose labels are the edges that end at a leg and start at a vertex.
 */
template <Scalar T>
Factor<T> contract_network(const StructureTensor<T>& c, const FixedDiagram& d, const std::vector<int>& edge_of,
                           const ContractionOptions& opt) {
    const int n = c.dim();
    std::vector<Factor<T>> factors;
    factors.reserve(d.num_vertices());
    for (int v = 0; v < d.num_vertices(); ++v) {
        Factor<T> f;
        f.labels = {edge_of[3 * v], edge_of[3 * v + 1], edge_of[3 * v + 2]};
        f.data.assign(c.entries().begin(), c.entries().end());
        factors.push_back(self_trace(std::move(f), n));
    }

    std::optional<std::mt19937_64> rng;
    if (opt.shuffle_seed) rng.emplace(*opt.shuffle_seed);
    for (;;) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        std::size_t best_cost = 0;
        int best_edge = 0;
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                int first = -1;
                const std::size_t shared = shared_count(factors[i].labels, factors[j].labels, &first);
                if (shared == 0) continue;
                if (rng) {
                    candidates.emplace_back(i, j);
                    continue;
                }
                const std::size_t cost = factors[i].labels.size() + factors[j].labels.size() - 2 * shared;
                if (!found || cost < best_cost || (cost == best_cost && first < best_edge)) {
                    found = true;
                    best_cost = cost;
                    best_edge = first;
                    bi = i;
                    bj = j;
                }
            }
        if (rng && !candidates.empty()) {
            std::tie(bi, bj) = candidates[(*rng)() % candidates.size()];
            found = true;
        }
        if (!found) break;
        Factor<T> merged = contract(factors[bi], factors[bj], n);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(bj));
        factors[bi] = std::move(merged);
    }

    // Disconnected pieces: outer product in order.
    Factor<T> result{{}, {scalar_one<T>()}};
    for (const auto& f : factors) result = contract(result, f, n);
    return result;
}

}  // namespace detail

/**
 * Open partition function: the tensor whose entry at leg colours (x_1..x_k) sums,
 * over edge colourings agreeing with those leg colours, the product of c at
 * every vertex. Vertexless loops contribute a factor n each.
 */
template <Scalar T>
DenseTensor<T> open_partition_function(const StructureTensor<T>& c, const FixedDiagram& d,
                                       const ContractionOptions& opt = {}) {
    const int n = c.dim();
    const int k = d.num_legs();
    if (n == 0) {
        DenseTensor<T> empty(k, 0);
        if (k == 0 && d.num_edges() == 0 && d.loop_count() == 0) empty[0] = scalar_one<T>();
        return empty;
    }
    const auto edge_of = d.edge_ids();
    const auto net = detail::contract_network(c, d, edge_of, opt);
    const auto st = detail::strides(net.labels.size(), n);

    // For each axis of the network result, the leg it is read from.
    std::vector<int> axis_leg(net.labels.size(), -1);
    std::vector<std::pair<int, int>> tied_legs;
    for (int l = 1; l <= k; ++l) {
        const int h = d.leg_half_edge(l);
        const int e = edge_of[h];
        auto it = std::find(net.labels.begin(), net.labels.end(), e);
        if (it != net.labels.end())
            axis_leg[static_cast<std::size_t>(it - net.labels.begin())] = l - 1;
        else if (d.is_leg(d.partner(h)) && d.leg_label(d.partner(h)) > l)
            tied_legs.emplace_back(l - 1, d.leg_label(d.partner(h)) - 1);
    }

    DenseTensor<T> out(k, n);
    const T loops = power(ScalarTraits<T>::from_int(n), static_cast<unsigned>(d.loop_count()));
    std::vector<int> idx(k, 0);
    std::size_t flat = 0;
    do {
        bool ok = true;
        for (auto [a, b] : tied_legs) ok = ok && idx[a] == idx[b];
        if (ok) {
            std::size_t src = 0;
            for (std::size_t ax = 0; ax < axis_leg.size(); ++ax) src += idx[axis_leg[ax]] * st[ax];
            out[flat] = net.data[src];
            if (d.loop_count() > 0) out[flat] *= loops;
        }
        ++flat;
    } while (detail::next_index(idx, n));
    return out;
}

/// Partition function of a 0-legged diagram (product over components, n per vertexless loop).
template <Scalar T>
T partition_function(const StructureTensor<T>& c, const FixedDiagram& d, const ContractionOptions& opt = {}) {
    if (d.num_legs() != 0) throw Error(ErrorKind::HasLegs, std::to_string(d.num_legs()) + " legs");
    if (c.dim() == 0)  // no colours: only the edgeless, loopless diagram survives
        return d.num_edges() == 0 && d.loop_count() == 0 ? scalar_one<T>() : scalar_zero<T>();
    const auto net = detail::contract_network(c, d, d.edge_ids(), opt);
    T value = net.data[0];
    if (d.loop_count() > 0) value *= power(ScalarTraits<T>::from_int(c.dim()), static_cast<unsigned>(d.loop_count()));
    return value;
}

/// Linear extension of the open partition function to a formal sum with k legs each.
template <Scalar T>
DenseTensor<T> open_partition_function(const StructureTensor<T>& c, const FormalSum& sum,
                                       const ContractionOptions& opt = {}) {
    if (sum.empty()) throw Error(ErrorKind::InvalidDiagram, "empty formal sum");
    const int k = sum.front().diagram.num_legs();
    DenseTensor<T> out(k, c.dim());
    for (const auto& term : sum) {
        if (term.diagram.num_legs() != k) throw Error(ErrorKind::LegCountMismatch, "formal sum terms differ in legs");
        auto t = open_partition_function(c, term.diagram, opt);
        if (term.coefficient != 1) t *= ScalarTraits<T>::from_int(term.coefficient);
        out += t;
    }
    return out;
}

}  // namespace weightsys
