#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <variant>

#include "weightsys/canonical.hpp"
#include "weightsys/contraction.hpp"
#include "weightsys/diagram.hpp"
#include "weightsys/error.hpp"
#include "weightsys/tensor.hpp"

namespace weightsys {

template <Scalar T>
struct TensorBacked {
    StructureTensor<T> tensor;
};

/// Values of a weight system on connected 3-graphs, keyed by canonical code.
template <Scalar T>
struct TableBacked {
    T loop_value;
    std::map<std::string, T> table;
};

/**
 * A function on 3-graphs, extended to disjoint unions by multiplicativity
 * (with f(empty) = 1) and to formal sums by linearity.
 */
template <Scalar T>
class WeightSystem {
public:
    using value_type = T;

    WeightSystem(TensorBacked<T> t) : backing_(std::move(t)) {}
    WeightSystem(TableBacked<T> t) : backing_(std::move(t)) {}

    static WeightSystem from_tensor(StructureTensor<T> c) { return WeightSystem(TensorBacked<T>{std::move(c)}); }

    bool tensor_backed() const noexcept { return backing_.index() == 0; }
    const StructureTensor<T>& tensor() const { return std::get<0>(backing_).tensor; }
    const TableBacked<T>& table() const { return std::get<1>(backing_); }

    T loop_value() const {
        if (tensor_backed()) return ScalarTraits<T>::from_int(tensor().dim());
        return table().loop_value;
    }

    /// Value on a connected 0-legged diagram with at least one vertex; `code` is its canonical form.
    T connected_value(const FixedDiagram& g, const std::string& code) const {
        if (tensor_backed()) return partition_function(tensor(), g);
        const auto& t = table().table;
        auto it = t.find(code);
        if (it == t.end()) throw Error(ErrorKind::TableMiss, code);
        return it->second;
    }

private:
    std::variant<TensorBacked<T>, TableBacked<T>> backing_;
};

/**
 * Evaluates a weight system on 0-legged diagrams, caching values of connected
 * components by canonical code. Not thread-safe; use one per thread.
 */
template <Scalar T>
class Evaluator {
public:
    explicit Evaluator(const WeightSystem<T>& f) : f_(&f) {}

    T operator()(const FixedDiagram& d) {
        if (d.num_legs() != 0) throw Error(ErrorKind::HasLegs, std::to_string(d.num_legs()) + " legs");
        T value = power(f_->loop_value(), static_cast<unsigned>(d.loop_count()));
        if (d.num_vertices() == 0) return value;
        for (const auto& comp : components(d)) {
            std::string code = canonical_form(comp.diagram);
            auto it = memo_.find(code);
            if (it == memo_.end()) {
                T v = f_->connected_value(comp.diagram, code);
                it = memo_.emplace(std::move(code), std::move(v)).first;
            }
            value *= it->second;
        }
        return value;
    }

    T operator()(const FormalSum& sum) {
        T total = scalar_zero<T>();
        for (const auto& term : sum) {
            T v = (*this)(term.diagram);
            if (term.coefficient != 1) v *= ScalarTraits<T>::from_int(term.coefficient);
            total += v;
        }
        return total;
    }

    std::size_t cache_size() const noexcept { return memo_.size(); }

private:
    const WeightSystem<T>* f_;
    std::unordered_map<std::string, T> memo_;
};

template <Scalar T>
T evaluate(const WeightSystem<T>& f, const FixedDiagram& d) {
    return Evaluator<T>(f)(d);
}

template <Scalar T>
T evaluate(const WeightSystem<T>& f, const FormalSum& sum) {
    return Evaluator<T>(f)(sum);
}

/// phi' = f / f(loop), evaluated on 3-graphs.
template <Scalar T>
class NormalizedWeightSystem {
public:
    explicit NormalizedWeightSystem(WeightSystem<T> f) : f_(std::move(f)), dimension_(f_.loop_value()) {
        if (ScalarTraits<T>::is_zero(dimension_)) throw Error(ErrorKind::ZeroDimension, "f(loop) = 0");
    }

    T operator()(const FixedDiagram& g) const { return evaluate(f_, g) / dimension_; }
    const WeightSystem<T>& base() const noexcept { return f_; }

private:
    WeightSystem<T> f_;
    T dimension_;
};

template <Scalar T>
NormalizedWeightSystem<T> normalized(WeightSystem<T> f) {
    return NormalizedWeightSystem<T>(std::move(f));
}

}  // namespace weightsys
