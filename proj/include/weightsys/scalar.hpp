#pragma once

#include <gmpxx.h>

#include <charconv>
#include <complex>
#include <concepts>
#include <string>

namespace weightsys {

using Rational = mpq_class;
using Complex = std::complex<double>;

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Complex>;

template <class T>
struct ScalarTraits;

inline std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

template <>
struct ScalarTraits<Rational> {
    using Magnitude = Rational;
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";

    static Rational from_int(long v) { return Rational(v); }
    static Magnitude magnitude(const Rational& x) { return abs(x); }
    static double to_double(const Magnitude& m) { return m.get_d(); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static std::string format(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<Complex> {
    using Magnitude = double;
    static constexpr bool exact = false;
    static constexpr const char* name = "complex";

    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Magnitude magnitude(const Complex& x) { return std::abs(x); }
    static double to_double(const Magnitude& m) { return m; }
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static std::string format(const Complex& x) {
        return format_double(x.real()) + " " + format_double(x.imag());
    }
};

template <Scalar T>
using magnitude_t = typename ScalarTraits<T>::Magnitude;

template <Scalar T>
T scalar_zero() {
    return ScalarTraits<T>::from_int(0);
}

template <Scalar T>
T scalar_one() {
    return ScalarTraits<T>::from_int(1);
}

template <Scalar T>
T power(const T& base, unsigned exponent) {
    T result = scalar_one<T>();
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

inline Complex to_complex(const Rational& x) { return Complex(x.get_d(), 0.0); }
inline Complex to_complex(const Complex& x) { return x; }

}  // namespace weightsys
