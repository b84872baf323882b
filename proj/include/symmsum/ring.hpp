#pragma once

#include "symmsum/rational.hpp"

#include <complex>
#include <concepts>

namespace symmsum {

/*
 * Scalar ring contract.
 *
 * Every algorithm in this library is written against ring_traits<T>, so the
 * same code runs over exact rationals, doubles, complex doubles and
 * univariate polynomials with any of those as coefficients. The one
 * non-ring operation required is exact division by a small positive
 * integer (Newton-Girard needs 1/k for k <= n).
 */
template <typename T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_bigint(const BigInt& v) { return Rational(v); }
    static Rational divide_by_int(const Rational& x, long k) { return Rational(x / Rational(k)); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <>
struct ring_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_bigint(const BigInt& v) { return v.get_d(); }
    static double divide_by_int(double x, long k) { return x / static_cast<double>(k); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ring_traits<std::complex<double>> {
    using C = std::complex<double>;
    static constexpr bool exact = false;
    static C zero() { return C(0.0, 0.0); }
    static C one() { return C(1.0, 0.0); }
    static C from_int(long v) { return C(static_cast<double>(v), 0.0); }
    static C from_bigint(const BigInt& v) { return C(v.get_d(), 0.0); }
    static C divide_by_int(const C& x, long k) { return x / static_cast<double>(k); }
    static bool is_zero(const C& x) { return x == zero(); }
};

template <typename T>
concept RingScalar = requires(const T& a, const T& b) {
    { ring_traits<T>::zero() } -> std::convertible_to<T>;
    { ring_traits<T>::one() } -> std::convertible_to<T>;
    { ring_traits<T>::divide_by_int(a, 2L) } -> std::convertible_to<T>;
    { T(a + b) };
    { T(a - b) };
    { T(a * b) };
};

} // namespace symmsum
