#pragma once

#include "symmsum/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace symmsum {

/// Univariate polynomial in t, coefficients in ascending degree. The stored
/// length is an upper bound on the degree; trailing zeros are allowed.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}
    Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) {}

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

    std::size_t size() const { return coeffs_.size(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    /// Coefficient of t^i; zero beyond the stored length.
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_traits<T>::zero(); }

    /// Coefficients padded (or truncated past trailing zeros) to exactly `length` entries.
    std::vector<T> coeffs_padded(std::size_t length) const {
        std::vector<T> out(length, ring_traits<T>::zero());
        for (std::size_t i = 0; i < std::min(length, coeffs_.size()); ++i) out[i] = coeffs_[i];
        return out;
    }

    template <typename U>
    U evaluate(const U& t) const {
        U acc = ring_traits<U>::zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = U(acc * t + U(coeffs_[i]));
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<T>::zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<T>::zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = T(-c);
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return Poly();
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, ring_traits<T>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (ring_traits<T>::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const T& s, Poly p) {
        for (auto& c : p.coeffs_) c = T(s * c);
        return p;
    }

    /// Equality up to trailing zeros.
    friend bool operator==(const Poly& a, const Poly& b) {
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (!(a.coeff(i) == b.coeff(i))) return false;
        }
        return true;
    }

private:
    std::vector<T> coeffs_;
};

template <typename T>
struct ring_traits<Poly<T>> {
    static constexpr bool exact = ring_traits<T>::exact;
    static Poly<T> zero() { return Poly<T>(); }
    static Poly<T> one() { return Poly<T>::constant(ring_traits<T>::one()); }
    static Poly<T> from_int(long v) { return Poly<T>::constant(ring_traits<T>::from_int(v)); }
    static Poly<T> from_bigint(const BigInt& v) { return Poly<T>::constant(ring_traits<T>::from_bigint(v)); }
    static Poly<T> divide_by_int(const Poly<T>& p, long k) {
        std::vector<T> out;
        out.reserve(p.size());
        for (const auto& c : p.coeffs()) out.push_back(ring_traits<T>::divide_by_int(c, k));
        return Poly<T>(std::move(out));
    }
    static bool is_zero(const Poly<T>& p) {
        for (const auto& c : p.coeffs()) {
            if (!ring_traits<T>::is_zero(c)) return false;
        }
        return true;
    }
};

} // namespace symmsum
