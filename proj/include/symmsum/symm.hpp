#pragma once

#include "symmsum/determinant.hpp"
#include "symmsum/matrix.hpp"
#include "symmsum/subsets.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace symmsum {

/// (S_0, S_1, ..., S_n) of one n x n matrix. values[0] is always 1.
template <typename T>
struct SymmVector {
    std::vector<T> values;

    std::size_t dimension() const { return values.size() - 1; }
    const T& operator[](std::size_t k) const { return values[k]; }
    friend bool operator==(const SymmVector&, const SymmVector&) = default;
};

/// (p_1, ..., p_n) with p_j = Tr(A^j).
template <typename T>
struct PowerSumVector {
    std::vector<T> values;

    std::size_t size() const { return values.size(); }
    /// p_j, 1-based.
    const T& at(std::size_t j) const { return values[j - 1]; }
    friend bool operator==(const PowerSumVector&, const PowerSumVector&) = default;
};

/// e_k from power sums: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
template <typename T>
SymmVector<T> newton_to_elementary(const PowerSumVector<T>& p) {
    const std::size_t n = p.size();
    std::vector<T> e;
    e.reserve(n + 1);
    e.push_back(ring_traits<T>::one());
    for (std::size_t k = 1; k <= n; ++k) {
        T acc = ring_traits<T>::zero();
        for (std::size_t i = 1; i <= k; ++i) {
            T term = T(e[k - i] * p.at(i));
            if (i % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push_back(ring_traits<T>::divide_by_int(acc, static_cast<long>(k)));
    }
    return SymmVector<T>{std::move(e)};
}

/// p_k = sum_{i=1..k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
template <typename T>
PowerSumVector<T> elementary_to_newton(const SymmVector<T>& e) {
    const std::size_t n = e.dimension();
    std::vector<T> p;
    p.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc = ring_traits<T>::zero();
        for (std::size_t i = 1; i < k; ++i) {
            T term = T(e[i] * p[k - i - 1]);
            if (i % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        T last = T(ring_traits<T>::from_int(static_cast<long>(k)) * e[k]);
        if (k % 2 == 1) {
            acc += last;
        } else {
            acc -= last;
        }
        p.push_back(std::move(acc));
    }
    return PowerSumVector<T>{std::move(p)};
}

/// Tr(A), Tr(A^2), ..., Tr(A^n).
template <typename T>
PowerSumVector<T> power_sums(const Matrix<T>& a) {
    require_square(a, "power_sums");
    const std::size_t n = a.rows();
    std::vector<T> p;
    p.reserve(n);
    if (n == 0) return PowerSumVector<T>{};
    Matrix<T> power = a;
    p.push_back(trace(power));
    for (std::size_t j = 2; j <= n; ++j) {
        power = power * a;
        p.push_back(trace(power));
    }
    return PowerSumVector<T>{std::move(p)};
}

/// All S_k at once from the traces of A^j via Newton-Girard. Works over any
/// ring with exact division by 1..n, including polynomial rings.
template <typename T>
SymmVector<T> symm_all(const Matrix<T>& a) {
    require_square(a, "symm_all");
    return newton_to_elementary(power_sums(a));
}

/// S_k as the sum of all k x k principal minors.
template <typename T>
T symm_minors(const Matrix<T>& a, std::size_t k) {
    require_square(a, "symm_minors");
    if (k > a.rows()) {
        throw input_error("symm_minors: k = " + std::to_string(k) + " exceeds n = " + std::to_string(a.rows()));
    }
    T total = ring_traits<T>::zero();
    for (const auto& alpha : index_subsets(a.rows(), k)) total += determinant(submatrix(a, alpha, alpha));
    return total;
}

/// S_k, with S_k = 0 for k > n. Used by the closed forms, which hold in every dimension.
template <typename T>
T symm_k(const Matrix<T>& a, std::size_t k) {
    require_square(a, "symm_k");
    if (k > a.rows()) return ring_traits<T>::zero();
    if (k == 0) return ring_traits<T>::one();
    if (k == 1) return trace(a);
    return symm_all(a)[k];
}

/// Coefficients c_0..c_n of det(tI - A) in ascending degree; c_{n-k} = (-1)^k S_k.
template <typename T>
std::vector<T> charpoly_coeffs(const Matrix<T>& a) {
    require_square(a, "charpoly_coeffs");
    const std::size_t n = a.rows();
    const auto s = symm_all(a);
    std::vector<T> c(n + 1, ring_traits<T>::zero());
    for (std::size_t k = 0; k <= n; ++k) c[n - k] = k % 2 == 0 ? s[k] : T(-s[k]);
    return c;
}

} // namespace symmsum
