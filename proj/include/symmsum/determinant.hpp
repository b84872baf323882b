#pragma once

#include "symmsum/matrix.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <type_traits>
#include <vector>

namespace symmsum {

inline constexpr std::size_t kPermutationDetMaxN = 8;
inline constexpr std::size_t kLaplaceDetMaxN = 10;

/*
 * Three determinant routes kept side by side:
 *
 *   det_permutation  sum over all n! permutations with their signs
 *   det_laplace      cofactor expansion along the first row
 *   det_exact        fraction-free elimination over the integers (production)
 *
 * The first two are generic over any commutative ring and serve as oracles;
 * they are size-capped because their cost is factorial.
 */

template <typename T>
T det_permutation(const Matrix<T>& a) {
    require_square(a, "det_permutation");
    const std::size_t n = a.rows();
    if (n > kPermutationDetMaxN) {
        throw size_limit_error("det_permutation is limited to n <= 8, got n = " + std::to_string(n));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    T total = ring_traits<T>::zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        T term = ring_traits<T>::one();
        for (std::size_t i = 0; i < n && !ring_traits<T>::is_zero(term); ++i) term = T(term * a(i, perm[i]));
        if (inversions % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace detail {

template <typename T>
T laplace_recursive(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return ring_traits<T>::one();
    if (n == 1) return a(0, 0);
    T total = ring_traits<T>::zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (ring_traits<T>::is_zero(a(0, j))) continue;
        T term = T(a(0, j) * laplace_recursive(minor_matrix(a, 0, j)));
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

} // namespace detail

template <typename T>
T det_laplace(const Matrix<T>& a) {
    require_square(a, "det_laplace");
    if (a.rows() > kLaplaceDetMaxN) {
        throw size_limit_error("det_laplace is limited to n <= 10, got n = " + std::to_string(a.rows()));
    }
    return detail::laplace_recursive(a);
}

/// Bareiss elimination on the row-scaled integer matrix. Exact for any n.
Rational det_exact(const Matrix<Rational>& a);

/// Gaussian elimination with partial pivoting.
double det_float(const Matrix<double>& a);
std::complex<double> det_float(const Matrix<std::complex<double>>& a);

/// Production determinant for a ring: exact route for rationals, pivoted
/// elimination for floats, cofactor expansion otherwise.
template <typename T>
T determinant(const Matrix<T>& a) {
    if constexpr (std::is_same_v<T, Rational>) {
        return det_exact(a);
    } else if constexpr (std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>) {
        return det_float(a);
    } else {
        return det_laplace(a);
    }
}

} // namespace symmsum
