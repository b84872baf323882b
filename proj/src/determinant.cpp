#include "symmsum/determinant.hpp"

#include <cmath>
#include <utility>

namespace symmsum {

Rational det_exact(const Matrix<Rational>& a) {
    require_square(a, "det_exact");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row so elimination runs over Z.
    std::vector<BigInt> m(n * n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            m[i * n + j] = a(i, j).get_num() * (row_lcm / a(i, j).get_den());
        }
        scale *= row_lcm;
    }

    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
    BigInt prev = 1;
    int sign = 1;
    BigInt tmp;
    for (std::size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && at(pivot, k) == 0) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                tmp = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Rational det(BigInt(sign * at(n - 1, n - 1)), scale);
    det.canonicalize();
    return det;
}

namespace {

template <typename T>
T det_pivoted(Matrix<T> m) {
    require_square(m, "det_float");
    const std::size_t n = m.rows();
    T det = T(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                pivot = i;
            }
        }
        if (best == 0.0) return T(0.0);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

} // namespace

double det_float(const Matrix<double>& a) { return det_pivoted(a); }

std::complex<double> det_float(const Matrix<std::complex<double>>& a) { return det_pivoted(a); }

} // namespace symmsum
