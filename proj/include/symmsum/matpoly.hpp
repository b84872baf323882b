#pragma once

#include "symmsum/matrix.hpp"
#include "symmsum/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace symmsum {

/// C_0 + C_1 t + ... + C_d t^d with n x n matrix coefficients. The degree is
/// an upper bound: trailing coefficients may be zero.
template <typename T>
class MatrixPolynomial {
public:
    MatrixPolynomial() = default;
    explicit MatrixPolynomial(std::vector<Matrix<T>> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw input_error("MatrixPolynomial needs at least one coefficient");
        for (const auto& c : coeffs_) {
            require_square(c, "MatrixPolynomial");
            if (c.rows() != coeffs_.front().rows()) {
                throw input_error("MatrixPolynomial: coefficients have different dimensions");
            }
        }
    }

    /// The constant polynomial I_n.
    static MatrixPolynomial identity(std::size_t n) { return MatrixPolynomial({Matrix<T>::identity(n)}); }

    /// A + tB.
    static MatrixPolynomial linear(const Matrix<T>& a, const Matrix<T>& b) { return MatrixPolynomial({a, b}); }

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::size_t dimension() const { return coeffs_.front().rows(); }
    const Matrix<T>& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Matrix<T>>& coeffs() const { return coeffs_; }

    Matrix<T> evaluate(const T& t) const {
        Matrix<T> acc = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = t * acc + coeffs_[i];
        return acc;
    }

    /// The same object viewed as an n x n matrix whose entries are polynomials in t.
    Matrix<Poly<T>> to_poly_matrix() const {
        const std::size_t n = dimension();
        Matrix<Poly<T>> out(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<T> c;
                c.reserve(coeffs_.size());
                for (const auto& m : coeffs_) c.push_back(m(i, j));
                out(i, j) = Poly<T>(std::move(c));
            }
        }
        return out;
    }

private:
    std::vector<Matrix<T>> coeffs_;
};

/// Cauchy product; C_l = sum_{i+j=l} P_i Q_j with the factor order kept.
template <typename T>
MatrixPolynomial<T> matpoly_mul(const MatrixPolynomial<T>& p, const MatrixPolynomial<T>& q) {
    if (p.dimension() != q.dimension()) {
        throw input_error("matpoly_mul: dimension mismatch " + std::to_string(p.dimension()) + " vs " +
                          std::to_string(q.dimension()));
    }
    const std::size_t n = p.dimension();
    std::vector<Matrix<T>> out(p.degree() + q.degree() + 1, Matrix<T>(n, n));
    for (std::size_t i = 0; i <= p.degree(); ++i)
        for (std::size_t j = 0; j <= q.degree(); ++j) out[i + j] += p[i] * q[j];
    return MatrixPolynomial<T>(std::move(out));
}

/// (A + tB)^m. Coefficient k is the sum of all words of length m with k letters B.
template <typename T>
MatrixPolynomial<T> matpoly_pow(const Matrix<T>& a, const Matrix<T>& b, unsigned m) {
    require_square(a, "matpoly_pow");
    require_square(b, "matpoly_pow");
    if (a.rows() != b.rows()) {
        throw input_error("matpoly_pow: dimension mismatch " + a.shape_string() + " vs " + b.shape_string());
    }
    const auto step = MatrixPolynomial<T>::linear(a, b);
    auto result = MatrixPolynomial<T>::identity(a.rows());
    for (unsigned i = 0; i < m; ++i) result = matpoly_mul(result, step);
    return result;
}

} // namespace symmsum
