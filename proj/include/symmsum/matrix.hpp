#pragma once

#include "symmsum/errors.hpp"
#include "symmsum/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symmsum {

/// Strictly increasing list of 0-based indices.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> indices);
    IndexSet(std::initializer_list<std::size_t> indices) : IndexSet(std::vector<std::size_t>(indices)) {}

    /// {0, 1, ..., n-1}
    static IndexSet full(std::size_t n);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    std::size_t operator[](std::size_t i) const { return idx_[i]; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<std::size_t>& indices() const { return idx_; }

    /// Throws input_error if any index is >= dim.
    void check_bounds(std::size_t dim, const char* what) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> idx_;
};

/// Dense row-major matrix over a scalar ring.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, ring_traits<T>::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw input_error("matrix data length " + std::to_string(data_.size()) + " does not match " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw input_error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_traits<T>::one();
        return m;
    }

    static Matrix diagonal(std::span<const T> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix diagonal(std::initializer_list<T> d) { return diagonal(std::span<const T>(d.begin(), d.size())); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> data() const { return data_; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "+");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "-");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw input_error("cannot multiply " + a.shape_string() + " by " + b.shape_string());
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (ring_traits<T>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.data_) x = T(s * x);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (!(a.data_[i] == b.data_[i])) return false;
        }
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw input_error(std::string("shape mismatch in '") + op + "': " + shape_string() + " vs " +
                              o.shape_string());
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
void require_square(const Matrix<T>& a, const char* what) {
    if (!a.is_square()) {
        throw input_error(std::string(what) + ": matrix must be square, got " + a.shape_string());
    }
}

template <typename T>
T trace(const Matrix<T>& a) {
    require_square(a, "trace");
    T acc = ring_traits<T>::zero();
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
    return acc;
}

/// A(rows, cols), keeping the relative order of both index sets.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, const IndexSet& rows, const IndexSet& cols) {
    rows.check_bounds(a.rows(), "row");
    cols.check_bounds(a.cols(), "column");
    Matrix<T> out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
    return out;
}

/// A with row `r` and column `c` deleted.
template <typename T>
Matrix<T> minor_matrix(const Matrix<T>& a, std::size_t r, std::size_t c) {
    Matrix<T> out(a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < a.rows(); ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < a.cols(); ++j) {
            if (j == c) continue;
            out(oi, oj++) = a(i, j);
        }
        ++oi;
    }
    return out;
}

template <typename T>
Matrix<T> matrix_power(const Matrix<T>& a, unsigned m) {
    require_square(a, "matrix_power");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    for (unsigned i = 0; i < m; ++i) result = result * a;
    return result;
}

/// Elementwise conversion between rings (e.g. exact -> float).
template <typename U, typename T, typename F>
Matrix<U> map_entries(const Matrix<T>& a, F&& f) {
    std::vector<U> out;
    out.reserve(a.rows() * a.cols());
    for (const auto& x : a.data()) out.push_back(f(x));
    return Matrix<U>(a.rows(), a.cols(), std::move(out));
}

} // namespace symmsum
