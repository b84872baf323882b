#pragma once

#include "symmsum/determinant.hpp"
#include "symmsum/matrix.hpp"
#include "symmsum/subsets.hpp"
#include "symmsum/symm.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symmsum {

/// Ordered tuple (A_1, ..., A_N) of same-size square matrices. Duplicates allowed.
template <typename T>
class MatrixTuple {
public:
    MatrixTuple() = default;
    explicit MatrixTuple(std::vector<Matrix<T>> members) : members_(std::move(members)) {
        if (members_.size() > max_tuple_size()) {
            throw size_limit_error("tuple length N = " + std::to_string(members_.size()) + " exceeds the cap of " +
                                   std::to_string(max_tuple_size()) + " (raise with SYMMSUM_MAX_N)");
        }
        for (const auto& m : members_) {
            require_square(m, "MatrixTuple");
            if (m.rows() != members_.front().rows()) {
                throw input_error("MatrixTuple: members have different dimensions");
            }
        }
    }

    std::size_t size() const { return members_.size(); }
    const Matrix<T>& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Matrix<T>>& members() const { return members_; }

    /// Matrix dimension n, or `fallback` for an empty tuple.
    std::size_t dimension(std::size_t fallback = 0) const { return members_.empty() ? fallback : members_[0].rows(); }

    /// Sum of the members selected by `mask`, added onto `base`.
    Matrix<T> subset_sum(const Matrix<T>& base, std::uint64_t mask) const {
        Matrix<T> s = base;
        while (mask != 0) {
            s += members_[static_cast<std::size_t>(std::countr_zero(mask))];
            mask &= mask - 1;
        }
        return s;
    }

    MatrixTuple restrict(const IndexSet& rows, const IndexSet& cols) const {
        std::vector<Matrix<T>> out;
        out.reserve(members_.size());
        for (const auto& m : members_) out.push_back(submatrix(m, rows, cols));
        return MatrixTuple(std::move(out));
    }

private:
    std::vector<Matrix<T>> members_;
};

/// Value of an identity's left-hand side on one instance.
template <typename T>
struct Residual {
    T value;
    std::size_t n = 0;
    std::size_t tuple_size = 0;
    std::optional<std::size_t> tau;

    bool is_zero() const { return ring_traits<T>::is_zero(value); }
};

namespace detail {

template <typename T>
void require_compatible(const Matrix<T>& base, const MatrixTuple<T>& s, const char* what) {
    require_square(base, what);
    if (s.size() > 0 && s.dimension() != base.rows()) {
        throw input_error(std::string(what) + ": base is " + base.shape_string() + " but tuple members are " +
                          s[0].shape_string());
    }
}

/// Masks are split into this many fixed blocks, so the summation order (and
/// hence every floating-point result) does not depend on the thread count.
inline constexpr std::uint64_t kSubsetBlocks = 64;

} // namespace detail

/// Reference kernel: sum over all 2^N masks, in increasing order, of
/// (-1)^|mask| f(base + sum of selected members).
template <typename T, typename F>
T alternating_subset_sum_serial(const Matrix<T>& base, const MatrixTuple<T>& s, F&& f) {
    const std::uint64_t count = std::uint64_t{1} << s.size();
    T total = ring_traits<T>::zero();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        T value = f(s.subset_sum(base, mask));
        if (std::popcount(mask) % 2 == 0) {
            total += value;
        } else {
            total -= value;
        }
    }
    return total;
}

/// OpenMP kernel for the same sum. Each of a fixed number of mask blocks is
/// summed serially and the block totals are combined in block order.
template <typename T, typename F>
T alternating_subset_sum(const Matrix<T>& base, const MatrixTuple<T>& s, F&& f, int threads = 1) {
    const std::uint64_t count = std::uint64_t{1} << s.size();
    const std::uint64_t blocks = std::min(count, detail::kSubsetBlocks);
    std::vector<T> partial(blocks, ring_traits<T>::zero());
    const auto nblocks = static_cast<std::int64_t>(blocks);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1) if (threads > 1)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::uint64_t lo = count * static_cast<std::uint64_t>(b) / blocks;
        const std::uint64_t hi = count * static_cast<std::uint64_t>(b + 1) / blocks;
        T acc = ring_traits<T>::zero();
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            T value = f(s.subset_sum(base, mask));
            if (std::popcount(mask) % 2 == 0) {
                acc += value;
            } else {
                acc -= value;
            }
        }
        partial[static_cast<std::size_t>(b)] = std::move(acc);
    }

    T total = ring_traits<T>::zero();
    for (const auto& p : partial) total += p;
    return total;
}

/// sum_{k=0..N} (-1)^k sum_{|Omega|=k} det(A + sum_{A_i in Omega} A_i).
/// Vanishes whenever N >= n + 1.
template <typename T>
Residual<T> theorem1_residual(const Matrix<T>& a, const MatrixTuple<T>& s, int threads = 1) {
    detail::require_compatible(a, s, "theorem1_residual");
    T value = alternating_subset_sum(a, s, [](const Matrix<T>& m) { return determinant(m); }, threads);
    return Residual<T>{std::move(value), a.rows(), s.size(), std::nullopt};
}

/// The same alternating sum restricted to rows x cols of every matrix.
template <typename T>
Residual<T> submatrix_residual(const Matrix<T>& a, const MatrixTuple<T>& s, const IndexSet& rows,
                               const IndexSet& cols, int threads = 1) {
    detail::require_compatible(a, s, "submatrix_residual");
    if (rows.size() != cols.size()) {
        throw input_error("submatrix_residual: |rows| = " + std::to_string(rows.size()) +
                          " but |cols| = " + std::to_string(cols.size()));
    }
    auto r = theorem1_residual(submatrix(a, rows, cols), s.restrict(rows, cols), threads);
    r.tau = rows.size();
    return r;
}

/// Alternating subset sum of S_tau(A + sum Omega). Vanishes whenever N >= tau + 1.
template <typename T>
Residual<T> symm_residual(const Matrix<T>& a, const MatrixTuple<T>& s, std::size_t tau, int threads = 1) {
    detail::require_compatible(a, s, "symm_residual");
    if (tau > a.rows()) {
        throw input_error("symm_residual: tau = " + std::to_string(tau) + " exceeds n = " + std::to_string(a.rows()));
    }
    T value = alternating_subset_sum(a, s, [tau](const Matrix<T>& m) { return symm_k(m, tau); }, threads);
    return Residual<T>{std::move(value), a.rows(), s.size(), tau};
}

/// S_tau(A_1 + ... + A_N) rebuilt from S_tau of the sums over subsets of size
/// 1..tau, weighted by (-1)^j C(j + N - tau - 1, N - tau - 1). Requires N >= tau + 1.
template <typename T>
T reconstruct_symm(const MatrixTuple<T>& s, std::size_t tau) {
    const std::size_t big_n = s.size();
    if (tau == 0) {
        throw precondition_error("reconstruct_symm: tau must be at least 1");
    }
    if (big_n < tau + 1) {
        throw precondition_error("reconstruct_symm: needs N >= tau + 1, got N = " + std::to_string(big_n) +
                                 ", tau = " + std::to_string(tau));
    }
    const std::size_t n = s.dimension();
    const Matrix<T> zero(n, n);
    T total = ring_traits<T>::zero();
    for (std::size_t j = 0; j < tau; ++j) {
        T inner = ring_traits<T>::zero();
        for (const auto& omega : index_subsets(big_n, tau - j)) {
            Matrix<T> sum = zero;
            for (std::size_t i : omega) sum += s[i];
            inner += symm_k(sum, tau);
        }
        const T weight = ring_traits<T>::from_bigint(binomial(j + big_n - tau - 1, big_n - tau - 1));
        T term = T(weight * inner);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

namespace detail {

template <typename T>
void require_same_square(const Matrix<T>& a, const Matrix<T>& b, const char* what) {
    require_square(a, what);
    require_square(b, what);
    if (a.rows() != b.rows()) {
        throw input_error(std::string(what) + ": dimension mismatch " + a.shape_string() + " vs " + b.shape_string());
    }
}

} // namespace detail

/// S_2(A+B) = S_2(A) + S_2(B) + S_1(A)S_1(B) - S_1(AB)
template <typename T>
T s2_of_sum(const Matrix<T>& a, const Matrix<T>& b) {
    detail::require_same_square(a, b, "s2_of_sum");
    const T ta = trace(a), tb = trace(b);
    return T(symm_k(a, 2) + symm_k(b, 2) + ta * tb - trace(Matrix<T>(a * b)));
}

/// S_3(A+B) = S_3(A) + S_3(B) - S_1(A+B)S_1(AB) + S_1(A)S_2(B) + S_1(B)S_2(A)
///          + S_1(A^2 B) + S_1(A B^2)
template <typename T>
T s3_of_sum(const Matrix<T>& a, const Matrix<T>& b) {
    detail::require_same_square(a, b, "s3_of_sum");
    const Matrix<T> ab = a * b;
    const T ta = trace(a), tb = trace(b);
    T out = T(symm_k(a, 3) + symm_k(b, 3));
    out -= T(trace(Matrix<T>(a + b)) * trace(ab));
    out += T(ta * symm_k(b, 2) + tb * symm_k(a, 2));
    out += trace(Matrix<T>(a * ab));
    out += trace(Matrix<T>(ab * b));
    return out;
}

/// S_3(A+B+C): the three-matrix expansion, including both cyclic orders
/// Tr(ABC) and Tr(ACB) and the triple product S_1(A)S_1(B)S_1(C).
template <typename T>
T s3_of_sum3(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    detail::require_same_square(a, b, "s3_of_sum3");
    detail::require_same_square(a, c, "s3_of_sum3");
    const T ta = trace(a), tb = trace(b), tc = trace(c);
    const T s2a = symm_k(a, 2), s2b = symm_k(b, 2), s2c = symm_k(c, 2);
    const Matrix<T> ab = a * b, ac = a * c, bc = b * c;

    T out = T(symm_k(a, 3) + symm_k(b, 3) + symm_k(c, 3));
    out -= T(T(ta + tb + tc) * trace(Matrix<T>(ab + ac + bc)));
    out += T(ta * T(s2b + s2c));
    out += T(tb * T(s2a + s2c));
    out += T(tc * T(s2a + s2b));
    out += trace(Matrix<T>(a * ab));  // A^2 B
    out += trace(Matrix<T>(ab * b));  // A B^2
    out += trace(Matrix<T>(a * ac));  // A^2 C
    out += trace(Matrix<T>(ac * c));  // A C^2
    out += trace(Matrix<T>(b * bc));  // B^2 C
    out += trace(Matrix<T>(bc * c));  // B C^2
    out += trace(Matrix<T>(ab * c));  // ABC
    out += trace(Matrix<T>(ac * b));  // ACB
    out += T(ta * tb * tc);
    return out;
}

/// S_4(A+B) in terms of S_k(A), S_k(B), S_2(AB) and traces of words in A, B.
template <typename T>
T s4_of_sum(const Matrix<T>& a, const Matrix<T>& b) {
    detail::require_same_square(a, b, "s4_of_sum");
    const Matrix<T> ab = a * b;
    const Matrix<T> a2 = a * a, b2 = b * b;
    const T ta = trace(a), tb = trace(b), tab = trace(ab);
    const T ta2b = trace(Matrix<T>(a2 * b));
    const T tab2 = trace(Matrix<T>(a * b2));
    const T s2a = symm_k(a, 2), s2b = symm_k(b, 2);

    T out = T(symm_k(a, 4) + symm_k(b, 4));
    out -= trace(Matrix<T>(a2 * ab));  // A^3 B
    out -= trace(Matrix<T>(a2 * b2));  // A^2 B^2
    out -= trace(Matrix<T>(ab * b2));  // A B^3
    out += T(ta2b * ta + ta2b * tb + tab2 * ta + tab2 * tb);
    out -= T(tab * ta * tb);
    out += T(symm_k(a, 3) * tb + symm_k(b, 3) * ta);
    out += T(s2a * s2b);
    out -= T(s2a * tab + s2b * tab);
    out += symm_k(ab, 2);
    return out;
}

/// Instance showing N >= n + 1 cannot be relaxed: A_i = diag(e_i) for
/// i = 1..n and base A = x diag(e_1). The residual is (-1)^n for every x.
template <typename T>
struct OptimalityWitness {
    Matrix<T> base;
    MatrixTuple<T> tuple;
    Residual<T> residual;
};

template <typename T>
OptimalityWitness<T> optimality_witness(std::size_t n, const T& x, int threads = 1) {
    if (n == 0) throw input_error("optimality_witness: n must be at least 1");
    std::vector<Matrix<T>> members;
    members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<T> e(n, n);
        e(i, i) = ring_traits<T>::one();
        members.push_back(std::move(e));
    }
    Matrix<T> base(n, n);
    base(0, 0) = x;
    MatrixTuple<T> tuple(std::move(members));
    auto residual = theorem1_residual(base, tuple, threads);
    return OptimalityWitness<T>{std::move(base), std::move(tuple), std::move(residual)};
}

} // namespace symmsum
