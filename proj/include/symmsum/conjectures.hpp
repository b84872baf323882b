#pragma once

#include "symmsum/matpoly.hpp"
#include "symmsum/polynomial.hpp"
#include "symmsum/random.hpp"
#include "symmsum/symm.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace symmsum {

/// Coefficients (c_0, ..., c_d) of a univariate polynomial in t.
template <typename T>
using CoefficientVector = std::vector<T>;

/// S_0..S_kmax only: needs traces of the first kmax powers instead of all n.
template <typename T>
SymmVector<T> symm_upto(const Matrix<T>& a, std::size_t kmax) {
    require_square(a, "symm_upto");
    if (kmax > a.rows()) {
        throw input_error("symm_upto: k = " + std::to_string(kmax) + " exceeds n = " + std::to_string(a.rows()));
    }
    std::vector<T> p;
    p.reserve(kmax);
    if (kmax > 0) {
        Matrix<T> power = a;
        p.push_back(trace(power));
        for (std::size_t j = 2; j <= kmax; ++j) {
            power = power * a;
            p.push_back(trace(power));
        }
    }
    return newton_to_elementary(PowerSumVector<T>{std::move(p)});
}

/// (Tr C_0, ..., Tr C_m) for (A + tB)^m = sum C_k t^k.
template <typename T>
CoefficientVector<T> bmv_coeffs(const Matrix<T>& a, const Matrix<T>& b, unsigned m) {
    const auto p = matpoly_pow(a, b, m);
    CoefficientVector<T> out;
    out.reserve(p.degree() + 1);
    for (const auto& c : p.coeffs()) out.push_back(trace(c));
    return out;
}

/// Coefficients of S_k((A + tB)^m), length k*m + 1, computed by running the
/// Newton-Girard route over the ring of polynomials in t.
template <typename T>
CoefficientVector<T> symm_poly_coeffs(const Matrix<T>& a, const Matrix<T>& b, unsigned m, std::size_t k) {
    require_square(a, "symm_poly_coeffs");
    if (k > a.rows()) {
        throw input_error("symm_poly_coeffs: k = " + std::to_string(k) + " exceeds r = " + std::to_string(a.rows()));
    }
    const auto pm = matpoly_pow(a, b, m).to_poly_matrix();
    const auto s = symm_upto(pm, k);
    return s[k].coeffs_padded(k * m + 1);
}

/// The polynomial of degree <= values.size()-1 through (j, values[j]), j = 0, 1, ...
/// Exact Newton divided differences, expanded to the monomial basis.
Poly<Rational> interpolate_integer_nodes(const std::vector<Rational>& values);

/// Same coefficients as symm_poly_coeffs, obtained by evaluating
/// S_k((A + jB)^m) at j = 0..k*m and interpolating exactly.
CoefficientVector<Rational> symm_poly_coeffs_interpolated(const Matrix<Rational>& a, const Matrix<Rational>& b,
                                                          unsigned m, std::size_t k);

enum class ScanRing { symmetric, hermitian };

std::string to_string(ScanRing ring);
ScanRing parse_scan_ring(const std::string& text);

/// Gram factor of a PSD sample. The float matrix is G^T G (or G^* G);
/// keeping G lets the exact path rebuild the same PSD matrix without rounding.
struct GramSample {
    Matrix<double> real;
    Matrix<double> imag;  // empty for the symmetric ring
};

GramSample gram_factor_random(std::size_t r, ScanRing ring, Rng& rng);

Matrix<double> gram_symmetric(const GramSample& g);
Matrix<std::complex<double>> gram_hermitian(const GramSample& g);

/// G^T G with G uniform on [-1, 1]^{r x r}; exactly symmetric.
Matrix<double> psd_random(std::size_t r, Rng& rng);

/// G^* G with real and imaginary parts of G uniform on [-1, 1]; exactly Hermitian.
Matrix<std::complex<double>> psd_random_hermitian(std::size_t r, Rng& rng);

/// Exact coefficients of S_k((A + tB)^m) for the PSD pair built from Gram
/// factors. Hermitian samples go through the real 2r x 2r embedding.
CoefficientVector<Rational> exact_symm_poly_coeffs(const GramSample& ga, const GramSample& gb, unsigned m,
                                                   std::size_t k);

/// Float coefficients of S_k((A + tB)^m) for the PSD pair built from Gram
/// factors, as the trace coefficients of (sum_j t^j M_j)^m where
/// sum_j t^j M_j is the k-th compound of A + tB. Each M_j is a sum of rank-one
/// PSD terms (Cauchy-Binet on the stacked factor), so no power-sum
/// cancellation occurs. Falls back to Newton-Girard when C(r, k) > 70.
std::vector<double> compound_symm_poly_coeffs(const GramSample& ga, const GramSample& gb, unsigned m, std::size_t k);

struct ScanConfig {
    std::size_t r = 2;
    unsigned m = 2;
    std::vector<std::size_t> ks{1};
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    ScanRing ring = ScanRing::symmetric;
    int threads = 1;  // execution only; not part of the report body

    /// Throws input_error / size_limit_error.
    void validate() const;
};

struct PerKSummary {
    std::size_t k = 0;
    double min_coeff = 0.0;  // min over trials and indices of c_i / max(1, max_j |c_j|)
    std::uint64_t argmin_trial = 0;
    std::string argmin_digest;

    friend bool operator==(const PerKSummary&, const PerKSummary&) = default;
};

struct Violation {
    std::uint64_t trial = 0;
    std::size_t k = 0;
    std::size_t index = 0;
    double value = 0.0;
    std::string exact;  // exact coefficient as "p/q"

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ScanReport {
    ScanConfig config;
    std::vector<PerKSummary> per_k;
    std::vector<Violation> violations;
    std::uint64_t escalations = 0;  // float candidates re-checked on the exact path
    double elapsed_seconds = 0.0;
};

/// Randomized scan; trials run in parallel on config.threads threads.
ScanReport scan(const ScanConfig& config);

/// Single-threaded reference for scan().
ScanReport scan_serial(const ScanConfig& config);

/// FNV-1a digest of the raw bytes of the sampled matrices, as 16 hex digits.
std::string matrix_digest(const std::vector<const Matrix<double>*>& parts);

} // namespace symmsum
