#include "symmsum/conjectures.hpp"

#include "symmsum/determinant.hpp"
#include "symmsum/errors.hpp"
#include "symmsum/subsets.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <type_traits>
#include <limits>

namespace symmsum {

Poly<Rational> interpolate_integer_nodes(const std::vector<Rational>& values) {
    if (values.empty()) return Poly<Rational>();
    const std::size_t d = values.size() - 1;
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level <= d; ++level) {
        for (std::size_t i = d; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
        }
    }
    Poly<Rational> p = Poly<Rational>::constant(dd[d]);
    for (std::size_t i = d; i-- > 0;) {
        p = p * Poly<Rational>{Rational(-static_cast<long>(i)), Rational(1)} + Poly<Rational>::constant(dd[i]);
    }
    return p;
}

CoefficientVector<Rational> symm_poly_coeffs_interpolated(const Matrix<Rational>& a, const Matrix<Rational>& b,
                                                          unsigned m, std::size_t k) {
    require_square(a, "symm_poly_coeffs_interpolated");
    require_square(b, "symm_poly_coeffs_interpolated");
    if (a.rows() != b.rows()) throw input_error("symm_poly_coeffs_interpolated: dimension mismatch");
    if (k > a.rows()) {
        throw input_error("symm_poly_coeffs_interpolated: k = " + std::to_string(k) + " exceeds r = " +
                          std::to_string(a.rows()));
    }
    const std::size_t degree = k * m;
    std::vector<Rational> values;
    values.reserve(degree + 1);
    for (std::size_t j = 0; j <= degree; ++j) {
        const Matrix<Rational> at = a + Rational(static_cast<long>(j)) * b;
        values.push_back(symm_upto(matrix_power(at, m), k)[k]);
    }
    return interpolate_integer_nodes(values).coeffs_padded(degree + 1);
}

std::string to_string(ScanRing ring) { return ring == ScanRing::symmetric ? "symmetric" : "hermitian"; }

ScanRing parse_scan_ring(const std::string& text) {
    if (text == "symmetric" || text == "float-symmetric") return ScanRing::symmetric;
    if (text == "hermitian" || text == "float-hermitian") return ScanRing::hermitian;
    throw input_error("unknown scan ring '" + text + "' (expected symmetric or hermitian)");
}

GramSample gram_factor_random(std::size_t r, ScanRing ring, Rng& rng) {
    if (r < 1) throw input_error("psd sample: r must be at least 1");
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GramSample g{Matrix<double>(r, r), Matrix<double>()};
    if (ring == ScanRing::hermitian) g.imag = Matrix<double>(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            g.real(i, j) = unit(rng);
            if (ring == ScanRing::hermitian) g.imag(i, j) = unit(rng);
        }
    }
    return g;
}

Matrix<double> gram_symmetric(const GramSample& g) {
    const std::size_t r = g.real.rows();
    Matrix<double> x(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            double acc = 0.0;
            for (std::size_t l = 0; l < r; ++l) acc += g.real(l, i) * g.real(l, j);
            x(i, j) = acc;
            x(j, i) = acc;
        }
    }
    return x;
}

Matrix<std::complex<double>> gram_hermitian(const GramSample& g) {
    using C = std::complex<double>;
    const std::size_t r = g.real.rows();
    Matrix<C> x(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            C acc(0.0, 0.0);
            for (std::size_t l = 0; l < r; ++l) {
                acc += std::conj(C(g.real(l, i), g.imag(l, i))) * C(g.real(l, j), g.imag(l, j));
            }
            if (i == j) acc = C(acc.real(), 0.0);
            x(i, j) = acc;
            x(j, i) = std::conj(acc);
        }
    }
    return x;
}

Matrix<double> psd_random(std::size_t r, Rng& rng) {
    return gram_symmetric(gram_factor_random(r, ScanRing::symmetric, rng));
}

Matrix<std::complex<double>> psd_random_hermitian(std::size_t r, Rng& rng) {
    return gram_hermitian(gram_factor_random(r, ScanRing::hermitian, rng));
}

namespace {

Matrix<Rational> rationalize(const Matrix<double>& m) {
    return map_entries<Rational>(m, [](double x) { return rational_from_double(x); });
}

/// Real form [[P, -Q], [Q, P]] of P + iQ.
Matrix<Rational> real_embedding(const GramSample& g) {
    const std::size_t r = g.real.rows();
    Matrix<Rational> out(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const Rational p = rational_from_double(g.real(i, j));
            const Rational q = rational_from_double(g.imag(i, j));
            out(i, j) = p;
            out(i + r, j + r) = p;
            out(i, j + r) = -q;
            out(i + r, j) = q;
        }
    }
    return out;
}

} // namespace

CoefficientVector<Rational> exact_symm_poly_coeffs(const GramSample& ga, const GramSample& gb, unsigned m,
                                                   std::size_t k) {
    const bool hermitian = ga.imag.rows() != 0;
    if (!hermitian) {
        const Matrix<Rational> fa = rationalize(ga.real);
        const Matrix<Rational> fb = rationalize(gb.real);
        return symm_poly_coeffs(Matrix<Rational>(fa.transpose() * fa), Matrix<Rational>(fb.transpose() * fb), m, k);
    }
    // Each eigenvalue of the Hermitian matrix appears twice in the embedding,
    // so the embedded E_j satisfy E_j = sum_{i=0..j} e_i e_{j-i}.
    const Matrix<Rational> fa = real_embedding(ga);
    const Matrix<Rational> fb = real_embedding(gb);
    const auto pm = matpoly_pow(Matrix<Rational>(fa.transpose() * fa), Matrix<Rational>(fb.transpose() * fb), m)
                        .to_poly_matrix();
    const auto big_e = symm_upto(pm, k);
    std::vector<Poly<Rational>> e{ring_traits<Poly<Rational>>::one()};
    for (std::size_t j = 1; j <= k; ++j) {
        Poly<Rational> acc = big_e[j];
        for (std::size_t i = 1; i < j; ++i) acc -= e[i] * e[j - i];
        e.push_back(ring_traits<Poly<Rational>>::divide_by_int(acc, 2));
    }
    return e[k].coeffs_padded(k * m + 1);
}

namespace {

constexpr std::size_t kMaxCompoundDimension = 70;

template <typename T>
double real_part(const T& x) {
    if constexpr (std::is_same_v<T, double>) {
        return x;
    } else {
        return x.real();
    }
}

template <typename T>
T conjugate(const T& x) {
    if constexpr (std::is_same_v<T, double>) {
        return x;
    } else {
        return std::conj(x);
    }
}

/// [G_a; G_b] as a 2r x r matrix over T.
template <typename T>
Matrix<T> stacked_factor(const GramSample& ga, const GramSample& gb) {
    const std::size_t r = ga.real.rows();
    Matrix<T> h(2 * r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if constexpr (std::is_same_v<T, double>) {
                h(i, j) = ga.real(i, j);
                h(i + r, j) = gb.real(i, j);
            } else {
                h(i, j) = T(ga.real(i, j), ga.imag(i, j));
                h(i + r, j) = T(gb.real(i, j), gb.imag(i, j));
            }
        }
    }
    return h;
}

template <typename T>
std::vector<double> compound_coeffs(const GramSample& ga, const GramSample& gb, unsigned m, std::size_t k) {
    const std::size_t r = ga.real.rows();
    const Matrix<T> h = stacked_factor<T>(ga, gb);
    const auto cols = index_subsets(r, k);
    const std::size_t d = cols.size();
    std::vector<Matrix<T>> pencil(k + 1, Matrix<T>(d, d));
    std::vector<T> v(d);
    for (const auto& rows : index_subsets(2 * r, k)) {
        std::size_t from_b = 0;
        for (std::size_t i : rows) from_b += i >= r;
        for (std::size_t c = 0; c < d; ++c) v[c] = det_float(submatrix(h, rows, cols[c]));
        Matrix<T>& mj = pencil[from_b];
        for (std::size_t p = 0; p < d; ++p) {
            const T cp = conjugate(v[p]);
            for (std::size_t q = 0; q < d; ++q) mj(p, q) += cp * v[q];
        }
    }
    const MatrixPolynomial<T> step(std::move(pencil));
    auto power = MatrixPolynomial<T>::identity(d);
    for (unsigned i = 0; i < m; ++i) power = matpoly_mul(power, step);
    std::vector<double> out;
    out.reserve(k * m + 1);
    for (const auto& c : power.coeffs()) out.push_back(real_part(trace(c)));
    return out;
}

template <typename T>
std::vector<double> newton_coeffs(const Matrix<T>& a, const Matrix<T>& b, unsigned m, std::size_t k) {
    std::vector<double> out;
    for (const auto& x : symm_poly_coeffs(a, b, m, k)) out.push_back(real_part(x));
    return out;
}

} // namespace

std::vector<double> compound_symm_poly_coeffs(const GramSample& ga, const GramSample& gb, unsigned m,
                                              std::size_t k) {
    const std::size_t r = ga.real.rows();
    if (gb.real.rows() != r) throw input_error("compound_symm_poly_coeffs: dimension mismatch");
    if (k > r) {
        throw input_error("compound_symm_poly_coeffs: k = " + std::to_string(k) + " exceeds r = " +
                          std::to_string(r));
    }
    if (k == 0) return {1.0};
    const bool hermitian = ga.imag.rows() != 0;
    if (binomial(r, k) > kMaxCompoundDimension) {
        if (hermitian) return newton_coeffs(gram_hermitian(ga), gram_hermitian(gb), m, k);
        return newton_coeffs(gram_symmetric(ga), gram_symmetric(gb), m, k);
    }
    if (hermitian) return compound_coeffs<std::complex<double>>(ga, gb, m, k);
    return compound_coeffs<double>(ga, gb, m, k);
}

void ScanConfig::validate() const {
    if (r < 1) throw input_error("scan: r must be at least 1");
    if (m < 1) throw input_error("scan: m must be at least 1");
    if (trials < 1) throw input_error("scan: trials must be at least 1");
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) throw input_error("scan: tolerance must be finite and >= 0");
    if (ks.empty()) throw input_error("scan: k-range is empty");
    for (std::size_t k : ks) {
        if (k > r) throw input_error("scan: k = " + std::to_string(k) + " exceeds r = " + std::to_string(r));
    }
    if (r > 16 || m > 64 || r * m > 256) {
        throw size_limit_error("scan: r = " + std::to_string(r) + ", m = " + std::to_string(m) +
                               " exceeds the limits r <= 16, m <= 64, r*m <= 256");
    }
}

std::string matrix_digest(const std::vector<const Matrix<double>*>& parts) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto* m : parts) {
        for (double x : m->data()) {
            unsigned char bytes[sizeof(double)];
            std::memcpy(bytes, &x, sizeof(double));
            for (unsigned char c : bytes) {
                h ^= c;
                h *= 0x100000001b3ull;
            }
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct TrialOutcome {
    std::vector<double> min_norm;  // one per entry of config.ks
    std::vector<Violation> violations;
    std::uint64_t escalations = 0;
    std::string digest;
};

double coefficient_scale(const std::vector<double>& c) {
    double s = 1.0;
    for (double x : c) s = std::max(s, std::abs(x));
    return s;
}

TrialOutcome run_trial(const ScanConfig& cfg, std::uint64_t trial) {
    Rng rng = trial_rng(cfg.seed, trial);
    const GramSample ga = gram_factor_random(cfg.r, cfg.ring, rng);
    const GramSample gb = gram_factor_random(cfg.r, cfg.ring, rng);

    TrialOutcome out;
    std::vector<std::vector<double>> coeffs;
    if (cfg.ring == ScanRing::symmetric) {
        const auto a = gram_symmetric(ga);
        const auto b = gram_symmetric(gb);
        out.digest = matrix_digest({&a, &b});
    } else {
        const auto a = gram_hermitian(ga);
        const auto b = gram_hermitian(gb);
        const auto re = [](const std::complex<double>& z) { return z.real(); };
        const auto im = [](const std::complex<double>& z) { return z.imag(); };
        const auto ar = map_entries<double>(a, re), ai = map_entries<double>(a, im);
        const auto br = map_entries<double>(b, re), bi = map_entries<double>(b, im);
        out.digest = matrix_digest({&ar, &ai, &br, &bi});
    }
    for (std::size_t k : cfg.ks) coeffs.push_back(compound_symm_poly_coeffs(ga, gb, cfg.m, k));

    for (std::size_t idx = 0; idx < cfg.ks.size(); ++idx) {
        const std::size_t k = cfg.ks[idx];
        std::vector<double>& c = coeffs[idx];
        double scale = coefficient_scale(c);
        const bool suspicious = std::any_of(c.begin(), c.end(), [&](double x) { return x < -cfg.tolerance * scale; });
        if (suspicious) {
            // Float noise or a genuine counterexample: settle it exactly.
            ++out.escalations;
            const auto exact = exact_symm_poly_coeffs(ga, gb, cfg.m, k);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = exact[i].get_d();
            scale = coefficient_scale(c);
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] < -cfg.tolerance * scale) {
                    out.violations.push_back(Violation{trial, k, i, c[i], to_string(exact[i])});
                }
            }
        }
        double lo = std::numeric_limits<double>::infinity();
        for (double x : c) lo = std::min(lo, x / scale);
        out.min_norm.push_back(lo);
    }
    return out;
}

ScanReport aggregate(const ScanConfig& cfg, const std::vector<TrialOutcome>& outcomes) {
    ScanReport report;
    report.config = cfg;
    for (std::size_t idx = 0; idx < cfg.ks.size(); ++idx) {
        PerKSummary s;
        s.k = cfg.ks[idx];
        s.min_coeff = std::numeric_limits<double>::infinity();
        for (std::uint64_t t = 0; t < outcomes.size(); ++t) {
            if (outcomes[t].min_norm[idx] < s.min_coeff) {
                s.min_coeff = outcomes[t].min_norm[idx];
                s.argmin_trial = t;
                s.argmin_digest = outcomes[t].digest;
            }
        }
        report.per_k.push_back(std::move(s));
    }
    for (const auto& o : outcomes) {
        report.violations.insert(report.violations.end(), o.violations.begin(), o.violations.end());
        report.escalations += o.escalations;
    }
    return report;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

ScanReport scan_serial(const ScanConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes;
    outcomes.reserve(config.trials);
    for (std::uint64_t t = 0; t < config.trials; ++t) outcomes.push_back(run_trial(config, t));
    ScanReport report = aggregate(config, outcomes);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

ScanReport scan(const ScanConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(config.trials);
    const auto trials = static_cast<std::int64_t>(config.trials);
    const int threads = std::max(1, config.threads);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t t = 0; t < trials; ++t) {
        outcomes[static_cast<std::size_t>(t)] = run_trial(config, static_cast<std::uint64_t>(t));
    }
    ScanReport report = aggregate(config, outcomes);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

} // namespace symmsum
