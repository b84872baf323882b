#include "oracles.hpp"
#include "symmsum/conjectures.hpp"
#include "symmsum/matrix_io.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace symmsum;
using Q = Rational;
using MQ = Matrix<Rational>;
using MD = Matrix<double>;
using MC = Matrix<std::complex<double>>;

namespace {

template <typename T>
T horner(const std::vector<T>& c, const T& t) {
    T acc = T(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = T(acc * t + c[i]);
    return acc;
}

MQ rationalize(const MD& m) {
    return map_entries<Q>(m, [](double x) { return rational_from_double(x); });
}

} // namespace

TEST_CASE("matpoly_mul") {
    const MQ a = MQ::diagonal({1, 0}), b = MQ::diagonal({0, 1});
    const auto lin = MatrixPolynomial<Q>::linear(a, b);
    const auto one = MatrixPolynomial<Q>::identity(2);
    const auto p1 = matpoly_mul(lin, one);
    REQUIRE(p1.degree() == 1);
    CHECK(p1[0] == a);
    CHECK(p1[1] == b);

    const auto sq = matpoly_mul(lin, lin);
    REQUIRE(sq.degree() == 2);
    CHECK(sq[0] == a);
    CHECK(sq[1] == MQ(2, 2));
    CHECK(sq[2] == b);

    Rng rng = trial_rng(200, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixPolynomial<Q> p({random_integer_matrix(3, rng), random_integer_matrix(3, rng),
                                     random_integer_matrix(3, rng)});
        const MatrixPolynomial<Q> q({random_integer_matrix(3, rng), random_rational_matrix(3, rng)});
        const auto pq = matpoly_mul(p, q);
        CHECK(pq.degree() == 3);
        for (const Q& t : {Q(2), Q(-1, 3), random_rational(rng)}) {
            CHECK(pq.evaluate(t) == p.evaluate(t) * q.evaluate(t));
        }
    }
    CHECK_THROWS_AS(matpoly_mul(lin, MatrixPolynomial<Q>::identity(3)), input_error);
}

TEST_CASE("matpoly_pow") {
    Rng rng = trial_rng(201, 0);
    const MQ a = random_integer_matrix(3, rng), b = random_integer_matrix(3, rng);

    const auto p0 = matpoly_pow(a, b, 0);
    CHECK(p0.degree() == 0);
    CHECK(p0[0] == MQ::identity(3));

    const auto p2 = matpoly_pow(a, b, 2);
    CHECK(p2[0] == a * a);
    CHECK(p2[1] == a * b + b * a);
    CHECK(p2[2] == b * b);

    const MQ sa = a + a.transpose(), sb = b + b.transpose();
    const auto p3 = matpoly_pow(sa, sb, 3);
    CHECK(p3[2] == sa * sb * sb + sb * sa * sb + sb * sb * sa);
    CHECK(trace(p3[2]) == 3 * trace(MQ(sa * sb * sb)));

    for (unsigned m = 0; m <= 5; ++m) {
        const MQ x = random_rational_matrix(3, rng), y = random_integer_matrix(3, rng);
        const auto p = matpoly_pow(x, y, m);
        const auto words = oracle::word_expansion(x, y, m);
        REQUIRE(p.degree() == m);
        for (unsigned i = 0; i <= m; ++i) CHECK(p[i] == words[i]);
    }
    CHECK_THROWS_AS(matpoly_pow(a, MQ::identity(2), 2), input_error);
}

TEST_CASE("bmv_coeffs") {
    CHECK(bmv_coeffs(MQ::diagonal({1, 0}), MQ::diagonal({0, 1}), 3) == std::vector<Q>{1, 0, 0, 1});
    CHECK(bmv_coeffs(MQ::identity(2), MQ::identity(2), 2) == std::vector<Q>{2, 4, 2});

    Rng rng = trial_rng(202, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned m = 1 + trial % 5;
        const MQ a = random_rational_matrix(3, rng), b = random_integer_matrix(3, rng);
        const auto c = bmv_coeffs(a, b, m);
        REQUIRE(c.size() == m + 1);
        for (int j = 0; j < 5; ++j) {
            const Q t = random_rational(rng);
            CHECK(horner(c, t) == trace(matrix_power(MQ(a + t * b), m)));
        }
        const auto swapped = bmv_coeffs(b, a, m);
        for (unsigned k = 0; k <= m; ++k) CHECK(c[k] == swapped[m - k]);

        const Q lambda = random_rational(rng);
        if (lambda != 0) {
            const auto scaled = bmv_coeffs(a, MQ(lambda * b), m);
            Q power = 1;
            for (unsigned k = 0; k <= m; ++k, power *= lambda) CHECK(scaled[k] == power * c[k]);
        }
    }
}

TEST_CASE("symm_poly_coeffs: examples") {
    Rng rng = trial_rng(203, 0);
    const MQ a = random_integer_matrix(3, rng), b = random_integer_matrix(3, rng);
    CHECK(symm_poly_coeffs(a, b, 4, 0) == std::vector<Q>{1});
    CHECK(symm_poly_coeffs_interpolated(a, b, 4, 0) == std::vector<Q>{1});
    for (unsigned m = 0; m <= 4; ++m) CHECK(symm_poly_coeffs(a, b, m, 1) == bmv_coeffs(a, b, m));

    const MQ p{{1, 1}, {1, 1}}, q{{1, -1}, {-1, 1}};
    CHECK(symm_poly_coeffs(p, q, 1, 2) == std::vector<Q>{0, 4, 0});
    CHECK(symm_poly_coeffs_interpolated(p, q, 1, 2) == std::vector<Q>{0, 4, 0});

    CHECK_THROWS_AS(symm_poly_coeffs(a, b, 2, 4), input_error);
    CHECK_THROWS_AS(symm_poly_coeffs_interpolated(a, b, 2, 4), input_error);
    CHECK_THROWS_AS(symm_poly_coeffs(a, MQ::identity(2), 2, 1), input_error);
}

TEST_CASE("symm_poly_coeffs: convolution and interpolation agree") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng = trial_rng(204, trial);
        const std::size_t r = 1 + trial % 3;
        const unsigned m = trial % 6;
        const MQ a = random_rational_matrix(r, rng), b = random_rational_matrix(r, rng);
        for (std::size_t k = 0; k <= r; ++k) {
            const auto c = symm_poly_coeffs(a, b, m, k);
            CHECK(c.size() == k * m + 1);
            CHECK(c == symm_poly_coeffs_interpolated(a, b, m, k));
            const Q t = random_rational(rng);
            CHECK(horner(c, t) == symm_k(matrix_power(MQ(a + t * b), m), k));
        }
    }
}

TEST_CASE("symm_poly_coeffs: m = 1, k = n is det(A + tB)") {
    Rng rng = trial_rng(205, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const MQ a = random_integer_matrix(2, rng), b = random_integer_matrix(2, rng);
        const auto c = symm_poly_coeffs(a, b, 1, 2);
        CHECK(c[0] == det_exact(a));
        CHECK(c[2] == det_exact(b));
        // t^1 term of det(A + tB) for 2x2: a11 b22 + a22 b11 - a12 b21 - a21 b12.
        CHECK(c[1] == a(0, 0) * b(1, 1) + a(1, 1) * b(0, 0) - a(0, 1) * b(1, 0) - a(1, 0) * b(0, 1));
    }
}

TEST_CASE("interpolate_integer_nodes") {
    const Poly<Q> p(std::vector<Q>{Q(3), Q(-1, 2), Q(0), Q(7)});
    std::vector<Q> values;
    for (int j = 0; j < 6; ++j) values.push_back(p.evaluate(Q(j)));
    CHECK(interpolate_integer_nodes(values) == p);
    CHECK(interpolate_integer_nodes({Q(5)}) == Poly<Q>(std::vector<Q>{Q(5)}));
}

TEST_CASE("float coefficients track the exact ones") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng = trial_rng(206, trial);
        const MD a = psd_random(3, rng), b = psd_random(3, rng);
        const unsigned m = 2 + trial % 3;
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto f = symm_poly_coeffs(a, b, m, k);
            const auto e = symm_poly_coeffs(rationalize(a), rationalize(b), m, k);
            double scale = 1.0;
            for (const Q& x : e) scale = std::max(scale, std::abs(x.get_d()));
            for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(f[i] - e[i].get_d()) <= 1e-10 * scale);

            const double t = 0.37;
            const double direct = symm_k(matrix_power(MD(a + t * b), m), k);
            CHECK(std::abs(horner(f, t) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("psd samples") {
    Rng rng = trial_rng(207, 0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::size_t r = 1; r <= 4; ++r) {
        const MD x = psd_random(r, rng);
        CHECK(x == x.transpose());
        for (std::size_t i = 0; i < r; ++i) CHECK(x(i, i) >= 0.0);
        for (int j = 0; j < 100; ++j) {
            std::vector<double> v(r);
            for (auto& e : v) e = unit(rng);
            double form = 0.0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t l = 0; l < r; ++l) form += v[i] * x(i, l) * v[l];
            CHECK(form >= -1e-12);
        }

        const MC h = psd_random_hermitian(r, rng);
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(h(i, i).imag() == 0.0);
            CHECK(h(i, i).real() >= 0.0);
            for (std::size_t l = 0; l < r; ++l) CHECK(h(i, l) == std::conj(h(l, i)));
        }
        for (int j = 0; j < 100; ++j) {
            std::vector<std::complex<double>> v(r);
            for (auto& e : v) e = {unit(rng), unit(rng)};
            std::complex<double> form = 0.0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t l = 0; l < r; ++l) form += std::conj(v[i]) * h(i, l) * v[l];
            CHECK(form.real() >= -1e-12);
        }
    }
    CHECK_THROWS_AS(psd_random(0, rng), input_error);
}

TEST_CASE("exact escalation reproduces the sampled PSD pair") {
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        Rng rng = trial_rng(208, trial);
        const auto ga = gram_factor_random(3, ScanRing::symmetric, rng);
        const auto gb = gram_factor_random(3, ScanRing::symmetric, rng);
        const MQ ra = rationalize(ga.real), rb = rationalize(gb.real);
        const auto exact = exact_symm_poly_coeffs(ga, gb, 3, 2);
        CHECK(exact == symm_poly_coeffs(MQ(ra.transpose() * ra), MQ(rb.transpose() * rb), 3, 2));
    }
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        Rng rng = trial_rng(209, trial);
        auto ga = gram_factor_random(2, ScanRing::hermitian, rng);
        auto gb = gram_factor_random(2, ScanRing::hermitian, rng);
        for (std::size_t k = 0; k <= 2; ++k) {
            const auto exact = exact_symm_poly_coeffs(ga, gb, 2, k);
            const auto f = symm_poly_coeffs(gram_hermitian(ga), gram_hermitian(gb), 2, k);
            REQUIRE(exact.size() == f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                CHECK(std::abs(f[i].imag()) < 1e-10);
                CHECK(std::abs(f[i].real() - exact[i].get_d()) < 1e-10 * std::max(1.0, std::abs(exact[i].get_d())));
            }
        }
        // Zero imaginary part: same answer as the symmetric route.
        ga.imag = MD(2, 2);
        gb.imag = MD(2, 2);
        GramSample sa{ga.real, MD()}, sb{gb.real, MD()};
        for (std::size_t k = 0; k <= 2; ++k) CHECK(exact_symm_poly_coeffs(ga, gb, 3, k) == exact_symm_poly_coeffs(sa, sb, 3, k));
    }
}

TEST_CASE("scan: 1x1 case") {
    ScanConfig cfg;
    cfg.r = 1;
    cfg.m = 1;
    cfg.ks = {1};
    cfg.trials = 1;
    cfg.seed = 99;
    const auto report = scan(cfg);
    REQUIRE(report.per_k.size() == 1);
    CHECK(report.per_k[0].k == 1);
    CHECK(report.per_k[0].min_coeff >= 0.0);
    CHECK(report.violations.empty());

}

TEST_CASE("scan: small grids report no violations") {
    for (const auto ring : {ScanRing::symmetric, ScanRing::hermitian}) {
        ScanConfig cfg;
        cfg.r = 3;
        cfg.m = 4;
        cfg.ks = {0, 1, 2, 3};
        cfg.trials = 60;
        cfg.seed = 5;
        cfg.ring = ring;
        const auto report = scan(cfg);
        CHECK(report.violations.empty());
        REQUIRE(report.per_k.size() == 4);
        CHECK(report.per_k[0].min_coeff == 1.0);
        for (const auto& s : report.per_k) {
            CHECK(s.min_coeff >= -1e-9);
            CHECK(s.argmin_digest.size() == 16);
        }
    }
}

TEST_CASE("scan: thread count does not change the report body") {
    ScanConfig cfg;
    cfg.r = 3;
    cfg.m = 5;
    cfg.ks = {1, 2, 3};
    cfg.trials = 80;
    cfg.seed = 11;
    cfg.threads = 1;
    const auto one = scan(cfg);
    cfg.threads = 4;
    const auto four = scan(cfg);
    const auto serial = scan_serial(cfg);
    CHECK(scan_report_body(one) == scan_report_body(four));
    CHECK(scan_report_body(one) == scan_report_body(serial));
    CHECK(one.per_k == four.per_k);

    cfg.seed = 12;
    CHECK(scan_report_body(scan(cfg)) != scan_report_body(one));
}

TEST_CASE("scan config validation") {
    ScanConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    auto bad = cfg;
    bad.r = 0;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.ks = {3};
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.ks = {};
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.tolerance = -1.0;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.r = 17;
    CHECK_THROWS_AS(bad.validate(), size_limit_error);
    CHECK_THROWS_AS(scan(bad), size_limit_error);

    CHECK(parse_scan_ring("hermitian") == ScanRing::hermitian);
    CHECK(parse_scan_ring(to_string(ScanRing::symmetric)) == ScanRing::symmetric);
    CHECK_THROWS_AS(parse_scan_ring("complex"), input_error);
}

TEST_CASE("matrix_digest") {
    const MD a{{1.0, 2.0}, {3.0, 4.0}};
    const MD b{{1.0, 2.0}, {3.0, 4.0000001}};
    CHECK(matrix_digest({&a}) == matrix_digest({&a}));
    CHECK(matrix_digest({&a}) != matrix_digest({&b}));
    CHECK(matrix_digest({&a, &b}) != matrix_digest({&b, &a}));
    CHECK(matrix_digest({&a}).size() == 16);
}

TEST_CASE("compound route matches the exact coefficients") {
    for (const auto ring : {ScanRing::symmetric, ScanRing::hermitian}) {
        for (std::uint64_t trial = 0; trial < 12; ++trial) {
            Rng rng = trial_rng(210, trial);
            const std::size_t r = 1 + trial % 4;
            const unsigned m = 1 + trial % 5;
            const auto ga = gram_factor_random(r, ring, rng);
            const auto gb = gram_factor_random(r, ring, rng);
            for (std::size_t k = 0; k <= r; ++k) {
                const auto f = compound_symm_poly_coeffs(ga, gb, m, k);
                const auto e = exact_symm_poly_coeffs(ga, gb, m, k);
                REQUIRE(f.size() == e.size());
                for (std::size_t i = 0; i < e.size(); ++i) {
                    // Relative to each coefficient, not just the polynomial's scale.
                    CHECK(std::abs(f[i] - e[i].get_d()) <= 1e-10 * std::abs(e[i].get_d()) + 1e-300);
                }
            }
        }
    }
    Rng rng = trial_rng(211, 0);
    const auto ga = gram_factor_random(2, ScanRing::symmetric, rng);
    CHECK_THROWS_AS(compound_symm_poly_coeffs(ga, ga, 2, 3), input_error);
}
