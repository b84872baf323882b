#include "oracles.hpp"
#include "symmsum/polynomial.hpp"
#include "symmsum/random.hpp"
#include "symmsum/symm.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace symmsum;
using Q = Rational;
using MQ = Matrix<Rational>;

namespace {

std::vector<Q> qs(std::initializer_list<long> v) {
    std::vector<Q> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

MQ permutation_matrix(const std::vector<std::size_t>& perm) {
    MQ p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
    return p;
}

} // namespace

TEST_CASE("symm_minors examples") {
    const MQ d = MQ::diagonal({1, 2, 3});
    CHECK(symm_minors(d, 2) == 11);
    CHECK(symm_minors(d, 0) == 1);
    Rng rng = trial_rng(5, 0);
    const MQ a = random_rational_matrix(4, rng);
    CHECK(symm_minors(a, 4) == det_exact(a));
    CHECK(symm_minors(a, 1) == trace(a));
    CHECK_THROWS_AS(symm_minors(a, 5), input_error);
    CHECK_THROWS_AS(symm_minors(MQ(2, 3), 1), input_error);
}

TEST_CASE("symm_all examples") {
    CHECK(symm_all(MQ::identity(3)).values == qs({1, 3, 3, 1}));
    CHECK(symm_all(MQ::diagonal({1, 2, 3})).values == qs({1, 6, 11, 6}));
    CHECK(symm_all(MQ(0, 0)).values == qs({1}));
    CHECK_THROWS_AS(symm_all(MQ(3, 2)), input_error);
}

TEST_CASE("symm_all on diagonal matrices matches e_k of the diagonal") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng = trial_rng(6, trial);
        std::vector<Q> diag;
        for (std::size_t i = 0; i < 1 + trial % 6; ++i) diag.push_back(random_rational(rng));
        const auto s = symm_all(MQ::diagonal(std::span<const Q>(diag)));
        for (std::size_t k = 0; k <= diag.size(); ++k) CHECK(s[k] == oracle::elementary_of_values(diag, k));
    }
}

TEST_CASE("principal minors and trace recurrence agree") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        Rng rng = trial_rng(7, trial);
        const std::size_t n = 1 + trial % 6;
        const MQ a = random_rational_matrix(n, rng);
        const auto s = symm_all(a);
        REQUIRE(s.values.size() == n + 1);
        CHECK(s[0] == 1);
        CHECK(s[1] == trace(a));
        for (std::size_t k = 0; k <= n; ++k) CHECK(symm_minors(a, k) == s[k]);
    }
}

TEST_CASE("S_k is invariant under permutation similarity") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng = trial_rng(8, trial);
        const std::size_t n = 2 + trial % 4;
        const MQ a = random_integer_matrix(n, rng);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const MQ p = permutation_matrix(perm);
        CHECK(symm_all(MQ(p * a * p.transpose())) == symm_all(a));
    }
}

TEST_CASE("charpoly coefficients") {
    CHECK(charpoly_coeffs(MQ::identity(2)) == qs({1, -2, 1}));
    CHECK(charpoly_coeffs(MQ::diagonal({1, 2, 3})) == qs({-6, 11, -6, 1}));

    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng = trial_rng(9, trial);
        const std::size_t n = 1 + trial % 5;
        const MQ a = random_rational_matrix(n, rng);
        const Poly<Q> chi(charpoly_coeffs(a));
        CHECK(chi.evaluate(Q(5)) == det_exact(MQ(Q(5) * MQ::identity(n) - a)));
        for (int i = 0; i < 5; ++i) {
            const Q t0 = random_rational(rng);
            CHECK(chi.evaluate(t0) == det_exact(MQ(t0 * MQ::identity(n) - a)));
        }
    }
}

TEST_CASE("Newton-Girard conversions") {
    CHECK(newton_to_elementary(PowerSumVector<Q>{qs({7})}).values == qs({1, 7}));
    CHECK(newton_to_elementary(PowerSumVector<Q>{qs({6, 14, 36})}).values == qs({1, 6, 11, 6}));
    CHECK(elementary_to_newton(SymmVector<Q>{qs({1, 6, 11, 6})}).values == qs({6, 14, 36}));
    CHECK(elementary_to_newton(symm_all(MQ::identity(4))).values == qs({4, 4, 4, 4}));

    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng = trial_rng(10, trial);
        const std::size_t n = 3 + trial % 4;
        std::vector<Q> e{Q(1)};
        for (std::size_t i = 0; i < n; ++i) e.push_back(random_rational(rng));
        const SymmVector<Q> ev{e};
        const auto p = elementary_to_newton(ev);
        CHECK(newton_to_elementary(p) == ev);
        // p_2 = e_1^2 - 2 e_2 and p_3 = e_1^3 - 3 e_1 e_2 + 3 e_3
        CHECK(p.at(2) == e[1] * e[1] - 2 * e[2]);
        CHECK(p.at(3) == e[1] * e[1] * e[1] - 3 * e[1] * e[2] + 3 * e[3]);

        const MQ a = random_integer_matrix(n, rng);
        const auto s = symm_all(a);
        CHECK(trace(MQ(a * a)) == s[1] * s[1] - 2 * s[2]);
        CHECK(power_sums(a) == elementary_to_newton(s));
    }
}

TEST_CASE("symm_all over a polynomial ring") {
    // diag(1 + t, 2 - t): S_1 = 3, S_2 = (1 + t)(2 - t) = 2 + t - t^2
    Matrix<Poly<Q>> m(2, 2);
    m(0, 0) = Poly<Q>{Q(1), Q(1)};
    m(1, 1) = Poly<Q>{Q(2), Q(-1)};
    const auto s = symm_all(m);
    CHECK(s[1] == Poly<Q>{Q(3)});
    CHECK(s[2] == Poly<Q>{Q(2), Q(1), Q(-1)});
    CHECK(det_laplace(m) == s[2]);
}

TEST_CASE("symm_k pads with zero above the dimension") {
    const MQ a = MQ::identity(2);
    CHECK(symm_k(a, 3) == 0);
    CHECK(symm_k(a, 2) == 1);
    CHECK(symm_k(a, 0) == 1);
}
