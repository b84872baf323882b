#include "oracles.hpp"
#include "symmsum/determinant.hpp"
#include "symmsum/random.hpp"
#include "symmsum/subsets.hpp"

#include <doctest.h>

#include <cmath>

using namespace symmsum;
using Q = Rational;
using MQ = Matrix<Rational>;

TEST_CASE("submatrix picks rows and columns in order") {
    const MQ a{{1, 0, 9, 0, -2}, {2, 1, 7, 1, 1}};
    CHECK(submatrix(a, IndexSet{0}, IndexSet{0, 2}) == MQ{{1, 9}});
    CHECK(submatrix(a, IndexSet::full(2), IndexSet::full(5)) == a);

    const MQ b{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(submatrix(b, IndexSet{0, 2}, IndexSet{0, 2}) == MQ{{1, 3}, {7, 9}});
    CHECK(submatrix(b, IndexSet{}, IndexSet{}).rows() == 0);

    CHECK_THROWS_AS(submatrix(b, IndexSet{0, 3}, IndexSet{0, 1}), input_error);
    CHECK_THROWS_AS(IndexSet({2, 1}), input_error);
    CHECK_THROWS_AS(IndexSet({1, 1}), input_error);
}

TEST_CASE("index_subsets enumerates lexicographically") {
    const auto empty = index_subsets(3, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    const auto pairs = index_subsets(3, 2);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == IndexSet{0, 1});
    CHECK(pairs[1] == IndexSet{0, 2});
    CHECK(pairs[2] == IndexSet{1, 2});
    CHECK(index_subsets(5, 2).size() == 10);
    CHECK(index_subsets(0, 0).size() == 1);
    CHECK(index_subsets(4, 4).size() == 1);
    CHECK_THROWS_AS(index_subsets(3, 4), input_error);

    for (std::size_t n = 0; n <= 7; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(BigInt(index_subsets(n, k).size()) == binomial(n, k));
}

TEST_CASE("determinant small cases") {
    const MQ empty(0, 0);
    CHECK(det_permutation(empty) == 1);
    CHECK(det_laplace(empty) == 1);
    CHECK(det_exact(empty) == 1);

    CHECK(det_permutation(MQ::identity(3)) == 1);
    CHECK(det_laplace(MQ::identity(3)) == 1);
    CHECK(det_exact(MQ::identity(5)) == 1);

    const MQ a{{1, 2}, {3, 4}};
    CHECK(det_permutation(a) == -2);
    CHECK(det_laplace(a) == -2);
    CHECK(det_exact(a) == -2);

    CHECK(det_exact(MQ{{1, 2}, {2, 4}}) == 0);
    // zero leading pivot forces a row swap
    CHECK(det_exact(MQ{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == det_permutation(MQ{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}));
    CHECK(det_exact(MQ{{Q(1, 2), Q(1, 3)}, {Q(1, 4), Q(1, 5)}}) == Q(1, 10) - Q(1, 12));
}

TEST_CASE("determinant errors") {
    const MQ rect(2, 3);
    CHECK_THROWS_AS(det_permutation(rect), input_error);
    CHECK_THROWS_AS(det_laplace(rect), input_error);
    CHECK_THROWS_AS(det_exact(rect), input_error);
    CHECK_THROWS_AS(det_permutation(MQ::identity(9)), size_limit_error);
    CHECK_THROWS_AS(det_laplace(MQ::identity(11)), size_limit_error);
    CHECK(det_exact(MQ::identity(30)) == 1);
}

TEST_CASE("three determinant routes agree exactly") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        Rng rng = trial_rng(11, trial);
        const std::size_t n = 1 + trial % 6;
        const MQ a = trial % 2 == 0 ? random_integer_matrix(n, rng) : random_rational_matrix(n, rng);
        const Q p = det_permutation(a);
        CHECK(det_laplace(a) == p);
        CHECK(det_exact(a) == p);
    }
    Rng rng = trial_rng(12, 0);
    const MQ big = random_rational_matrix(8, rng);
    CHECK(det_exact(big) == det_permutation(big));
}

TEST_CASE("determinant algebraic properties") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        Rng rng = trial_rng(21, trial);
        const std::size_t n = 1 + trial % 6;
        const MQ a = random_rational_matrix(n, rng);
        const MQ b = random_integer_matrix(n, rng);
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
        CHECK(det_exact(a.transpose()) == det_exact(a));

        const Q c = random_rational(rng);
        MQ scaled = a;
        const std::size_t row = trial % n;
        for (std::size_t j = 0; j < n; ++j) scaled(row, j) *= c;
        CHECK(det_exact(scaled) == c * det_exact(a));
    }
}

TEST_CASE("float determinant tracks the exact one") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng = trial_rng(31, trial);
        const MQ a = random_integer_matrix(1 + trial % 6, rng);
        const auto af = map_entries<double>(a, [](const Q& q) { return q.get_d(); });
        const double exact = det_exact(a).get_d();
        CHECK(det_float(af) == doctest::Approx(exact).epsilon(1e-9));
    }
    CHECK(det_float(Matrix<double>{{1.0, 2.0}, {2.0, 4.0}}) == 0.0);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Q(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(parse_rational(" 7/3 ") == Q(7, 3));
    CHECK(parse_rational("-4/-2") == 2);
    CHECK(parse_rational("123456789012345678901234567890") * 10 == parse_rational("1234567890123456789012345678900"));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("abc"), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK(rational_from_double(0.375) == Q(3, 8));
    CHECK_THROWS_AS(rational_from_double(std::nan("")), input_error);
}
