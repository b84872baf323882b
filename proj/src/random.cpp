#include "symmsum/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace symmsum {

Rng trial_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x5eedu};
    return Rng(seq);
}

Matrix<Rational> random_integer_matrix(std::size_t n, Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(dist(rng));
    return m;
}

Rational random_rational(Rng& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    const long p = num(rng);
    const long q = den(rng);
    Rational r{BigInt(p), BigInt(q)};
    r.canonicalize();
    return r;
}

Matrix<Rational> random_rational_matrix(std::size_t n, Rng& rng, long num_bound, long den_bound) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, num_bound, den_bound);
    return m;
}

IndexSet random_index_set(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> pick;
    pick.reserve(k);
    std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(k), rng);
    std::sort(pick.begin(), pick.end());
    return IndexSet(std::move(pick));
}

} // namespace symmsum
