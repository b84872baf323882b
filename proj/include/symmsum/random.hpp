#pragma once

#include "symmsum/matrix.hpp"
#include "symmsum/rational.hpp"

#include <cstdint>
#include <random>

namespace symmsum {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream index). The parallel schedule never
/// touches the generator state, so results depend only on these two values.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream);

/// n x n matrix with integer entries uniform in [lo, hi].
Matrix<Rational> random_integer_matrix(std::size_t n, Rng& rng, long lo = -9, long hi = 9);

/// Rational p/q with p uniform in [-num_bound, num_bound] and q in [1, den_bound].
Rational random_rational(Rng& rng, long num_bound = 9, long den_bound = 9);

/// n x n matrix of random small rationals (see random_rational).
Matrix<Rational> random_rational_matrix(std::size_t n, Rng& rng, long num_bound = 9, long den_bound = 9);

/// Uniformly random k-subset of {0..n-1}.
IndexSet random_index_set(std::size_t n, std::size_t k, Rng& rng);

} // namespace symmsum
