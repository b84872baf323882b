#pragma once

#include "symmsum/matrix.hpp"
#include "symmsum/rational.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace symmsum {

/// All C(n, k) k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k);

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Default cap on the tuple length N for 2^N subset enumeration.
inline constexpr std::size_t kDefaultMaxTupleSize = 20;

/// The active cap: SYMMSUM_MAX_N can raise it from 20 up to 40.
std::size_t max_tuple_size();

/// Members of the subset encoded by `mask` (bit i set means member i).
inline std::vector<std::size_t> mask_members(std::uint64_t mask) {
    std::vector<std::size_t> out;
    while (mask != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

} // namespace symmsum
