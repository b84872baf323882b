#include "symmsum/subsets.hpp"

#include "symmsum/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <numeric>

namespace symmsum {

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k) {
    if (k > n) {
        throw input_error("index_subsets: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    std::vector<IndexSet> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        out.emplace_back(cur);
        // Advance the rightmost index that still has room.
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::size_t max_tuple_size() {
    const char* env = std::getenv("SYMMSUM_MAX_N");
    if (env == nullptr) return kDefaultMaxTupleSize;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) return kDefaultMaxTupleSize;
    return std::clamp<std::size_t>(value, kDefaultMaxTupleSize, 40);
}

} // namespace symmsum
