#include "symmsum/matrix.hpp"

#include <numeric>

namespace symmsum {

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    for (std::size_t i = 1; i < idx_.size(); ++i) {
        if (idx_[i] <= idx_[i - 1]) {
            throw input_error("index set must be strictly increasing");
        }
    }
}

IndexSet IndexSet::full(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return IndexSet(std::move(v));
}

void IndexSet::check_bounds(std::size_t dim, const char* what) const {
    if (!idx_.empty() && idx_.back() >= dim) {
        throw input_error(std::string(what) + " index " + std::to_string(idx_.back()) + " out of range for dimension " +
                          std::to_string(dim));
    }
}

} // namespace symmsum
