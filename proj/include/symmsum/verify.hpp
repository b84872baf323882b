#pragma once

#include "symmsum/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symmsum {

/// Randomized exact checks behind `verify <identity>`. Each trial draws its
/// matrices (integer entries in [-9, 9]) from trial_rng(seed, trial), so a
/// result depends only on the options, never on the thread count.
struct VerifyOptions {
    std::size_t n = 3;
    std::optional<std::size_t> tuple_size;  // N; defaults to n + 1 (or tau + 1 for aux19)
    std::optional<std::size_t> tau;         // all admissible tau when unset
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    int threads = 1;
    std::vector<Rational> xs;  // optimality witness parameters; defaults to {0, 1, -5, 7/3, 10^6}
};

struct VerifyFailure {
    std::uint64_t trial = 0;
    std::optional<std::size_t> tau;
    std::string value;  // the nonzero residual, or "lhs != rhs"

    friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
};

struct VerifyResult {
    std::string identity;
    std::size_t n = 0;
    std::size_t tuple_size = 0;
    std::optional<std::size_t> tau;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }
    /// One line: identity, parameters, seed, case count, verdict.
    std::string summary() const;

    friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

/// Identity names accepted by verify_identity (besides "all").
const std::vector<std::string>& verify_identity_names();

/// theorem1 | corollary-sub | corollary-symm | aux19 | s2 | s3 | s3x3 | s4 | optimality
std::vector<VerifyResult> verify_identity(const std::string& identity, const VerifyOptions& opts);

/// Every identity over n <= 4, N <= 6, plus the witness for n = 1..6.
std::vector<VerifyResult> verify_all(std::uint64_t trials, std::uint64_t seed, int threads);

nlohmann::json verify_results_to_json(const std::vector<VerifyResult>& results);
std::vector<VerifyResult> verify_results_from_json(const nlohmann::json& j);

} // namespace symmsum
