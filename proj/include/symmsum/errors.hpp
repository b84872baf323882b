#pragma once

#include <stdexcept>
#include <string>

namespace symmsum {

/// Malformed or inconsistent input: bad dimensions, out-of-range indices, parse failures.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A request exceeds a hard size guard (n! expansions, 2^N enumerations, scan sizes).
class size_limit_error : public std::length_error {
public:
    explicit size_limit_error(const std::string& msg) : std::length_error(msg) {}
};

/// Arguments are well formed but outside the range where a formula is guaranteed.
class precondition_error : public std::domain_error {
public:
    explicit precondition_error(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace symmsum
