#include "symmsum/rational.hpp"

#include "symmsum/errors.hpp"

#include <cctype>
#include <cmath>

namespace symmsum {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw input_error("not an integer literal: '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw input_error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw input_error("cannot rationalize a non-finite double");
    }
    return Rational(value);
}

} // namespace symmsum
