#ifndef VIRBI_RATIONAL_HPP
#define VIRBI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "virbi/errors.hpp"

namespace virbi {

/// Exact arbitrary-precision rational scalar. Always kept in canonical
/// reduced form (gcd 1, positive denominator) by the backing type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw ConfigError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Canonical rendering: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Parses "p" or "p/q" with optional leading sign. Whole input must match.
inline Rational rational_from_string(std::string_view text) {
    std::size_t pos = 0;
    auto read_int = [&]() -> Integer {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == digits)
            throw ConfigError("bad rational literal: '" + std::string(text) + "'");
        return Integer(std::string(text.substr(start, pos - start)));
    };
    Integer num = read_int();
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int();
    }
    if (pos != text.size())
        throw ConfigError("bad rational literal: '" + std::string(text) + "'");
    return make_rational(num, den);
}

} // namespace virbi

#endif
