#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace seb {

// Exact arithmetic used everywhere: arrays grow like 2^n * n! and the
// series layer needs 1/n! factors, so no fixed-width type is safe.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Alternating sums pass through negative partial values; results that are
// counts get narrowed through this.
inline BigInt to_count(BigInt value, const char* what) {
    if (value < 0)
        throw std::logic_error(std::string(what) + ": expected nonnegative count, got " +
                               value.str());
    return value;
}

inline BigInt pow_big(const BigInt& base, int exp) {
    // 0^0 = 1 by the usual convention for the closed formulas here
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace seb
