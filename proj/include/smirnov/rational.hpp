#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace smirnov {

// All counting is exact. BigCount is an arbitrary-precision integer that is
// nonnegative everywhere this library produces one; ExactRational is kept in
// lowest terms with a positive denominator by the underlying representation.
using BigCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// "num/den" form used by every serialization surface.
std::string fraction_string(const ExactRational& q);

// Decimal parts of a rational rounded to `sig_digits` significant digits,
// round-half-even. The value equals digits * 10^(exponent - sig_digits + 1)
// and 10^exponent <= |value| < 10^(exponent+1) before rounding adjustment.
struct DecimalParts {
    bool negative = false;
    bool zero = false;
    std::string digits; // exactly sig_digits characters unless zero
    long long exponent = 0;
};

DecimalParts decimal_parts(const ExactRational& q, int sig_digits);

// Rendering used for display: fixed notation for moderate exponents,
// scientific ("5.41e-06") when the decimal exponent is <= -4 or >= 7.
// Zero renders as "0".
std::string render_decimal(const ExactRational& q, int sig_digits = 3);

} // namespace smirnov
