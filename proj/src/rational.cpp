#include "smirnov/rational.hpp"

#include <cassert>
#include <cstdio>

namespace smirnov {

namespace {

BigCount pow10(long long k) {
    BigCount v = 1;
    for (long long i = 0; i < k; ++i) v *= 10;
    return v;
}

// Largest e with 10^e <= num/den (both positive).
long long decimal_exponent(const BigCount& num, const BigCount& den) {
    long long e = static_cast<long long>(num.str().size()) -
                  static_cast<long long>(den.str().size());
    // num/den is within a factor of 10 of 10^e; settle the boundary exactly.
    while ((e >= 0 ? num < den * pow10(e) : num * pow10(-e) < den)) --e;
    while ((e + 1 >= 0 ? num >= den * pow10(e + 1) : num * pow10(-(e + 1)) >= den)) ++e;
    return e;
}

// floor(num/den) with ties and remainders resolved round-half-even.
BigCount divide_half_even(const BigCount& num, const BigCount& den) {
    BigCount q = num / den;
    BigCount rem = num - q * den;
    BigCount twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;
    return q;
}

} // namespace

std::string fraction_string(const ExactRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

DecimalParts decimal_parts(const ExactRational& q, int sig_digits) {
    assert(sig_digits >= 1);
    DecimalParts out;
    if (q == 0) {
        out.zero = true;
        out.digits = "0";
        return out;
    }
    out.negative = q < 0;
    BigCount num = numerator(q);
    if (out.negative) num = -num;
    const BigCount den = denominator(q);

    long long e = decimal_exponent(num, den);
    // Scale so that sig_digits digits survive: mantissa = round(v * 10^(sig-1-e)).
    long long shift = sig_digits - 1 - e;
    BigCount mant = shift >= 0 ? divide_half_even(num * pow10(shift), den)
                               : divide_half_even(num, den * pow10(-shift));
    if (mant == pow10(sig_digits)) { // rounding carried into one more digit
        mant = pow10(sig_digits - 1);
        ++e;
    }
    out.digits = mant.str();
    assert(static_cast<int>(out.digits.size()) == sig_digits);
    out.exponent = e;
    return out;
}

std::string render_decimal(const ExactRational& q, int sig_digits) {
    DecimalParts p = decimal_parts(q, sig_digits);
    if (p.zero) return "0";
    std::string sign = p.negative ? "-" : "";
    const long long e = p.exponent;
    if (e <= -4 || e >= 7) {
        char exp[8];
        std::snprintf(exp, sizeof exp, "e%+03lld", e);
        std::string mant = p.digits.substr(0, 1);
        if (p.digits.size() > 1) mant += "." + p.digits.substr(1);
        return sign + mant + exp;
    }
    if (e < 0) {
        return sign + "0." + std::string(static_cast<size_t>(-e - 1), '0') + p.digits;
    }
    if (e + 1 >= static_cast<long long>(p.digits.size())) {
        return sign + p.digits +
               std::string(static_cast<size_t>(e + 1) - p.digits.size(), '0');
    }
    return sign + p.digits.substr(0, static_cast<size_t>(e + 1)) + "." +
           p.digits.substr(static_cast<size_t>(e + 1));
}

} // namespace smirnov
