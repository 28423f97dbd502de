#include "smirnov/decimal.hpp"

#include <algorithm>
#include <cctype>

#include "smirnov/errors.hpp"

namespace smirnov {

namespace {

BigCount pow10(long long k) {
    BigCount v = 1;
    for (long long i = 0; i < k; ++i) v *= 10;
    return v;
}

} // namespace

Decimal::Decimal(BigCount mantissa, long long exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    while (mantissa_ % 10 == 0) {
        mantissa_ /= 10;
        ++exponent_;
    }
}

Decimal Decimal::parse(std::string_view text) {
    size_t i = 0;
    const size_t len = text.size();
    bool negative = false;
    if (i < len && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long long exponent = 0;
    bool any_digit = false;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        any_digit = true;
    }
    if (i < len && text[i] == '.') {
        ++i;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
            --exponent;
            any_digit = true;
        }
    }
    if (!any_digit) throw ParseError("not a decimal literal: '" + std::string(text) + "'");
    if (i < len && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < len && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i == len) throw ParseError("missing exponent digits: '" + std::string(text) + "'");
        long long e = 0;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            e = e * 10 + (text[i++] - '0');
            if (e > 1'000'000) throw ParseError("exponent out of range: '" + std::string(text) + "'");
        }
        exponent += exp_negative ? -e : e;
    }
    if (i != len) throw ParseError("trailing characters in decimal literal: '" + std::string(text) + "'");
    // Strip leading zeros; cpp_int would read them as an octal prefix.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    BigCount mant(digits);
    if (negative) mant = -mant;
    return Decimal(std::move(mant), exponent);
}

int Decimal::compare(const Decimal& other) const {
    // Align to the smaller exponent; mantissas carry the sign.
    const long long shift = exponent_ - other.exponent_;
    BigCount lhs = mantissa_;
    BigCount rhs = other.mantissa_;
    if (shift > 0) {
        lhs *= pow10(shift);
    } else if (shift < 0) {
        rhs *= pow10(-shift);
    }
    if (lhs < rhs) return -1;
    if (rhs < lhs) return 1;
    return 0;
}

std::string Decimal::to_string() const {
    const bool negative = mantissa_ < 0;
    std::string digits = (negative ? -mantissa_ : mantissa_).str();
    std::string body;
    if (exponent_ >= 0) {
        body = digits + std::string(static_cast<size_t>(exponent_), '0');
    } else if (static_cast<size_t>(-exponent_) < digits.size()) {
        const size_t point = digits.size() - static_cast<size_t>(-exponent_);
        body = digits.substr(0, point) + "." + digits.substr(point);
    } else {
        body = "0." + std::string(static_cast<size_t>(-exponent_) - digits.size(), '0') + digits;
    }
    return negative ? "-" + body : body;
}

} // namespace smirnov
