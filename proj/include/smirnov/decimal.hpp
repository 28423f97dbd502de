#pragma once

#include <string>
#include <string_view>

#include "smirnov/rational.hpp"

namespace smirnov {

// Exact decimal value: mantissa * 10^exponent with the mantissa not divisible
// by ten (zero is stored as 0 * 10^0). Sample files are parsed into these so
// that equality of observations is decided on the written literals, not on
// binary floating point.
class Decimal {
  public:
    Decimal() = default;
    Decimal(BigCount mantissa, long long exponent);

    // Accepts [+-]?digits[.digits]?([eE][+-]?digits)? with at least one digit.
    static Decimal parse(std::string_view text);

    const BigCount& mantissa() const { return mantissa_; }
    long long exponent() const { return exponent_; }

    int compare(const Decimal& other) const;
    bool operator==(const Decimal& other) const { return compare(other) == 0; }
    bool operator<(const Decimal& other) const { return compare(other) < 0; }

    std::string to_string() const;

  private:
    BigCount mantissa_ = 0;
    long long exponent_ = 0;
};

} // namespace smirnov
