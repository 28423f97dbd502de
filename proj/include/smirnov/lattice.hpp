#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smirnov/decimal.hpp"
#include "smirnov/errors.hpp"

namespace smirnov {

// Monotone lattice path from (0,0) to (m,n), stored as the tuple
// <t_1,...,t_n> where t_i is the horizontal distance from (m, n-i) to the
// path, i.e. t_i = m - (largest x the path attains at height n-i). The tuple
// is nondecreasing and bounded by m; construction validates both.
class LatticePath {
  public:
    LatticePath(std::vector<long long> tuple, long long width);

    long long width() const { return m_; }                              // m
    long long height() const { return static_cast<long long>(t_.size()); } // n
    const std::vector<long long>& tuple() const { return t_; }

    // 1-based row access matching the t_i notation.
    long long row(long long i) const { return t_[static_cast<size_t>(i - 1)]; }

    std::string to_string() const; // "<2,2,4>"

    auto operator<=>(const LatticePath&) const = default;

  private:
    long long m_;
    std::vector<long long> t_;
};

enum class Step { East, North };

// East/north encoding of the same path; exactly m East and n North symbols.
struct StepSequence {
    std::vector<Step> steps;

    long long east_count() const;
    long long north_count() const;
};

enum class Tail { Upper, Lower, TwoSided };

// Two ordered real samples. Values are exact decimals, sorted ascending on
// construction. A value occurring in both samples is rejected: the sampling
// model assumes continuous distributions, so a cross-sample tie means the
// input violates the model and no convention is silently picked.
class SampleData {
  public:
    SampleData(std::vector<Decimal> xs, std::vector<Decimal> ys);

    const std::vector<Decimal>& xs() const { return xs_; }
    const std::vector<Decimal>& ys() const { return ys_; }
    long long m() const { return static_cast<long long>(xs_.size()); }
    long long n() const { return static_cast<long long>(ys_.size()); }

  private:
    std::vector<Decimal> xs_;
    std::vector<Decimal> ys_;
};

LatticePath path_from_tuple(std::vector<long long> tuple, long long width);

LatticePath steps_to_tuple(const StepSequence& s);
StepSequence tuple_to_steps(const LatticePath& p);

// The path of the merged sample: east step when the next order statistic
// comes from xs, north step when it comes from ys.
LatticePath gnedenko_path(const SampleData& d);

// Integer m*n*D for the requested tail; the rational statistic is this value
// divided by m*n. Upper maximizes nx - my over the path's vertices, lower
// maximizes my - nx, two-sided takes |nx - my|.
long long statistic(const LatticePath& p, Tail tail);

bool dominates(const LatticePath& s, const LatticePath& t);

// Dominance-least path whose vertices all satisfy nx - my <= r, i.e. the
// r-profile: t_i = max(0, ceil((m*i - r)/n)). Requires 0 <= r <= n*m.
LatticePath profile(long long m, long long n, long long r);

// Distinct r-profiles in increasing r. Consecutive entries strictly decrease
// in dominance; r runs over 0 and the multiples of gcd(m,n) where the
// profile actually moves.
struct ProfileFamily {
    long long m = 0;
    long long n = 0;
    std::vector<std::pair<long long, LatticePath>> profiles;
};

ProfileFamily distinct_profiles(long long m, long long n);

} // namespace smirnov
