#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace smirnov {

struct Point {
    long long x = 0;
    long long y = 0;
    bool operator==(const Point&) const = default;
};

// Solution structure of nx - my = r inside the rectangle [0,m] x [0,n].
// `base` is the unconstrained solution with minimal nonnegative y; it is
// present exactly when gcd(m,n) divides r. Rectangle solutions, listed in
// increasing x, differ by consecutive multiples of `step` = (m/d, n/d).
struct LineSolutions {
    long long m = 0;
    long long n = 0;
    long long r = 0;
    long long d = 0;
    std::optional<Point> base;
    Point step;
    std::vector<Point> points;
    long long alpha = 0; // points.size()
};

LineSolutions solve_line(long long m, long long n, long long r);

// Number of lattice points on nx - my = r inside the rectangle, by the
// closed form: alpha_r = d + 1 - ceil((p + a)/(m/d)) with p = floor(r/n) and
// a = ((r - n*p)/d) * inverse(n/d) mod (m/d), roles of m and n swapped first
// if m < n. Requires 0 <= r <= n*m.
long long alpha(long long m, long long n, long long r);

// s[k] = number of multiples of d in (0, nm] whose line carries exactly k
// rectangle lattice points. Closed forms; see the invariants in the tests.
struct Spectrum {
    long long m = 0;
    long long n = 0;
    long long d = 0;
    std::vector<long long> s; // size d+1
};

Spectrum spectrum(long long m, long long n);

} // namespace smirnov
