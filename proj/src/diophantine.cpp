#include "smirnov/diophantine.hpp"

#include <numeric>

#include "smirnov/errors.hpp"

namespace smirnov {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

struct Xgcd {
    long long g;
    long long s;
    long long t; // a*s + b*t = g
};

Xgcd xgcd(long long a, long long b) {
    long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        const long long q = a / b;
        long long tmp = a - q * b; a = b; b = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    return {a, s0, t0};
}

// Inverse of a in Z_mod; Z_1 is degenerate and its inverse is taken as 0.
long long mod_inverse(long long a, long long mod) {
    if (mod == 1) return 0;
    const Xgcd e = xgcd(((a % mod) + mod) % mod, mod);
    return ((e.s % mod) + mod) % mod;
}

} // namespace

LineSolutions solve_line(long long m, long long n, long long r) {
    if (m < 1 || n < 1) throw RangeError("solve_line needs positive m and n");
    LineSolutions out;
    out.m = m;
    out.n = n;
    out.r = r;
    out.d = std::gcd(m, n);
    out.step = {m / out.d, n / out.d};
    if (r % out.d != 0) return out;

    // In reduced coordinates n'x - m'y = r/d, the representative with minimal
    // nonnegative y has y = -(r/d) * (m')^{-1} mod n'.
    const long long mp = out.step.x;
    const long long np = out.step.y;
    const long long rp = r / out.d;
    const long long y0 = ((-(rp % np) * mod_inverse(mp % np, np)) % np + np) % np;
    const long long x0 = (rp + mp * y0) / np;
    out.base = Point{x0, y0};

    // Rectangle window: 0 <= x0 + t*step.x <= m and 0 <= y0 + t*step.y <= n.
    const long long lo = std::max(ceil_div(-x0, out.step.x), ceil_div(-y0, out.step.y));
    const long long hi = std::min(floor_div(m - x0, out.step.x), floor_div(n - y0, out.step.y));
    for (long long t = lo; t <= hi; ++t)
        out.points.push_back({x0 + t * out.step.x, y0 + t * out.step.y});
    out.alpha = static_cast<long long>(out.points.size());
    return out;
}

long long alpha(long long m, long long n, long long r) {
    if (m < 1 || n < 1) throw RangeError("alpha needs positive m and n");
    if (r < 0 || r > n * m)
        throw RangeError("alpha parameter " + std::to_string(r) + " outside [0, " +
                         std::to_string(n * m) + "]");
    // The closed form assumes m >= n; the count is transpose-symmetric
    // ((x,y) <-> (n-y, m-x)), so swap roles when needed.
    if (m < n) std::swap(m, n);
    const long long d = std::gcd(m, n);
    if (r % d != 0) return 0;
    const long long mp = m / d;
    const long long np = n / d;
    const long long p = r / n;
    const long long q = r / d - np * p;
    const long long a = (q % mp) * mod_inverse(np, mp) % mp;
    return std::max(0LL, d + 1 - ceil_div(p + a, mp));
}

Spectrum spectrum(long long m, long long n) {
    if (m < 1 || n < 1) throw RangeError("spectrum needs positive m and n");
    Spectrum out;
    out.m = m;
    out.n = n;
    out.d = std::gcd(m, n);
    const long long d = out.d;
    out.s.assign(static_cast<size_t>(d) + 1, 0);
    out.s[0] = (n * m - (n + m) * d + d * d) / (2 * d * d);
    out.s[static_cast<size_t>(d)] = (n * m + (n + m) * d - d * d) / (2 * d * d);
    for (long long k = 1; k < d; ++k) out.s[static_cast<size_t>(k)] = n * m / (d * d);
    return out;
}

} // namespace smirnov
