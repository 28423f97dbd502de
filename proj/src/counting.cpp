#include "smirnov/counting.hpp"

#include <numeric>

#include "smirnov/diophantine.hpp"
#include "smirnov/errors.hpp"

namespace smirnov {

namespace {

BigCount factorial(long long k) {
    BigCount f = 1;
    for (long long i = 2; i <= k; ++i) f *= i;
    return f;
}

BigCount total_paths(const LatticePath& p) { return binomial(p.width() + p.height(), p.height()); }

} // namespace

BigCount binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigCount result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

BigCount count_dominated(const LatticePath& p) {
    const long long m = p.width();
    const long long n = p.height();
    // rows[v] = number of prefixes (q_1..q_i) ending at q_i = v; the prefix
    // sum folds the monotonicity constraint into one pass per row.
    std::vector<BigCount> rows(static_cast<size_t>(m) + 1);
    for (long long v = 0; v <= p.row(1); ++v) rows[static_cast<size_t>(v)] = 1;
    for (long long i = 2; i <= n; ++i) {
        BigCount running = 0;
        for (long long v = 0; v <= p.row(i); ++v) {
            running += rows[static_cast<size_t>(v)];
            rows[static_cast<size_t>(v)] = running;
        }
        for (long long v = p.row(i) + 1; v <= m; ++v) rows[static_cast<size_t>(v)] = 0;
    }
    BigCount total = 0;
    for (long long v = 0; v <= p.row(n); ++v) total += rows[static_cast<size_t>(v)];
    return total;
}

BigCount count_dominating(const LatticePath& p) {
    // Reverse-complement: q >= p pointwise iff the reflected tuple
    // (m - q_{n+1-i}) is dominated by the reflected p.
    const long long m = p.width();
    const long long n = p.height();
    std::vector<long long> reflected(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i)
        reflected[static_cast<size_t>(i - 1)] = m - p.row(n + 1 - i);
    return count_dominated(LatticePath(std::move(reflected), m));
}

BigCount kreweras_count(const LatticePath& p) {
    const long long n = p.height();
    const size_t size = static_cast<size_t>(n);
    std::vector<std::vector<BigCount>> a(size, std::vector<BigCount>(size));
    for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= n; ++j)
            a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                binomial(p.row(n - j + 1) + 1, 1 + j - i);

    // Bareiss fraction-free elimination; every division below is exact.
    int sign = 1;
    BigCount prev = 1;
    for (size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < size && a[pivot][k] == 0) ++pivot;
            if (pivot == size) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < size; ++i) {
            for (size_t j = k + 1; j < size; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[size - 1][size - 1];
}

BigCount ordered_bell(long long k) {
    if (k < 0) throw NegativeArgument("ordered_bell undefined for " + std::to_string(k));
    std::vector<BigCount> bell(static_cast<size_t>(k) + 1);
    bell[0] = 1;
    for (long long i = 1; i <= k; ++i) {
        BigCount sum = 0;
        BigCount choose = 1; // C(i, j), updated incrementally
        for (long long j = 1; j <= i; ++j) {
            choose *= i - j + 1;
            choose /= j;
            sum += choose * bell[static_cast<size_t>(i - j)];
        }
        bell[static_cast<size_t>(i)] = sum;
    }
    return bell[static_cast<size_t>(k)];
}

BigCount natural_level_count(long long m, long long n) {
    if (m < 1 || n < 1) throw RangeError("natural_level_count needs positive m and n");
    const BigCount d = std::gcd(m, n);
    const BigCount mn = BigCount(m) * n;
    return (d * d + mn * (2 * d - 1) + d * (n + m)) / (2 * d * d);
}

BigCount saturated_level_count(long long m, long long n) {
    if (m < 1 || n < 1) throw RangeError("saturated_level_count needs positive m and n");
    const BigCount d = std::gcd(m, n);
    return (BigCount(n + 1) * (m + 1) - (d + 1)) / 2 + 1;
}

BigCount refinement_count(long long m, long long n) {
    if (m < 1 || n < 1) throw RangeError("refinement_count needs positive m and n");
    const Spectrum sp = spectrum(m, n);
    BigCount result = pow(ordered_bell(sp.d), static_cast<unsigned>(sp.s[static_cast<size_t>(sp.d)]));
    for (long long k = 1; k < sp.d; ++k)
        result *= pow(ordered_bell(k), static_cast<unsigned>(sp.s[static_cast<size_t>(k)]));
    return result;
}

BigCount saturated_refinement_count(long long m, long long n) {
    if (m < 1 || n < 1) throw RangeError("saturated_refinement_count needs positive m and n");
    const Spectrum sp = spectrum(m, n);
    BigCount result = pow(factorial(sp.d), static_cast<unsigned>(sp.s[static_cast<size_t>(sp.d)]));
    for (long long k = 1; k < sp.d; ++k)
        result *= pow(factorial(k), static_cast<unsigned>(sp.s[static_cast<size_t>(k)]));
    return result;
}

ExactRational dominance_level(const LatticePath& p) {
    return ExactRational(count_dominated(p), total_paths(p));
}

ExactRational tail_probability(long long m, long long n, long long r) {
    if (m < 1 || n < 1) throw RangeError("tail_probability needs positive m and n");
    if (r < 0 || r > n * m)
        throw RangeError("tail_probability parameter " + std::to_string(r) + " outside [0, " +
                         std::to_string(n * m) + "]");
    if (r == 0) return 1;
    const BigCount below = count_dominating(profile(m, n, r - 1));
    return ExactRational(binomial(m + n, n) - below, binomial(m + n, n));
}

LevelTable level_table(long long m, long long n) {
    const ProfileFamily family = distinct_profiles(m, n);
    LevelTable table;
    table.m = m;
    table.n = n;
    table.entries.reserve(family.profiles.size());
    for (auto it = family.profiles.rbegin(); it != family.profiles.rend(); ++it)
        table.entries.push_back({it->first, it->second, dominance_level(it->second)});
    return table;
}

} // namespace smirnov
