#include "smirnov/oracle.hpp"

#include <algorithm>

#include "smirnov/errors.hpp"

namespace smirnov::oracle {

namespace {

// Local binomial, kept separate from the counting module on purpose.
BigCount choose(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigCount v = 1;
    for (long long i = 1; i <= b; ++i) {
        v *= a - b + i;
        v /= i;
    }
    return v;
}

void check_budget(long long m, long long n, long long budget) {
    if (choose(m + n, n) > budget)
        throw BudgetExceeded("universe of (" + std::to_string(m) + "," + std::to_string(n) +
                             ") has " + choose(m + n, n).str() + " paths, budget " +
                             std::to_string(budget));
}

bool weakly_below(const std::vector<long long>& a, const std::vector<long long>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

PathUniverse enumerate_all_paths(long long m, long long n, long long budget) {
    if (m < 1 || n < 1) throw RangeError("path universe needs positive m and n");
    check_budget(m, n, budget);
    PathUniverse u;
    u.m = m;
    u.n = n;
    std::vector<long long> t(static_cast<size_t>(n), 0);
    for (;;) {
        u.paths.emplace_back(t, m);
        // Lexicographic successor among monotone tuples.
        size_t i = t.size();
        while (i > 0 && t[i - 1] == m) --i;
        if (i == 0) break;
        const long long v = t[i - 1] + 1;
        for (size_t j = i - 1; j < t.size(); ++j) t[j] = v;
    }
    return u;
}

long long statistic_by_walk(const LatticePath& p, Tail tail) {
    const long long m = p.width();
    const long long n = p.height();
    long long upper = 0, lower = 0;
    long long x = 0;
    for (long long h = 0; h <= n; ++h) {
        const long long reach = h < n ? m - p.row(n - h) : m;
        for (; x <= reach; ++x) {
            upper = std::max(upper, n * x - m * h);
            lower = std::max(lower, m * h - n * x);
        }
        x = reach; // the next height starts above this vertex
    }
    switch (tail) {
        case Tail::Upper: return upper;
        case Tail::Lower: return lower;
        case Tail::TwoSided: return std::max(upper, lower);
    }
    return 0; // unreachable
}

std::map<long long, BigCount> statistic_distribution(long long m, long long n, long long budget) {
    const PathUniverse u = enumerate_all_paths(m, n, budget);
    std::map<long long, BigCount> hist;
    for (const LatticePath& p : u.paths) ++hist[statistic_by_walk(p, Tail::Upper)];
    return hist;
}

BigCount downset_count(const PathUniverse& universe, const LatticePath& p) {
    BigCount count = 0;
    for (const LatticePath& q : universe.paths)
        if (weakly_below(q.tuple(), p.tuple())) ++count;
    return count;
}

BigCount upset_count(const PathUniverse& universe, const LatticePath& p) {
    BigCount count = 0;
    for (const LatticePath& q : universe.paths)
        if (weakly_below(p.tuple(), q.tuple())) ++count;
    return count;
}

BigCount downset_count(const LatticePath& p, long long budget) {
    return downset_count(enumerate_all_paths(p.width(), p.height(), budget), p);
}

BigCount upset_count(const LatticePath& p, long long budget) {
    return upset_count(enumerate_all_paths(p.width(), p.height(), budget), p);
}

long long line_point_count(long long m, long long n, long long r) {
    long long count = 0;
    for (long long x = 0; x <= m; ++x)
        for (long long y = 0; y <= n; ++y)
            if (n * x - m * y == r) ++count;
    return count;
}

namespace {

// Paths q with lower <= q <= upper pointwise, generated directly.
std::vector<std::vector<long long>> interval_tuples(const LatticePath& upper,
                                                    const LatticePath& lower, long long budget) {
    const long long n = upper.height();
    std::vector<std::vector<long long>> out;
    std::vector<long long> t(static_cast<size_t>(n));
    auto rec = [&](auto&& self, long long i, long long floor_value) -> void {
        if (i > n) {
            out.push_back(t);
            if (static_cast<long long>(out.size()) > budget)
                throw BudgetExceeded("dominance interval larger than budget " +
                                     std::to_string(budget));
            return;
        }
        const long long lo = std::max(floor_value, lower.row(i));
        for (long long v = lo; v <= upper.row(i); ++v) {
            t[static_cast<size_t>(i - 1)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 1, 0);
    return out;
}

} // namespace

std::vector<LatticePath> insertable_paths(const LatticePath& upper, const LatticePath& lower,
                                          long long budget) {
    if (upper.width() != lower.width() || upper.height() != lower.height())
        throw DimensionMismatch("interval endpoints live on different grids");
    if (!weakly_below(lower.tuple(), upper.tuple()))
        throw RangeError("interval upper end does not dominate lower end");
    std::vector<LatticePath> out;
    for (auto& t : interval_tuples(upper, lower, budget)) {
        LatticePath q(std::move(t), upper.width());
        if (q != upper && q != lower) out.push_back(std::move(q));
    }
    return out;
}

BigCount chain_count(const LatticePath& upper, const LatticePath& lower, long long budget) {
    if (upper.width() != lower.width() || upper.height() != lower.height())
        throw DimensionMismatch("interval endpoints live on different grids");
    if (!weakly_below(lower.tuple(), upper.tuple()))
        throw RangeError("interval upper end does not dominate lower end");
    const std::vector<std::vector<long long>> interval = interval_tuples(upper, lower, budget);
    const size_t count = interval.size();

    // f(p) = number of strictly descending sequences from p to lower; the
    // interval arrives in lexicographic order, so descending sequences only
    // ever step to earlier tuples and one backward sweep suffices.
    std::vector<BigCount> f(count);
    size_t lower_index = 0;
    while (interval[lower_index] != lower.tuple()) ++lower_index;
    for (size_t i = 0; i < count; ++i) {
        if (i == lower_index) {
            f[i] = 1;
            continue;
        }
        BigCount total = 0;
        for (size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            if (weakly_below(interval[j], interval[i]) && interval[j] != interval[i]) total += f[j];
        }
        f[i] = total;
    }
    size_t upper_index = 0;
    while (interval[upper_index] != upper.tuple()) ++upper_index;
    return f[upper_index];
}

} // namespace smirnov::oracle
