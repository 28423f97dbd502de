#include "smirnov/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace smirnov {

namespace {

// ceil(a/b) for b > 0, exact for negative a.
long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

} // namespace

LatticePath::LatticePath(std::vector<long long> tuple, long long width)
    : m_(width), t_(std::move(tuple)) {
    if (m_ < 1) throw InvalidTuple("grid width must be positive, got " + std::to_string(m_));
    if (t_.empty()) throw InvalidTuple("path tuple must be nonempty");
    long long prev = 0;
    for (long long v : t_) {
        if (v < prev)
            throw InvalidTuple("tuple not nondecreasing at value " + std::to_string(v));
        if (v > m_)
            throw InvalidTuple("tuple entry " + std::to_string(v) + " exceeds width " +
                               std::to_string(m_));
        prev = v;
    }
}

std::string LatticePath::to_string() const {
    std::string out = "<";
    for (size_t i = 0; i < t_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t_[i]);
    }
    return out + ">";
}

long long StepSequence::east_count() const {
    return static_cast<long long>(std::count(steps.begin(), steps.end(), Step::East));
}

long long StepSequence::north_count() const {
    return static_cast<long long>(steps.size()) - east_count();
}

SampleData::SampleData(std::vector<Decimal> xs, std::vector<Decimal> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.empty() || ys_.empty())
        throw InvalidTuple("both samples must be nonempty");
    std::sort(xs_.begin(), xs_.end());
    std::sort(ys_.begin(), ys_.end());
    size_t i = 0, j = 0;
    while (i < xs_.size() && j < ys_.size()) {
        int c = xs_[i].compare(ys_[j]);
        if (c == 0)
            throw CrossSampleTie("value " + xs_[i].to_string() + " occurs in both samples");
        c < 0 ? ++i : ++j;
    }
}

LatticePath path_from_tuple(std::vector<long long> tuple, long long width) {
    return LatticePath(std::move(tuple), width);
}

LatticePath steps_to_tuple(const StepSequence& s) {
    const long long m = s.east_count();
    const long long n = s.north_count();
    if (m < 1 || n < 1) throw InvalidTuple("step sequence needs at least one east and one north");
    // max_x[h] = largest x the path attains at height h.
    std::vector<long long> max_x(static_cast<size_t>(n) + 1, 0);
    long long x = 0, y = 0;
    for (Step st : s.steps) {
        if (st == Step::East) {
            ++x;
        } else {
            max_x[static_cast<size_t>(y)] = x;
            ++y;
        }
    }
    max_x[static_cast<size_t>(n)] = m;
    std::vector<long long> t(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i)
        t[static_cast<size_t>(i - 1)] = m - max_x[static_cast<size_t>(n - i)];
    return LatticePath(std::move(t), m);
}

StepSequence tuple_to_steps(const LatticePath& p) {
    const long long m = p.width();
    const long long n = p.height();
    StepSequence out;
    out.steps.reserve(static_cast<size_t>(m + n));
    long long x = 0;
    for (long long h = 0; h < n; ++h) {
        const long long reach = m - p.row(n - h); // max x at height h
        for (; x < reach; ++x) out.steps.push_back(Step::East);
        out.steps.push_back(Step::North);
    }
    for (; x < m; ++x) out.steps.push_back(Step::East);
    return out;
}

LatticePath gnedenko_path(const SampleData& d) {
    StepSequence s;
    s.steps.reserve(static_cast<size_t>(d.m() + d.n()));
    size_t i = 0, j = 0;
    const auto& xs = d.xs();
    const auto& ys = d.ys();
    while (i < xs.size() || j < ys.size()) {
        if (j == ys.size() || (i < xs.size() && xs[i] < ys[j])) {
            s.steps.push_back(Step::East);
            ++i;
        } else {
            s.steps.push_back(Step::North);
            ++j;
        }
    }
    return steps_to_tuple(s);
}

long long statistic(const LatticePath& p, Tail tail) {
    const long long m = p.width();
    const long long n = p.height();
    // Vertex extremes in tuple form: nx - my peaks at the east-to-north
    // turns (m*i - n*t_i over rows), my - nx at the north-to-east turns.
    long long upper = 0, lower = 0;
    for (long long i = 1; i <= n; ++i) {
        upper = std::max(upper, m * i - n * p.row(i));
        lower = std::max(lower, n * p.row(i) - m * (i - 1));
    }
    switch (tail) {
        case Tail::Upper: return upper;
        case Tail::Lower: return lower;
        case Tail::TwoSided: return std::max(upper, lower);
    }
    return 0; // unreachable
}

bool dominates(const LatticePath& s, const LatticePath& t) {
    if (s.width() != t.width() || s.height() != t.height())
        throw DimensionMismatch("dominance needs equal grid dimensions: " + s.to_string() +
                                " vs " + t.to_string());
    for (long long i = 1; i <= s.height(); ++i)
        if (s.row(i) < t.row(i)) return false;
    return true;
}

LatticePath profile(long long m, long long n, long long r) {
    if (m < 1 || n < 1)
        throw RangeError("profile needs positive sample sizes");
    if (r < 0 || r > n * m)
        throw RangeError("profile parameter " + std::to_string(r) + " outside [0, " +
                         std::to_string(n * m) + "]");
    std::vector<long long> t(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i)
        t[static_cast<size_t>(i - 1)] = std::max(0LL, ceil_div(m * i - r, n));
    return LatticePath(std::move(t), m);
}

ProfileFamily distinct_profiles(long long m, long long n) {
    if (m < 1 || n < 1)
        throw RangeError("distinct_profiles needs positive sample sizes");
    ProfileFamily family;
    family.m = m;
    family.n = n;
    const long long d = std::gcd(m, n);
    family.profiles.emplace_back(0, profile(m, n, 0));
    for (long long r = d; r <= n * m; r += d) {
        LatticePath p = profile(m, n, r);
        if (p != family.profiles.back().second) family.profiles.emplace_back(r, std::move(p));
    }
    return family;
}

} // namespace smirnov
