#include <doctest.h>

#include <numeric>

#include "smirnov/diophantine.hpp"
#include "smirnov/errors.hpp"
#include "smirnov/oracle.hpp"

using namespace smirnov;

TEST_CASE("solve_line structure") {
    const LineSolutions none = solve_line(4, 2, 1);
    CHECK_FALSE(none.base.has_value());
    CHECK(none.points.empty());
    CHECK(none.alpha == 0);
    CHECK(none.step == Point{2, 1});

    const LineSolutions two = solve_line(4, 2, 2);
    REQUIRE(two.base.has_value());
    CHECK(two.points == std::vector<Point>{{1, 0}, {3, 1}});
    CHECK(two.alpha == 2);

    const LineSolutions origin = solve_line(6, 4, 0);
    REQUIRE(origin.base.has_value());
    CHECK(*origin.base == Point{0, 0});
    CHECK(origin.points == std::vector<Point>{{0, 0}, {3, 2}, {6, 4}});

    // d divides r but the line misses the rectangle: base still present.
    const LineSolutions miss = solve_line(5, 3, 14);
    REQUIRE(miss.base.has_value());
    CHECK(miss.points.empty());
}

TEST_CASE("solve_line invariants over a grid of cases") {
    for (long long m = 1; m <= 10; ++m) {
        for (long long n = 1; n <= 10; ++n) {
            const long long d = std::gcd(m, n);
            for (long long r = -5; r <= n * m + 5; ++r) {
                const LineSolutions sol = solve_line(m, n, r);
                CHECK(sol.base.has_value() == (r % d == 0));
                if (sol.base) {
                    CHECK(n * sol.base->x - m * sol.base->y == r);
                    CHECK(sol.base->y >= 0);
                    CHECK(sol.base->y < n / d); // minimal nonnegative y
                }
                Point prev{};
                for (size_t i = 0; i < sol.points.size(); ++i) {
                    const Point pt = sol.points[i];
                    CHECK(n * pt.x - m * pt.y == r);
                    CHECK((0 <= pt.x && pt.x <= m));
                    CHECK((0 <= pt.y && pt.y <= n));
                    if (i > 0) {
                        CHECK(pt.x - prev.x == sol.step.x);
                        CHECK(pt.y - prev.y == sol.step.y);
                    }
                    prev = pt;
                }
                if (0 <= r && r <= n * m) CHECK(sol.alpha == alpha(m, n, r));
            }
        }
    }
}

TEST_CASE("alpha closed form on the worked examples") {
    CHECK(alpha(4, 2, 2) == 2);
    CHECK(alpha(5, 3, 1) == 1);
    CHECK(alpha(5, 3, 14) == 0);
    CHECK(alpha(4, 2, 1) == 0);
    CHECK_THROWS_AS(alpha(4, 2, -1), RangeError);
    CHECK_THROWS_AS(alpha(4, 2, 9), RangeError);
}

TEST_CASE("alpha equals the brute-force lattice point count everywhere up to 12x12") {
    for (long long m = 1; m <= 12; ++m)
        for (long long n = 1; n <= 12; ++n)
            for (long long r = 0; r <= n * m; ++r)
                CHECK(alpha(m, n, r) == oracle::line_point_count(m, n, r));
}

TEST_CASE("alpha symmetry and the r = 0 line") {
    for (long long m = 1; m <= 12; ++m) {
        for (long long n = 1; n <= 12; ++n) {
            CHECK(alpha(m, n, 0) == std::gcd(m, n) + 1);
            for (long long r = 0; r <= n * m; ++r) CHECK(alpha(m, n, r) == alpha(n, m, r));
        }
    }
}

TEST_CASE("spectrum of the worked examples") {
    CHECK(spectrum(4, 2).s == std::vector<long long>{0, 2, 2});
    CHECK(spectrum(6, 4).s == std::vector<long long>{1, 6, 5});
    CHECK(spectrum(5, 3).s == std::vector<long long>{4, 11});
}

TEST_CASE("spectrum identities up to 20x20") {
    for (long long m = 1; m <= 20; ++m) {
        for (long long n = 1; n <= 20; ++n) {
            const Spectrum sp = spectrum(m, n);
            const long long d = sp.d;
            REQUIRE(sp.s.size() == static_cast<size_t>(d) + 1);
            long long total = 0, weighted = 0;
            for (long long k = 0; k <= d; ++k) {
                total += sp.s[static_cast<size_t>(k)];
                weighted += k * sp.s[static_cast<size_t>(k)];
            }
            CHECK(total == n * m / d);
            CHECK(weighted == ((n + 1) * (m + 1) - (d + 1)) / 2);
            for (long long k = 1; k < d; ++k)
                CHECK(sp.s[static_cast<size_t>(k)] == n * m / (d * d));

            // The closed forms against a tally of the per-line counts.
            std::vector<long long> tally(static_cast<size_t>(d) + 1, 0);
            for (long long r = d; r <= n * m; r += d)
                ++tally[static_cast<size_t>(alpha(m, n, r))];
            CHECK(tally == sp.s);
        }
    }
}
