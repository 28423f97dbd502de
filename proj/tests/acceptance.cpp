// Acceptance suite: every release gate in one binary. Each criterion prints
// a single pass/fail line with its runtime; the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "smirnov/cli.hpp"
#include "smirnov/counting.hpp"
#include "smirnov/diophantine.hpp"
#include "smirnov/errors.hpp"
#include "smirnov/oracle.hpp"
#include "smirnov/rational.hpp"
#include "smirnov/refinement.hpp"

using namespace smirnov;

namespace {

int failures = 0;

struct Failure : Error {
    using Error::Error;
};

template <typename T, typename U>
void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == want)) throw Failure(what);
}

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > time_limit_s)
        error = "exceeded time limit of " + std::to_string(time_limit_s) + " s";
    if (!error.empty()) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", error.empty() ? "PASS" : "FAIL", number,
                name.c_str(), elapsed, error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
}

// Reference grids for sample sizes 3..10 (rows m, columns n).
constexpr long long kNaturalLevels[8][8] = {
    {4, 10, 12, 7, 16, 18, 10, 22},   {10, 5, 15, 12, 20, 9, 25, 19},
    {12, 15, 6, 21, 24, 27, 30, 11},  {7, 12, 21, 7, 28, 22, 18, 27},
    {16, 20, 24, 28, 8, 36, 40, 44},  {18, 9, 27, 22, 36, 9, 45, 35},
    {10, 25, 30, 18, 40, 45, 10, 55}, {22, 19, 11, 27, 44, 35, 55, 11}};

constexpr long long kSaturatedLevels[8][8] = {
    {7, 10, 12, 13, 16, 18, 19, 22},  {10, 11, 15, 17, 20, 21, 25, 27},
    {12, 15, 16, 21, 24, 27, 30, 31}, {13, 17, 21, 22, 28, 31, 34, 38},
    {16, 20, 24, 28, 29, 36, 40, 44}, {18, 21, 27, 31, 36, 37, 45, 49},
    {19, 25, 30, 34, 40, 45, 46, 55}, {22, 27, 31, 38, 44, 49, 55, 56}};

void check_table(cli::TableKind kind, const long long (&grid)[8][8]) {
    const auto doc = cli::cmd_table(kind, 10, 10);
    // Compare through the serialized JSON, the way a consumer would read it.
    const auto cells = nlohmann::json::parse(doc.text(cli::Format::Json))["cells"];
    expect_eq(cells.size(), size_t{8}, "grid must have 8 rows");
    for (size_t i = 0; i < 8; ++i) {
        expect_eq(cells[i].size(), size_t{8}, "grid row must have 8 columns");
        for (size_t j = 0; j < 8; ++j)
            if (cells[i][j] != grid[i][j])
                throw Failure("cell (" + std::to_string(i + 3) + "," + std::to_string(j + 3) +
                              ") is " + cells[i][j].dump() + ", reference says " +
                              std::to_string(grid[i][j]));
    }
}

} // namespace

int main() {
    criterion(1, "natural level counts 3..10 match the reference grid", 1.0,
              [] { check_table(cli::TableKind::Natural, kNaturalLevels); });

    criterion(2, "saturated level counts 3..10 match the reference grid", 1.0,
              [] { check_table(cli::TableKind::Saturated, kSaturatedLevels); });

    criterion(3, "the 11 levels of the 10x10 test render to the reference list", 1.0, [] {
        const std::vector<std::string> expected{"5.41e-06", "1.08e-05", "2.71e-05", "7.58e-05",
                                                "2.27e-04", "7.14e-04", "0.00232",  "0.00774",
                                                "0.0263",   "0.0909",   "0.318"};
        const LevelTable table = level_table(10, 10);
        expect_eq(table.entries.size(), expected.size(), "level count of the 10x10 test");
        for (size_t i = 0; i < expected.size(); ++i)
            expect_eq(render_decimal(table.entries[i].level, 3), expected[i],
                      "level " + std::to_string(i + 1) + " renders to " +
                          render_decimal(table.entries[i].level, 3) + ", expected " + expected[i]);
    });

    criterion(4, "alpha closed form equals the lattice point scan for every m,n <= 12", 30.0, [] {
        for (long long m = 1; m <= 12; ++m)
            for (long long n = 1; n <= 12; ++n)
                for (long long r = 0; r <= n * m; ++r)
                    if (alpha(m, n, r) != oracle::line_point_count(m, n, r))
                        throw Failure("alpha(" + std::to_string(m) + "," + std::to_string(n) +
                                      "," + std::to_string(r) + ")");
    });

    criterion(5, "spectrum closed forms match direct tallies for every m,n <= 20", 10.0, [] {
        for (long long m = 1; m <= 20; ++m) {
            for (long long n = 1; n <= 20; ++n) {
                const Spectrum sp = spectrum(m, n);
                const long long d = sp.d;
                std::vector<long long> tally(static_cast<size_t>(d) + 1, 0);
                for (long long r = d; r <= n * m; r += d) {
                    const long long count = oracle::line_point_count(m, n, r);
                    if (count > d) throw Failure("line count above gcd");
                    ++tally[static_cast<size_t>(count)];
                }
                expect_eq(tally, sp.s,
                          "tally at (" + std::to_string(m) + "," + std::to_string(n) + ")");
                long long weighted = 0;
                for (long long k = 0; k <= d; ++k) weighted += k * sp.s[static_cast<size_t>(k)];
                expect_eq(weighted, ((n + 1) * (m + 1) - (d + 1)) / 2,
                          "weighted spectrum sum at (" + std::to_string(m) + "," +
                              std::to_string(n) + ")");
            }
        }
    });

    criterion(6, "level-count closed forms equal their definitions for every m,n <= 20", 10.0, [] {
        for (long long m = 1; m <= 20; ++m) {
            for (long long n = 1; n <= 20; ++n) {
                const long long d = std::gcd(m, n);
                long long with_points = 1;
                BigCount alpha_sum = 1;
                for (long long r = d; r <= n * m; r += d) {
                    const long long a = alpha(m, n, r);
                    if (a > 0) ++with_points;
                    alpha_sum += a;
                }
                expect_eq(natural_level_count(m, n), BigCount(with_points),
                          "natural count at (" + std::to_string(m) + "," + std::to_string(n) + ")");
                expect_eq(natural_level_count(m, n),
                          BigCount(distinct_profiles(m, n).profiles.size()),
                          "profile family length at (" + std::to_string(m) + "," +
                              std::to_string(n) + ")");
                expect_eq(saturated_level_count(m, n), alpha_sum,
                          "saturated count at (" + std::to_string(m) + "," + std::to_string(n) +
                              ")");
            }
        }
    });

    criterion(7, "saturation iff coprime sizes, confirmed by exhaustive insertion search, m,n <= 10",
              60.0, [] {
                  for (long long m = 1; m <= 10; ++m) {
                      for (long long n = 1; n <= 10; ++n) {
                          const ProfileFamily family = distinct_profiles(m, n);
                          bool insertable = false;
                          for (size_t g = 0; g + 1 < family.profiles.size() && !insertable; ++g)
                              insertable = !oracle::insertable_paths(family.profiles[g].second,
                                                                     family.profiles[g + 1].second)
                                                .empty();
                          const SaturationResult sat = is_saturated(m, n);
                          const bool coprime = std::gcd(m, n) == 1;
                          if (sat.saturated != coprime || insertable != !coprime)
                              throw Failure("saturation mismatch at (" + std::to_string(m) + "," +
                                            std::to_string(n) + ")");
                          if (coprime) continue;
                          if (!sat.witness) throw Failure("missing witness");
                          // The witness must extend the profile chain to a valid refinement.
                          RefinementChain chain;
                          for (const auto& [r, p] : family.profiles) {
                              if (statistic(*sat.witness, Tail::Upper) == r)
                                  chain.paths.push_back(*sat.witness);
                              chain.paths.push_back(p);
                          }
                          const ChainCheck check = verify_chain(chain);
                          if (!check.ok)
                              throw Failure("witness chain at (" + std::to_string(m) + "," +
                                            std::to_string(n) + "): " + check.diagnostic);
                      }
                  }
              });

    criterion(8, "full chain enumeration reproduces both refinement counts", 60.0, [] {
        const std::vector<std::tuple<long long, long long, long long, long long>> cases{
            {2, 2, 3, 2}, {4, 2, 9, 4}, {2, 4, 9, 4}, {3, 3, 39, 12}};
        for (const auto& [m, n, all_expected, sat_expected] : cases) {
            RefinementStream all(m, n);
            BigCount total = 0;
            while (auto chain = all.next()) {
                ++total;
                const ChainCheck check = verify_chain(*chain);
                if (!check.ok) throw Failure("invalid chain: " + check.diagnostic);
            }
            expect_eq(total, refinement_count(m, n), "stream total vs closed form");
            expect_eq(total, BigCount(all_expected), "stream total vs reference");

            RefinementStream saturated(m, n, true);
            BigCount sat_total = 0;
            while (auto chain = saturated.next()) {
                ++sat_total;
                if (BigCount(chain->paths.size()) != saturated_level_count(m, n))
                    throw Failure("saturated chain length");
            }
            expect_eq(sat_total, saturated_refinement_count(m, n),
                      "saturated stream total vs closed form");
            expect_eq(sat_total, BigCount(sat_expected), "saturated stream total vs reference");

            // Independent route: chains counted by exhaustive interval recursion.
            const ProfileFamily family = distinct_profiles(m, n);
            BigCount product = 1;
            for (size_t g = 0; g + 1 < family.profiles.size(); ++g)
                product *= oracle::chain_count(family.profiles[g].second,
                                               family.profiles[g + 1].second);
            expect_eq(product, total, "oracle gap product vs stream total");
        }
    });

    criterion(9, "determinant, DP and oracle agree on every down-set", 60.0, [] {
        for (long long m = 1; m <= 6; ++m) {
            for (long long n = 1; n <= 6; ++n) {
                const auto universe = oracle::enumerate_all_paths(m, n);
                for (const LatticePath& p : universe.paths) {
                    const BigCount dp = count_dominated(p);
                    if (dp != kreweras_count(p) || dp != oracle::downset_count(universe, p))
                        throw Failure("down-set mismatch at " + p.to_string());
                }
            }
        }
        for (long long m = 1; m <= 10; ++m) {
            for (long long n = 1; n <= 10; ++n) {
                const auto universe = oracle::enumerate_all_paths(m, n);
                for (const auto& [r, prof] : distinct_profiles(m, n).profiles) {
                    const BigCount dp = count_dominated(prof);
                    if (dp != kreweras_count(prof) || dp != oracle::downset_count(universe, prof))
                        throw Failure("profile down-set mismatch at r = " + std::to_string(r) +
                                      " of (" + std::to_string(m) + "," + std::to_string(n) + ")");
                }
            }
        }
    });

    criterion(10, "ordered Bell numbers: fixed values and the 1/(2-exp(t)) series through k = 12",
              1.0, [] {
                  const std::vector<long long> expected{1, 1, 3, 13, 75, 541};
                  for (size_t k = 0; k < expected.size(); ++k)
                      expect_eq(ordered_bell(static_cast<long long>(k)), BigCount(expected[k]),
                                "ordered_bell(" + std::to_string(k) + ")");

                  const int kmax = 12;
                  std::vector<ExactRational> f(kmax + 1), g(kmax + 1);
                  BigCount fact = 1;
                  for (int j = 0; j <= kmax; ++j) {
                      if (j > 0) fact *= j;
                      f[static_cast<size_t>(j)] = ExactRational(BigCount(j == 0 ? 1 : -1), fact);
                  }
                  g[0] = 1 / f[0];
                  for (int k = 1; k <= kmax; ++k) {
                      ExactRational acc = 0;
                      for (int j = 1; j <= k; ++j)
                          acc += f[static_cast<size_t>(j)] * g[static_cast<size_t>(k - j)];
                      g[static_cast<size_t>(k)] = -acc / f[0];
                  }
                  fact = 1;
                  for (int k = 0; k <= kmax; ++k) {
                      if (k > 0) fact *= k;
                      if (ExactRational(ordered_bell(k), 1) != g[static_cast<size_t>(k)] * fact)
                          throw Failure("series coefficient k = " + std::to_string(k));
                  }
              });

    criterion(11, "path statistic equals the empirical CDF evaluation on 1000 random samples",
              10.0, [] {
                  std::mt19937 rng(424242);
                  for (int trial = 0; trial < 1000; ++trial) {
                      const long long m = std::uniform_int_distribution<long long>(1, 12)(rng);
                      const long long n = std::uniform_int_distribution<long long>(1, 12)(rng);
                      // Distinct integers, shuffled, then split between the samples.
                      std::vector<long long> pool(200);
                      std::iota(pool.begin(), pool.end(), 1);
                      std::shuffle(pool.begin(), pool.end(), rng);
                      std::vector<Decimal> xs, ys;
                      std::vector<std::pair<long long, bool>> merged;
                      for (long long i = 0; i < m; ++i) {
                          xs.push_back(Decimal(pool[static_cast<size_t>(i)], 0));
                          merged.emplace_back(pool[static_cast<size_t>(i)], true);
                      }
                      for (long long i = 0; i < n; ++i) {
                          ys.push_back(Decimal(pool[static_cast<size_t>(m + i)], 0));
                          merged.emplace_back(pool[static_cast<size_t>(m + i)], false);
                      }
                      const long long via_path =
                          statistic(gnedenko_path(SampleData(xs, ys)), Tail::Upper);

                      // mn * sup(F_m - G_n) evaluated at the merged order statistics.
                      std::sort(merged.begin(), merged.end());
                      long long best = 0, count_x = 0, count_y = 0;
                      for (const auto& [value, from_x] : merged) {
                          (from_x ? count_x : count_y) += 1;
                          best = std::max(best, n * count_x - m * count_y);
                      }
                      if (via_path != best)
                          throw Failure("trial " + std::to_string(trial) + ": path " +
                                        std::to_string(via_path) + " vs EDF " +
                                        std::to_string(best));
                  }
              });

    if (failures == 0) {
        std::printf("all %d criteria passed\n", 11);
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
