#pragma once

#include <map>
#include <vector>

#include "smirnov/lattice.hpp"
#include "smirnov/rational.hpp"

namespace smirnov::oracle {

// Brute-force ground truth over exhaustively enumerated paths. Everything in
// this namespace is deliberately written without the closed forms it is used
// to check: dominance, the statistic and lattice-point counts are recomputed
// from first principles here, duplication intended.

inline constexpr long long kDefaultBudget = 10'000'000;

struct PathUniverse {
    long long m = 0;
    long long n = 0;
    std::vector<LatticePath> paths;
};

// Every monotone tuple, in lexicographic order. Throws BudgetExceeded when
// C(m+n,n) exceeds the budget.
PathUniverse enumerate_all_paths(long long m, long long n, long long budget = kDefaultBudget);

// Integer statistic of one path, evaluated by walking every vertex.
long long statistic_by_walk(const LatticePath& p, Tail tail);

// Exact histogram of mn*D+ over the whole universe.
std::map<long long, BigCount> statistic_distribution(long long m, long long n,
                                                     long long budget = kDefaultBudget);

BigCount downset_count(const PathUniverse& universe, const LatticePath& p);
BigCount upset_count(const PathUniverse& universe, const LatticePath& p);

// Convenience forms that build the universe themselves.
BigCount downset_count(const LatticePath& p, long long budget = kDefaultBudget);
BigCount upset_count(const LatticePath& p, long long budget = kDefaultBudget);

// Direct scan of all (m+1)(n+1) lattice points on nx - my = r.
long long line_point_count(long long m, long long n, long long r);

// Number of strictly-decreasing path sequences from `upper` to `lower` that
// stay inside the dominance interval between them, counted by exhaustive
// recursion. `budget` bounds the interval size.
BigCount chain_count(const LatticePath& upper, const LatticePath& lower,
                     long long budget = kDefaultBudget);

// Paths strictly between `upper` and `lower` in dominance order; the
// insertion search behind the saturation cross-check.
std::vector<LatticePath> insertable_paths(const LatticePath& upper, const LatticePath& lower,
                                          long long budget = kDefaultBudget);

} // namespace smirnov::oracle
