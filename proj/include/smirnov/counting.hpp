#pragma once

#include <utility>
#include <vector>

#include "smirnov/lattice.hpp"
#include "smirnov/rational.hpp"

namespace smirnov {

// Binomial coefficient with the (y choose z)+ convention: zero whenever the
// arguments fall outside y >= z >= 0.
BigCount binomial(long long a, long long b);

// Number of paths q with q_i <= p_i everywhere (the down-set of p), by
// dynamic programming over (row, last value).
BigCount count_dominated(const LatticePath& p);

// Number of paths q with q_i >= p_i everywhere (the up-set of p).
BigCount count_dominating(const LatticePath& p);

// Same down-set count as a determinant: the n x n matrix with entries
// binomial(t_{n-j+1} + 1, 1 + j - i), evaluated by fraction-free elimination
// so every intermediate stays an exact integer. Cross-check for the DP.
BigCount kreweras_count(const LatticePath& p);

// Ordered Bell number: ordered partitions of a k-set into nonempty blocks.
// B_k = sum_{j=1..k} C(k,j) B_{k-j}, B_0 = 1.
BigCount ordered_bell(long long k);

// Closed-form count of natural significance levels of the upper-tailed test:
// (d^2 + nm(2d-1) + d(n+m)) / (2d^2); equals the length of
// distinct_profiles(m,n).
BigCount natural_level_count(long long m, long long n);

// Levels of any saturated dominance refinement: ((n+1)(m+1) - (d+1))/2 + 1.
BigCount saturated_level_count(long long m, long long n);

// Number of dominance refinements (including the trivial one):
// B_d^{s_d} * prod_{k=1}^{d-1} B_k^{nm/d^2}.
BigCount refinement_count(long long m, long long n);

// Number of saturated dominance refinements:
// d!^{s_d} * prod_{k=1}^{d-1} k!^{nm/d^2}.
BigCount saturated_refinement_count(long long m, long long n);

// Down-set probability of a path: count_dominated(p) / C(m+n, n).
ExactRational dominance_level(const LatticePath& p);

// P(mn D+ >= r) under the null: 1 for r = 0, otherwise
// 1 - count_dominating(profile(m,n,r-1)) / C(m+n,n). Requires 0 <= r <= nm.
ExactRational tail_probability(long long m, long long n, long long r);

// One row per distinct profile, in descending r so the levels strictly
// increase. Note these are down-set probabilities, not tail probabilities;
// the two conventions are deliberately kept apart (see tail_probability).
struct LevelEntry {
    long long r = 0;
    LatticePath profile;
    ExactRational level;
};

struct LevelTable {
    long long m = 0;
    long long n = 0;
    std::vector<LevelEntry> entries;
};

LevelTable level_table(long long m, long long n);

} // namespace smirnov
