#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smirnov/diophantine.hpp"
#include "smirnov/lattice.hpp"
#include "smirnov/rational.hpp"

namespace smirnov {

// Unit square between consecutive profiles, indexed by its south-east corner
// (x,y) on the line nx - my = r. On a path with t_row = high, flipping the
// cell lowers that row to low = high - 1.
struct GapCell {
    Point point;
    long long r = 0;
    long long row = 0;  // i = n - y, 1-based
    long long high = 0; // m - x + 1
    long long low = 0;  // m - x
    bool operator==(const GapCell&) const = default;
};

// The alpha_r cells of an attainable line, ordered by increasing x. Flipping
// all of them maps the (r-d)-profile onto the r-profile. Throws NotAttainable
// when d does not divide r or the line has no rectangle lattice point.
std::vector<GapCell> gap_cells(long long m, long long n, long long r);

// Flip a set of cells (distinct rows) on a path that has t_row = high at
// each of them; the result is strictly dominated by the input.
LatticePath flip_cells(const LatticePath& p, const std::vector<GapCell>& cells);

// Dominance-decreasing list of paths containing every distinct profile,
// where consecutive paths differ by flipping cells of one line.
struct RefinementChain {
    std::vector<LatticePath> paths;
};

struct ChainCheck {
    bool ok = false;
    std::string diagnostic; // empty when ok
};

ChainCheck verify_chain(const RefinementChain& c);

// Chains from the (r-d)-profile down to the r-profile, one per ordered
// partition of the gap's cells: partition blocks are flipped one at a time.
// Enumeration order is by block count, then lexicographic assignment of
// cells (in increasing x) to block indices. With `saturated_only` the blocks
// are singletons, i.e. the stream runs over the alpha_r! cell orderings.
class GapRefinementStream {
  public:
    GapRefinementStream(long long m, long long n, long long r, bool saturated_only = false);

    std::optional<std::vector<LatticePath>> next();
    void reset();

  private:
    bool advance_assignment();

    long long m_;
    long long n_;
    long long r_;
    bool saturated_only_;
    std::vector<GapCell> cells_;
    LatticePath top_;
    long long blocks_ = 0;
    std::vector<long long> assignment_; // cell index -> block
    bool fresh_ = true;
    bool done_ = false;
};

// All dominance refinements of the test (or only the saturated ones), as a
// lazy stream: per-gap choices combined product-wise, later gaps varying
// fastest. Total stream length equals refinement_count(m,n), respectively
// saturated_refinement_count(m,n); never force it for large gcd.
class RefinementStream {
  public:
    RefinementStream(long long m, long long n, bool saturated_only = false);

    std::optional<RefinementChain> next();

  private:
    ProfileFamily family_;
    std::vector<GapRefinementStream> gaps_;
    std::vector<std::vector<LatticePath>> current_;
    bool fresh_ = true;
    bool done_ = false;
};

// gcd(m,n) = 1 verdict with, in the unsaturated case, a path that can be
// inserted strictly between two consecutive profiles.
struct SaturationResult {
    bool saturated = false;
    std::optional<LatticePath> witness;
};

SaturationResult is_saturated(long long m, long long n);

} // namespace smirnov
