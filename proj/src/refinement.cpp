#include "smirnov/refinement.hpp"

#include <algorithm>
#include <numeric>

#include "smirnov/errors.hpp"

namespace smirnov {

std::vector<GapCell> gap_cells(long long m, long long n, long long r) {
    if (m < 1 || n < 1) throw RangeError("gap_cells needs positive m and n");
    const long long d = std::gcd(m, n);
    if (r <= 0 || r > n * m || r % d != 0)
        throw NotAttainable("no gap at r = " + std::to_string(r) + " for (" + std::to_string(m) +
                            "," + std::to_string(n) + ")");
    const LineSolutions line = solve_line(m, n, r);
    if (line.points.empty())
        throw NotAttainable("line n*x - m*y = " + std::to_string(r) +
                            " has no lattice point in the rectangle");
    std::vector<GapCell> cells;
    cells.reserve(line.points.size());
    for (const Point& pt : line.points)
        cells.push_back({pt, r, n - pt.y, m - pt.x + 1, m - pt.x});
    return cells;
}

LatticePath flip_cells(const LatticePath& p, const std::vector<GapCell>& cells) {
    std::vector<long long> t = p.tuple();
    std::vector<bool> seen(t.size() + 1, false);
    for (const GapCell& cell : cells) {
        if (cell.row < 1 || cell.row > p.height())
            throw CellMismatch("cell row " + std::to_string(cell.row) + " outside path of height " +
                               std::to_string(p.height()));
        if (seen[static_cast<size_t>(cell.row)])
            throw RowCollision("two cells target row " + std::to_string(cell.row));
        seen[static_cast<size_t>(cell.row)] = true;
        if (p.row(cell.row) != cell.high)
            throw CellMismatch("path " + p.to_string() + " is not adjacent to the cell at (" +
                               std::to_string(cell.point.x) + "," + std::to_string(cell.point.y) +
                               ")");
        t[static_cast<size_t>(cell.row - 1)] = cell.low;
    }
    try {
        return LatticePath(std::move(t), p.width());
    } catch (const InvalidTuple&) {
        throw CellMismatch("flipping breaks path monotonicity on " + p.to_string());
    }
}

ChainCheck verify_chain(const RefinementChain& c) {
    if (c.paths.empty()) return {false, "empty chain"};
    const long long m = c.paths.front().width();
    const long long n = c.paths.front().height();
    for (const LatticePath& p : c.paths)
        if (p.width() != m || p.height() != n)
            return {false, "mixed grid dimensions in chain"};

    for (size_t k = 0; k + 1 < c.paths.size(); ++k) {
        const LatticePath& prev = c.paths[k];
        const LatticePath& next = c.paths[k + 1];
        if (!dominates(prev, next) || prev == next)
            return {false, prev.to_string() + " does not strictly dominate " + next.to_string()};
        std::optional<long long> line_value;
        for (long long i = 1; i <= n; ++i) {
            const long long drop = prev.row(i) - next.row(i);
            if (drop == 0) continue;
            if (drop != 1)
                return {false, "row " + std::to_string(i) + " drops by " + std::to_string(drop) +
                                   " between " + prev.to_string() + " and " + next.to_string()};
            // South-east corner of the flipped unit square.
            const long long x = m - prev.row(i) + 1;
            const long long y = n - i;
            const long long r = n * x - m * y;
            if (!line_value) {
                line_value = r;
            } else if (*line_value != r) {
                return {false, "flips between " + prev.to_string() + " and " + next.to_string() +
                                   " mix the lines r = " + std::to_string(*line_value) + " and r = " +
                                   std::to_string(r)};
            }
        }
        if (!line_value || *line_value <= 0 || *line_value > n * m)
            return {false, "flip between " + prev.to_string() + " and " + next.to_string() +
                               " lies on the non-gap line r = " +
                               std::to_string(line_value.value_or(0))};
    }

    const ProfileFamily family = distinct_profiles(m, n);
    for (const auto& [r, prof] : family.profiles) {
        if (std::find(c.paths.begin(), c.paths.end(), prof) == c.paths.end())
            return {false, "missing profile " + prof.to_string() + " (r = " + std::to_string(r) + ")"};
    }
    return {true, ""};
}

GapRefinementStream::GapRefinementStream(long long m, long long n, long long r, bool saturated_only)
    : m_(m),
      n_(n),
      r_(r),
      saturated_only_(saturated_only),
      cells_(gap_cells(m, n, r)),
      top_(profile(m, n, r - std::gcd(m, n))) {
    reset();
}

void GapRefinementStream::reset() {
    const long long k = static_cast<long long>(cells_.size());
    blocks_ = saturated_only_ ? k : 1;
    assignment_.assign(static_cast<size_t>(k), 0);
    fresh_ = true;
    done_ = false;
}

// Lexicographically next surjective assignment of cells to blocks_ values;
// prefixes are pruned by how many block values the suffix can still cover.
bool GapRefinementStream::advance_assignment() {
    const long long k = static_cast<long long>(cells_.size());
    auto fill_suffix = [&](long long pos) -> bool {
        std::vector<bool> used(static_cast<size_t>(blocks_), false);
        for (long long i = 0; i <= pos; ++i) used[static_cast<size_t>(assignment_[static_cast<size_t>(i)])] = true;
        std::vector<long long> missing;
        for (long long v = 0; v < blocks_; ++v)
            if (!used[static_cast<size_t>(v)]) missing.push_back(v);
        const long long room = k - 1 - pos;
        if (static_cast<long long>(missing.size()) > room) return false;
        long long idx = pos + 1;
        for (long long i = 0; i < room - static_cast<long long>(missing.size()); ++i)
            assignment_[static_cast<size_t>(idx++)] = 0;
        for (long long v : missing) assignment_[static_cast<size_t>(idx++)] = v;
        return true;
    };
    if (fresh_) {
        fresh_ = false;
        return fill_suffix(-1);
    }
    for (long long pos = k - 1; pos >= 0; --pos) {
        while (++assignment_[static_cast<size_t>(pos)] < blocks_)
            if (fill_suffix(pos)) return true;
        assignment_[static_cast<size_t>(pos)] = 0;
    }
    return false;
}

std::optional<std::vector<LatticePath>> GapRefinementStream::next() {
    if (done_) return std::nullopt;
    const long long k = static_cast<long long>(cells_.size());
    while (!advance_assignment()) {
        if (saturated_only_ || blocks_ == k) {
            done_ = true;
            return std::nullopt;
        }
        ++blocks_;
        fresh_ = true;
    }
    std::vector<LatticePath> chain;
    chain.reserve(static_cast<size_t>(blocks_) + 1);
    chain.push_back(top_);
    for (long long b = 0; b < blocks_; ++b) {
        std::vector<GapCell> block;
        for (size_t i = 0; i < cells_.size(); ++i)
            if (assignment_[i] == b) block.push_back(cells_[i]);
        chain.push_back(flip_cells(chain.back(), block));
    }
    return chain;
}

RefinementStream::RefinementStream(long long m, long long n, bool saturated_only)
    : family_(distinct_profiles(m, n)) {
    gaps_.reserve(family_.profiles.size());
    for (size_t g = 1; g < family_.profiles.size(); ++g)
        gaps_.emplace_back(m, n, family_.profiles[g].first, saturated_only);
    current_.resize(gaps_.size());
}

std::optional<RefinementChain> RefinementStream::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        for (size_t g = 0; g < gaps_.size(); ++g) current_[g] = *gaps_[g].next();
    } else {
        // Odometer over the per-gap streams, last gap varying fastest.
        size_t g = gaps_.size();
        while (g > 0) {
            --g;
            if (auto chain = gaps_[g].next()) {
                current_[g] = std::move(*chain);
                break;
            }
            gaps_[g].reset();
            current_[g] = *gaps_[g].next();
            if (g == 0) {
                done_ = true;
                return std::nullopt;
            }
        }
        if (gaps_.empty()) {
            done_ = true;
            return std::nullopt;
        }
    }
    RefinementChain chain;
    chain.paths.push_back(family_.profiles.front().second);
    for (const auto& fragment : current_)
        chain.paths.insert(chain.paths.end(), fragment.begin() + 1, fragment.end());
    return chain;
}

SaturationResult is_saturated(long long m, long long n) {
    if (m < 1 || n < 1) throw RangeError("is_saturated needs positive m and n");
    const long long d = std::gcd(m, n);
    if (d == 1) return {true, std::nullopt};
    for (long long r = d; r <= n * m; r += d) {
        std::vector<GapCell> cells;
        try {
            cells = gap_cells(m, n, r);
        } catch (const NotAttainable&) {
            continue;
        }
        if (cells.size() < 2) continue;
        const LatticePath above = profile(m, n, r - d);
        return {false, flip_cells(above, {cells.front()})};
    }
    return {true, std::nullopt}; // unreachable for d > 1
}

} // namespace smirnov
