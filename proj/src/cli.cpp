#include "smirnov/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "smirnov/counting.hpp"
#include "smirnov/diophantine.hpp"
#include "smirnov/errors.hpp"
#include "smirnov/oracle.hpp"
#include "smirnov/rational.hpp"
#include "smirnov/refinement.hpp"

namespace smirnov::cli {

namespace {

using nlohmann::json;

json tuple_json(const LatticePath& p) {
    json arr = json::array();
    for (long long v : p.tuple()) arr.push_back(v);
    return arr;
}

std::string tuple_cell(const LatticePath& p) {
    std::string out;
    for (size_t i = 0; i < p.tuple().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.tuple()[i]);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string ratio(const ExactRational& q, int digits) {
    return fraction_string(q) + " (" + render_decimal(q, digits) + ")";
}

} // namespace

std::string OutputDocument::text(Format format) const {
    switch (format) {
        case Format::Json: return payload.dump(2) + "\n";
        case Format::Csv: return csv;
        case Format::Human: break;
    }
    return human;
}

std::vector<Decimal> read_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sample file '" + path + "'");
    std::vector<Decimal> values;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const size_t last = line.find_last_not_of(" \t\r");
        try {
            values.push_back(Decimal::parse(line.substr(first, last - first + 1)));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return values;
}

OutputDocument cmd_test(const std::string& x_file, const std::string& y_file, Tail tail,
                        const Options& opt) {
    const SampleData data(read_sample_file(x_file), read_sample_file(y_file));
    const long long m = data.m();
    const long long n = data.n();
    const long long d = std::gcd(m, n);
    const LatticePath path = gnedenko_path(data);
    const long long stat = statistic(path, tail);
    const ExactRational stat_rational(stat, m * n);
    const char* tail_name = tail == Tail::Upper ? "upper" : tail == Tail::Lower ? "lower" : "twosided";

    OutputDocument doc;
    doc.payload = {{"m", m},
                   {"n", n},
                   {"d", d},
                   {"tail", tail_name},
                   {"path", tuple_json(path)},
                   {"statistic_int", stat},
                   {"statistic", fraction_string(stat_rational)},
                   {"statistic_decimal", render_decimal(stat_rational, opt.digits)}};

    std::ostringstream h;
    h << "m = " << m << ", n = " << n << ", d = " << d << "\n"
      << "path " << path.to_string() << "\n"
      << "mn*D(" << tail_name << ") = " << stat << ", D = " << ratio(stat_rational, opt.digits)
      << "\n";

    std::string csv_header = "m,n,d,tail,path,statistic_int,statistic,statistic_decimal";
    std::string csv_row = std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) +
                          "," + tail_name + "," + csv_field(tuple_cell(path)) + "," +
                          std::to_string(stat) + "," + fraction_string(stat_rational) + "," +
                          render_decimal(stat_rational, opt.digits);

    if (tail == Tail::Upper) {
        const ExactRational p_tail = tail_probability(m, n, stat);
        const LatticePath bracket = profile(m, n, stat);
        const ExactRational level = dominance_level(bracket);
        doc.payload["tail_probability"] = fraction_string(p_tail);
        doc.payload["tail_probability_decimal"] = render_decimal(p_tail, opt.digits);
        doc.payload["bracketing_profile"] = tuple_json(bracket);
        doc.payload["dominance_level"] = fraction_string(level);
        doc.payload["dominance_level_decimal"] = render_decimal(level, opt.digits);
        h << "P(mn*D+ >= " << stat << ") = " << ratio(p_tail, opt.digits) << "\n"
          << "bracketing profile " << bracket.to_string()
          << ", down-set level = " << ratio(level, opt.digits) << "\n";
        csv_header += ",tail_probability,tail_probability_decimal,bracketing_profile,"
                      "dominance_level,dominance_level_decimal";
        csv_row += "," + fraction_string(p_tail) + "," + render_decimal(p_tail, opt.digits) + "," +
                   csv_field(tuple_cell(bracket)) + "," + fraction_string(level) + "," +
                   render_decimal(level, opt.digits);
    }
    doc.human = h.str();
    doc.csv = csv_header + "\n" + csv_row + "\n";
    return doc;
}

OutputDocument cmd_levels(long long m, long long n, const Options& opt) {
    const long long d = std::gcd(m, n);
    const LevelTable table = level_table(m, n);

    OutputDocument doc;
    json levels = json::array();
    std::ostringstream h;
    std::ostringstream c;
    h << "natural levels of the (" << m << "," << n << ") upper test; "
      << "level = down-set probability of the profile, tail = P(mn*D+ >= r)\n";
    h << std::left << std::setw(6) << "r" << std::setw(24) << "profile" << std::setw(28) << "level"
      << "tail probability\n";
    c << "r,profile,level,level_decimal,tail_probability,tail_probability_decimal\n";
    for (const LevelEntry& e : table.entries) {
        const ExactRational p_tail = tail_probability(m, n, e.r);
        levels.push_back({{"r", e.r},
                          {"profile", tuple_json(e.profile)},
                          {"level", fraction_string(e.level)},
                          {"level_decimal", render_decimal(e.level, opt.digits)},
                          {"tail_probability", fraction_string(p_tail)},
                          {"tail_probability_decimal", render_decimal(p_tail, opt.digits)}});
        h << std::left << std::setw(6) << e.r << std::setw(24) << e.profile.to_string()
          << std::setw(28) << ratio(e.level, opt.digits) << ratio(p_tail, opt.digits) << "\n";
        c << e.r << "," << csv_field(tuple_cell(e.profile)) << "," << fraction_string(e.level)
          << "," << render_decimal(e.level, opt.digits) << "," << fraction_string(p_tail) << ","
          << render_decimal(p_tail, opt.digits) << "\n";
    }
    doc.payload = {{"m", m}, {"n", n}, {"d", d}, {"levels", levels}};
    doc.human = h.str();
    doc.csv = c.str();
    return doc;
}

OutputDocument cmd_table(TableKind kind, long long max_m, long long max_n, const Options&) {
    if (max_m < 3 || max_n < 3) throw RangeError("table bounds must be at least 3");
    const bool natural = kind == TableKind::Natural;

    OutputDocument doc;
    json rows = json::array();
    std::ostringstream h;
    std::ostringstream c;
    h << (natural ? "natural significance levels" : "levels of saturated refinements") << "\n";
    h << std::setw(5) << "m\\n";
    c << "m\\n";
    for (long long n = 3; n <= max_n; ++n) {
        h << std::setw(6) << n;
        c << "," << n;
    }
    h << "\n";
    c << "\n";
    for (long long m = 3; m <= max_m; ++m) {
        json row = json::array();
        h << std::setw(5) << m;
        c << m;
        for (long long n = 3; n <= max_n; ++n) {
            const BigCount count =
                natural ? natural_level_count(m, n) : saturated_level_count(m, n);
            row.push_back(count.convert_to<long long>());
            h << std::setw(6) << count.str();
            c << "," << count.str();
        }
        rows.push_back(std::move(row));
        h << "\n";
        c << "\n";
    }
    doc.payload = {{"kind", natural ? "natural" : "saturated"},
                   {"min_m", 3},
                   {"min_n", 3},
                   {"max_m", max_m},
                   {"max_n", max_n},
                   {"cells", rows}};
    doc.human = h.str();
    doc.csv = c.str();
    return doc;
}

OutputDocument cmd_refine(long long m, long long n, bool saturated_only, const Options& opt) {
    const BigCount total = refinement_count(m, n);
    const BigCount saturated_total = saturated_refinement_count(m, n);
    const SaturationResult sat = is_saturated(m, n);

    OutputDocument doc;
    doc.payload = {{"m", m},
                   {"n", n},
                   {"d", std::gcd(m, n)},
                   {"refinement_count", total.str()},
                   {"saturated_refinement_count", saturated_total.str()},
                   {"saturated", sat.saturated},
                   {"listing", saturated_only ? "saturated" : "all"}};
    std::ostringstream h;
    std::ostringstream c;
    h << "refinements: " << total.str() << ", saturated refinements: " << saturated_total.str()
      << "\n";
    h << "test saturated: " << (sat.saturated ? "true" : "false");
    if (sat.witness) {
        doc.payload["witness"] = tuple_json(*sat.witness);
        h << ", insertable witness " << sat.witness->to_string();
    }
    h << "\n";
    c << "key,value\nrefinement_count," << total.str() << "\nsaturated_refinement_count,"
      << saturated_total.str() << "\nsaturated," << (sat.saturated ? "true" : "false") << "\n";
    if (sat.witness) c << "witness," << csv_field(tuple_cell(*sat.witness)) << "\n";

    json chains = json::array();
    RefinementStream stream(m, n, saturated_only);
    long long listed = 0;
    c << "chain,position,path\n";
    while (listed < opt.limit) {
        auto chain = stream.next();
        if (!chain) break;
        ++listed;
        json paths = json::array();
        h << "chain " << listed << ":";
        long long pos = 0;
        for (const LatticePath& p : chain->paths) {
            paths.push_back(tuple_json(p));
            h << (pos ? " > " : " ") << p.to_string();
            c << listed << "," << ++pos << "," << csv_field(tuple_cell(p)) << "\n";
        }
        h << "\n";
        chains.push_back(std::move(paths));
    }
    doc.payload["chains"] = std::move(chains);
    doc.payload["chains_listed"] = listed;
    doc.human = h.str();
    doc.csv = c.str();
    return doc;
}

namespace {

struct Check {
    std::string name;
    std::string status; // "pass" | "fail" | "skip"
    std::string detail;
};

constexpr long long kSkip = -1;

template <typename Fn>
Check run_check(const std::string& name, long long ops, long long budget, Fn&& body) {
    if (ops == kSkip || ops > budget)
        return {name, "skip", "enumeration budget exceeded"};
    try {
        std::string detail = body();
        return {name, "pass", detail};
    } catch (const BudgetExceeded& e) {
        return {name, "skip", e.what()};
    } catch (const std::exception& e) {
        return {name, "fail", e.what()};
    }
}

struct CheckFailure : Error {
    using Error::Error;
};

// Overflow-safe op estimate; anything that does not fit is "too big".
long long ops_or_skip(long long a, long long b) {
    if (a <= 0 || b <= 0) return kSkip;
    if (a > (1LL << 62) / b) return kSkip;
    return a * b;
}

} // namespace

OutputDocument cmd_verify(long long m, long long n, const Options& opt) {
    const long long d = std::gcd(m, n);
    const long long budget = opt.budget;
    std::vector<Check> checks;

    checks.push_back(run_check(
        "alpha closed form = lattice point scan", ops_or_skip(n * m + 1, (m + 1) * (n + 1)), budget,
        [&] {
            for (long long r = 0; r <= n * m; ++r)
                if (alpha(m, n, r) != oracle::line_point_count(m, n, r))
                    throw CheckFailure("mismatch at r = " + std::to_string(r));
            return "all r in [0, " + std::to_string(n * m) + "]";
        }));

    checks.push_back(run_check(
        "spectrum closed forms = line point tallies", ops_or_skip(n * m / d, (m + 1) * (n + 1)),
        budget, [&] {
            const Spectrum sp = spectrum(m, n);
            std::vector<long long> tally(static_cast<size_t>(d) + 1, 0);
            for (long long r = d; r <= n * m; r += d)
                ++tally[static_cast<size_t>(oracle::line_point_count(m, n, r))];
            if (tally != sp.s) throw CheckFailure("tally disagrees with closed forms");
            long long weighted = 0;
            for (long long k = 0; k <= d; ++k) weighted += k * sp.s[static_cast<size_t>(k)];
            if (weighted != ((n + 1) * (m + 1) - (d + 1)) / 2)
                throw CheckFailure("weighted sum identity fails");
            return std::string("s = closed form, weighted sum checks");
        }));

    checks.push_back(run_check(
        "natural level count = number of distinct profiles", ops_or_skip(n * m / d + 1, n), budget,
        [&] {
            const auto family = distinct_profiles(m, n);
            if (natural_level_count(m, n) != family.profiles.size())
                throw CheckFailure("closed form " + natural_level_count(m, n).str() + " vs " +
                                   std::to_string(family.profiles.size()) + " profiles");
            return std::to_string(family.profiles.size()) + " profiles";
        }));

    checks.push_back(run_check(
        "saturated level count = 1 + sum of alpha", ops_or_skip(n * m / d + 1, 1), budget, [&] {
            BigCount sum = 1;
            for (long long r = d; r <= n * m; r += d) sum += alpha(m, n, r);
            if (saturated_level_count(m, n) != sum)
                throw CheckFailure("closed form " + saturated_level_count(m, n).str() + " vs " +
                                   sum.str());
            return "sum = " + sum.str();
        }));

    checks.push_back(run_check(
        "refinement counts = per-line products", ops_or_skip(n * m / d + 1, 1), budget, [&] {
            BigCount all = 1, sat = 1;
            for (long long r = d; r <= n * m; r += d) {
                const long long a = alpha(m, n, r);
                all *= ordered_bell(a);
                BigCount f = 1;
                for (long long i = 2; i <= a; ++i) f *= i;
                sat *= f;
            }
            if (refinement_count(m, n) != all || saturated_refinement_count(m, n) != sat)
                throw CheckFailure("products disagree with closed forms");
            return "products match";
        }));

    // Enumeration-backed checks; each needs the full path universe.
    const BigCount universe_size = binomial(m + n, n);
    const bool universe_fits = universe_size <= budget;
    std::optional<oracle::PathUniverse> universe;
    if (universe_fits) universe = oracle::enumerate_all_paths(m, n, budget);

    checks.push_back(run_check("universe size = C(m+n, n)", universe_fits ? 1 : kSkip, budget, [&] {
        if (BigCount(universe->paths.size()) != universe_size)
            throw CheckFailure("enumerated " + std::to_string(universe->paths.size()) + " paths");
        return universe_size.str() + " paths";
    }));

    checks.push_back(run_check(
        "profile down-sets: DP = determinant = oracle filter",
        universe_fits ? ops_or_skip(universe_size.convert_to<long long>(), natural_level_count(m, n).convert_to<long long>())
                      : kSkip,
        budget, [&] {
            for (const auto& [r, prof] : distinct_profiles(m, n).profiles) {
                const BigCount dp = count_dominated(prof);
                if (dp != kreweras_count(prof) || dp != oracle::downset_count(*universe, prof))
                    throw CheckFailure("disagreement at r = " + std::to_string(r));
            }
            return "all profiles agree";
        }));

    checks.push_back(run_check(
        "statistic histogram tails = tail probabilities",
        universe_fits ? universe_size.convert_to<long long>() : kSkip, budget, [&] {
            std::map<long long, BigCount> hist;
            for (const LatticePath& p : universe->paths)
                ++hist[oracle::statistic_by_walk(p, Tail::Upper)];
            for (const auto& [r, prof] : distinct_profiles(m, n).profiles) {
                BigCount tail_count = 0;
                for (const auto& [value, count] : hist)
                    if (value >= r) tail_count += count;
                if (tail_probability(m, n, r) != ExactRational(tail_count, universe_size))
                    throw CheckFailure("tail mismatch at r = " + std::to_string(r));
            }
            return "tails agree at every attainable r";
        }));

    checks.push_back(run_check(
        "dominance of profile r = statistic at most r",
        universe_fits ? ops_or_skip(universe_size.convert_to<long long>(),
                                    ops_or_skip(natural_level_count(m, n).convert_to<long long>(), n))
                      : kSkip,
        budget, [&] {
            for (const auto& [r, prof] : distinct_profiles(m, n).profiles)
                for (const LatticePath& w : universe->paths)
                    if (dominates(w, prof) != (oracle::statistic_by_walk(w, Tail::Upper) <= r))
                        throw CheckFailure("duality fails at r = " + std::to_string(r) + " for " +
                                           w.to_string());
            return "duality holds on the whole universe";
        }));

    checks.push_back(run_check(
        "saturation verdict = exhaustive insertion search",
        universe_fits ? ops_or_skip(universe_size.convert_to<long long>(),
                                    ops_or_skip(natural_level_count(m, n).convert_to<long long>(), n))
                      : kSkip,
        budget, [&] {
            const auto family = distinct_profiles(m, n);
            bool found = false;
            for (size_t g = 0; g + 1 < family.profiles.size() && !found; ++g) {
                const auto& upper = family.profiles[g].second;
                const auto& lower = family.profiles[g + 1].second;
                for (const LatticePath& q : universe->paths) {
                    if (q == upper || q == lower) continue;
                    if (dominates(upper, q) && dominates(q, lower)) {
                        found = true;
                        break;
                    }
                }
            }
            const SaturationResult sat = is_saturated(m, n);
            if (sat.saturated != !found)
                throw CheckFailure(std::string("verdict ") + (sat.saturated ? "true" : "false") +
                                   " but insertion search says otherwise");
            if (sat.saturated != (d == 1)) throw CheckFailure("verdict disagrees with gcd");
            if (sat.witness) {
                // The witness must sit strictly between the profiles bracketing
                // its own statistic value.
                const long long wr = statistic(*sat.witness, Tail::Upper);
                const auto& fam = family.profiles;
                size_t at = 0;
                while (at < fam.size() && fam[at].first != wr) ++at;
                if (at == 0 || at == fam.size() || *sat.witness == fam[at].second ||
                    *sat.witness == fam[at - 1].second ||
                    !dominates(fam[at - 1].second, *sat.witness) ||
                    !dominates(*sat.witness, fam[at].second))
                    throw CheckFailure("witness not strictly inside its gap");
            }
            return found ? "insertable path exists, gcd > 1" : "no insertable path found, gcd = 1";
        }));

    checks.push_back(run_check(
        "per-gap chain counts = ordered Bell numbers", ops_or_skip(n * m / d + 1, n), budget, [&] {
            // Gap intervals hold 2^alpha paths and the chain recursion sweeps
            // their square; check every gap that fits, and compare the full
            // product only when none were skipped.
            const auto family = distinct_profiles(m, n);
            BigCount product = 1;
            size_t checked = 0, gaps = family.profiles.size() - 1;
            for (size_t g = 0; g + 1 < family.profiles.size(); ++g) {
                const long long r = family.profiles[g + 1].first;
                const long long a = alpha(m, n, r);
                if (a > 30 || ops_or_skip(1LL << a, 1LL << a) > budget) continue;
                const BigCount chains = oracle::chain_count(family.profiles[g].second,
                                                            family.profiles[g + 1].second, budget);
                if (chains != ordered_bell(a))
                    throw CheckFailure("gap at r = " + std::to_string(r) + " has " + chains.str() +
                                       " chains");
                product *= chains;
                ++checked;
            }
            if (checked == gaps && product != refinement_count(m, n))
                throw CheckFailure("product of gap chain counts " + product.str() +
                                   " differs from refinement count");
            if (checked == 0) throw BudgetExceeded("every gap interval exceeds the budget");
            return std::to_string(checked) + " of " + std::to_string(gaps) + " gaps checked";
        }));

    OutputDocument doc;
    json rows = json::array();
    std::ostringstream h;
    std::ostringstream c;
    c << "check,status,detail\n";
    bool all_pass = true;
    for (const Check& check : checks) {
        if (check.status == "fail") all_pass = false;
        rows.push_back({{"name", check.name}, {"status", check.status}, {"detail", check.detail}});
        h << "[" << (check.status == "pass" ? "PASS" : check.status == "fail" ? "FAIL" : "SKIP")
          << "] " << check.name;
        if (!check.detail.empty()) h << ": " << check.detail;
        h << "\n";
        c << csv_field(check.name) << "," << check.status << "," << csv_field(check.detail) << "\n";
    }
    h << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    doc.payload = {{"m", m}, {"n", n}, {"d", d}, {"checks", rows}, {"passed", all_pass}};
    doc.human = h.str();
    doc.csv = c.str();
    doc.exit_status = all_pass ? 0 : 1;
    return doc;
}

} // namespace smirnov::cli
