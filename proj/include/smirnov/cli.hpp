#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "smirnov/lattice.hpp"

namespace smirnov::cli {

enum class Format { Human, Json, Csv };

struct Options {
    Format format = Format::Human;
    int digits = 3;                 // significant digits for decimal renderings
    long long budget = 10'000'000;  // enumeration guard for `verify`
    long long limit = 10;           // chains listed by `refine`
};

// Result of one command: a structured payload plus the three renderings.
// JSON and CSV carry every rational as a "num/den" string next to a rendered
// decimal field.
struct OutputDocument {
    nlohmann::json payload;
    std::string human;
    std::string csv;
    int exit_status = 0;

    std::string text(Format format) const;
};

enum class TableKind { Natural, Saturated };

// Exact test on two sample files (one decimal literal per line, '#' comments
// and blank lines ignored).
OutputDocument cmd_test(const std::string& x_file, const std::string& y_file, Tail tail,
                        const Options& opt = {});

// Natural levels of the (m,n) test: down-set levels of the distinct profiles
// together with the tail probabilities of the attainable statistic values.
OutputDocument cmd_levels(long long m, long long n, const Options& opt = {});

// Grid of natural (or saturated-refinement) level counts for
// 3 <= m <= max_m, 3 <= n <= max_n.
OutputDocument cmd_table(TableKind kind, long long max_m, long long max_n,
                         const Options& opt = {});

// Refinement counts, saturation verdict with witness, and up to opt.limit
// explicit chains.
OutputDocument cmd_refine(long long m, long long n, bool saturated_only,
                          const Options& opt = {});

// Oracle-vs-closed-form cross-checks at (m,n); exit_status 0 iff every check
// that ran passed (budget-skipped checks are reported but do not fail).
OutputDocument cmd_verify(long long m, long long n, const Options& opt = {});

// Sample-file ingestion, exposed for reuse and tests.
std::vector<Decimal> read_sample_file(const std::string& path);

} // namespace smirnov::cli
