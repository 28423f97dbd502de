#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "smirnov/cli.hpp"
#include "smirnov/errors.hpp"

namespace {

using namespace smirnov;

cli::Format parse_format(const std::string& name) {
    if (name == "human") return cli::Format::Human;
    if (name == "json") return cli::Format::Json;
    return cli::Format::Csv;
}

Tail parse_tail(const std::string& name) {
    if (name == "lower") return Tail::Lower;
    if (name == "twosided") return Tail::TwoSided;
    return Tail::Upper;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact upper-tailed Smirnov two-sample test and its dominance refinements"};
    app.require_subcommand(1);

    std::string format_name = "human";
    int digits = 3;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--digits", digits, "Significant digits for decimals")
        ->check(CLI::Range(1, 50))
        ->capture_default_str();

    std::string x_file, y_file, tail_name = "upper";
    auto* cmd_test = app.add_subcommand("test", "Exact test on two sample files");
    cmd_test->add_option("--x", x_file, "First sample, one decimal per line")->required();
    cmd_test->add_option("--y", y_file, "Second sample, one decimal per line")->required();
    cmd_test->add_option("--tail", tail_name, "Statistic tail")
        ->check(CLI::IsMember({"upper", "lower", "twosided"}))
        ->capture_default_str();

    long long m = 0, n = 0;
    auto* cmd_levels = app.add_subcommand("levels", "Natural levels and tail probabilities");
    cmd_levels->add_option("m", m, "First sample size")->required();
    cmd_levels->add_option("n", n, "Second sample size")->required();

    std::string table_kind = "natural";
    long long max_m = 10, max_n = 10;
    auto* cmd_table = app.add_subcommand("table", "Level-count grid");
    cmd_table->add_option("kind", table_kind, "natural or saturated")
        ->check(CLI::IsMember({"natural", "saturated"}))
        ->required();
    cmd_table->add_option("--max-m", max_m, "Largest m")->capture_default_str();
    cmd_table->add_option("--max-n", max_n, "Largest n")->capture_default_str();

    bool saturated_only = false;
    long long limit = 10;
    auto* cmd_refine = app.add_subcommand("refine", "Dominance refinements");
    cmd_refine->add_option("m", m, "First sample size")->required();
    cmd_refine->add_option("n", n, "Second sample size")->required();
    cmd_refine->add_flag("--saturated", saturated_only, "List saturated refinements only");
    cmd_refine->add_option("--limit", limit, "Chains to list")->capture_default_str();

    long long budget = 10'000'000;
    auto* cmd_verify = app.add_subcommand("verify", "Cross-check closed forms against brute force");
    cmd_verify->add_option("m", m, "First sample size")->required();
    cmd_verify->add_option("n", n, "Second sample size")->required();
    cmd_verify->add_option("--budget", budget, "Enumeration budget")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    cli::Options opt;
    opt.format = parse_format(format_name);
    opt.digits = digits;
    opt.budget = budget;
    opt.limit = limit;

    try {
        cli::OutputDocument doc;
        if (app.got_subcommand(cmd_test)) {
            doc = cli::cmd_test(x_file, y_file, parse_tail(tail_name), opt);
        } else if (app.got_subcommand(cmd_levels)) {
            doc = cli::cmd_levels(m, n, opt);
        } else if (app.got_subcommand(cmd_table)) {
            doc = cli::cmd_table(table_kind == "natural" ? cli::TableKind::Natural
                                                         : cli::TableKind::Saturated,
                                 max_m, max_n, opt);
        } else if (app.got_subcommand(cmd_refine)) {
            doc = cli::cmd_refine(m, n, saturated_only, opt);
        } else {
            doc = cli::cmd_verify(m, n, opt);
        }
        std::cout << doc.text(opt.format);
        return doc.exit_status;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
