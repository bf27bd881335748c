#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "effprice/effprice.hpp"

namespace effprice::cli {

namespace {

// The command line takes rates and growths in percent; the library works in
// fractions. This is the only place the conversion happens.
double from_percent(double pct) { return pct / 100.0; }

struct LoanFlags {
    double alpha = 0.20;
    int term = 360;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--alpha", alpha, "Down payment rate as a fraction in [0, 1)")
            ->capture_default_str()
            ->check(CLI::Validator(
                [](std::string& s) -> std::string {
                    double v = 0.0;
                    if (!CLI::detail::lexical_cast(s, v) || !(v >= 0.0 && v < 1.0)) {
                        return "alpha must be in [0, 1)";
                    }
                    return {};
                },
                "[0,1)"));
        cmd.add_option("--term", term, "Mortgage term in months")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    }

    [[nodiscard]] LoanTerms terms() const { return LoanTerms(term, alpha); }
};

CLI::Validator positive_step() {
    return CLI::Validator(
        [](std::string& s) -> std::string {
            double v = 0.0;
            if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0)) {
                return "step must be positive";
            }
            return {};
        },
        "POSITIVE");
}

YearMonth month_flag(const std::string& text) {
    try {
        return YearMonth::parse(text);
    } catch (const DomainError& e) {
        throw CLI::ValidationError("month", e.what());
    }
}

struct SeriesFlags {
    std::string hpi;
    std::string rates;
    std::string rates_unit = "percent";
    std::string aggregate = "mean";
    int lag = default_lag_months;
    std::string from;
    std::string to;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--hpi", hpi, "FRED CSV with the home price index (e.g. CSUSHPINSA)");
        cmd.add_option("--rates", rates, "FRED CSV with mortgage rates (e.g. MORTGAGE30US)");
        cmd.add_option("--rates-unit", rates_unit, "Unit of the rate file values")
            ->capture_default_str()
            ->check(CLI::IsMember({"percent", "fraction"}));
        cmd.add_option("--aggregate", aggregate, "Within-month aggregation of rate observations")
            ->capture_default_str()
            ->check(CLI::IsMember({"mean", "last", "first"}));
        cmd.add_option("--lag", lag, "Months by which rates lead the index")->capture_default_str();
        cmd.add_option("--from", from, "First month of the window (YYYY-MM)");
        cmd.add_option("--to", to, "Last month of the window (YYYY-MM)");
    }

    [[nodiscard]] std::filesystem::path resolve(const std::string& given,
                                                const char* default_name) const {
        if (!given.empty()) {
            return given;
        }
        const char* dir = std::getenv("EFFPRICE_DATA_DIR");
        if (dir == nullptr || *dir == '\0') {
            throw CLI::RequiredError(std::string("--") +
                                     (std::string(default_name) == "CSUSHPINSA.csv" ? "hpi"
                                                                                     : "rates") +
                                     " (or set EFFPRICE_DATA_DIR)");
        }
        return std::filesystem::path(dir) / default_name;
    }

    [[nodiscard]] AdjustedIndex run(const LoanTerms& terms) const {
        const SeriesSource hpi_src{resolve(hpi, "CSUSHPINSA.csv"), SeriesKind::IndexLevel,
                                   ValueUnit::Fraction};
        const SeriesSource rate_src{resolve(rates, "MORTGAGE30US.csv"), SeriesKind::QuotedRate,
                                    rates_unit == "percent" ? ValueUnit::Percent
                                                            : ValueUnit::Fraction};
        const Aggregation how = aggregate == "last"    ? Aggregation::Last
                                : aggregate == "first" ? Aggregation::First
                                                       : Aggregation::Mean;
        MonthlySeries index = load_monthly(hpi_src, Aggregation::Mean);
        const MonthlySeries rate_series = load_monthly(rate_src, how);
        if (!from.empty() || !to.empty()) {
            const YearMonth lo = from.empty() ? index.start() : month_flag(from);
            const YearMonth hi = to.empty() ? index.end() : month_flag(to);
            if (lo < index.start() || hi > index.end()) {
                throw RangeError("window " + lo.str() + ".." + hi.str() + " outside index " +
                                 index.start().str() + ".." + index.end().str());
            }
            index = clip(index, lo, hi);
        }
        return neutralize(index, rate_series, terms, lag);
    }
};

void require_growth(double pct) {
    if (!(pct > -100.0)) {
        throw CLI::ValidationError("--growth", "growth must be greater than -100%");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mortgage-rate-adjusted effective home prices", "effprice"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    std::string out_path;
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--out", out_path, "Write results to PATH instead of stdout");

    std::function<void(std::ostream&, OutputFormat)> action;
    OutputFormat default_format = OutputFormat::Table;

    // effective
    auto* effective = app.add_subcommand("effective", "Adjuster, effective growth and price for one scenario");
    double eff_base = 0.0, eff_rate = 0.0, eff_growth = 0.0;
    std::optional<double> eff_price;
    LoanFlags eff_loan;
    effective->add_option("--baseline-rate", eff_base, "Current mortgage rate, percent")
        ->required()->check(CLI::NonNegativeNumber);
    effective->add_option("--rate", eff_rate, "Alternative mortgage rate, percent")
        ->required()->check(CLI::NonNegativeNumber);
    effective->add_option("--growth", eff_growth, "Nominal price growth, percent")->capture_default_str();
    effective->add_option("--price", eff_price, "Nominal price of the later purchase")
        ->check(CLI::PositiveNumber);
    eff_loan.add_to(*effective);
    effective->callback([&] {
        require_growth(eff_growth);
        default_format = OutputFormat::Table;
        action = [&](std::ostream& os, OutputFormat f) {
            const RateScenario s(from_percent(eff_base), from_percent(eff_rate),
                                 from_percent(eff_growth), eff_loan.terms());
            write_effective(os, make_effective_report(s, eff_price), f);
        };
    });

    // grid
    auto* grid = app.add_subcommand("grid", "Effective growth grid over rates and nominal growths");
    double grid_base = 4.5, grid_min = 3.5, grid_max = 7.0, grid_step = 0.125;
    std::vector<double> grid_growths = {-10, -8, -6, -4, -2, -1, 0, 1, 2, 4, 6, 8, 10};
    LoanFlags grid_loan;
    grid->add_option("--baseline-rate", grid_base, "Baseline mortgage rate, percent")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    grid->add_option("--rate-min", grid_min, "First row rate, percent")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    grid->add_option("--rate-max", grid_max, "Last row rate, percent")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    grid->add_option("--rate-step", grid_step, "Row spacing, percent")
        ->capture_default_str()->check(positive_step());
    grid->add_option("--growths", grid_growths, "Column growths, percent, comma separated")
        ->delimiter(',')->capture_default_str();
    grid_loan.add_to(*grid);
    grid->callback([&] {
        default_format = OutputFormat::Csv;
        action = [&](std::ostream& os, OutputFormat f) {
            GridSpec spec;
            spec.baseline_rate = from_percent(grid_base);
            spec.rate_min = from_percent(grid_min);
            spec.rate_max = from_percent(grid_max);
            spec.rate_step = from_percent(grid_step);
            spec.growth_values.clear();
            for (double g : grid_growths) spec.growth_values.push_back(from_percent(g));
            spec.terms = grid_loan.terms();
            write_grid(os, build_grid(spec), f);
        };
    });

    // neutrality
    auto* neutrality = app.add_subcommand("neutrality", "Sample the price-mortgage rate neutrality line");
    double neu_base = 4.5, neu_min = 3.5, neu_max = 7.0, neu_step = 0.125;
    LoanFlags neu_loan;
    neutrality->add_option("--baseline-rate", neu_base, "Baseline mortgage rate, percent")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    neutrality->add_option("--rate-min", neu_min, "Lowest alternative rate, percent")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    neutrality->add_option("--rate-max", neu_max, "Highest alternative rate, percent")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    neutrality->add_option("--rate-step", neu_step, "Sample spacing, percent")
        ->capture_default_str()->check(positive_step());
    neu_loan.add_to(*neutrality);
    neutrality->callback([&] {
        default_format = OutputFormat::Csv;
        action = [&](std::ostream& os, OutputFormat f) {
            const double base = from_percent(neu_base);
            const auto points = sample_neutrality_line(base, from_percent(neu_min),
                                                       from_percent(neu_max),
                                                       from_percent(neu_step), neu_loan.terms());
            write_neutrality(os, base, points, f);
        };
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Buy-now-or-wait region for one scenario");
    double cls_base = 0.0, cls_rate = 0.0, cls_growth = 0.0;
    double cls_tol = default_boundary_tolerance;
    LoanFlags cls_loan;
    classify_cmd->add_option("--baseline-rate", cls_base, "Current mortgage rate, percent")
        ->required()->check(CLI::NonNegativeNumber);
    classify_cmd->add_option("--rate", cls_rate, "Alternative mortgage rate, percent")
        ->required()->check(CLI::NonNegativeNumber);
    classify_cmd->add_option("--growth", cls_growth, "Nominal price growth, percent")
        ->capture_default_str();
    classify_cmd->add_option("--tolerance", cls_tol,
                             "Band around zero treated as on a boundary (fraction units)")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    cls_loan.add_to(*classify_cmd);
    classify_cmd->callback([&] {
        require_growth(cls_growth);
        default_format = OutputFormat::Table;
        action = [&](std::ostream& os, OutputFormat f) {
            const RateScenario s(from_percent(cls_base), from_percent(cls_rate),
                                 from_percent(cls_growth), cls_loan.terms());
            write_classification(os, s, classify(s, cls_tol), f);
        };
    });

    // adjust / impact
    auto* adjust = app.add_subcommand("adjust", "Mortgage-rate-neutral index from FRED CSV files");
    SeriesFlags adj_series;
    LoanFlags adj_loan;
    adj_series.add_to(*adjust);
    adj_loan.add_to(*adjust);
    adjust->callback([&] {
        default_format = OutputFormat::Csv;
        action = [&](std::ostream& os, OutputFormat f) {
            write_adjusted(os, adj_series.run(adj_loan.terms()), f);
        };
    });

    auto* impact_cmd = app.add_subcommand("impact", "Nominal vs adjusted growth over a window");
    SeriesFlags imp_series;
    LoanFlags imp_loan;
    imp_series.add_to(*impact_cmd);
    imp_loan.add_to(*impact_cmd);
    impact_cmd->callback([&] {
        default_format = OutputFormat::Json;
        action = [&](std::ostream& os, OutputFormat f) {
            write_impact(os, impact(imp_series.run(imp_loan.terms())), f);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    const OutputFormat format = output.empty() ? default_format : *parse_output_format(output);
    std::ostringstream buffer;
    try {
        action(buffer, format);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_data_error;
    }

    if (out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "error: cannot write '" << out_path << "'\n";
            return exit_data_error;
        }
    }
    return exit_ok;
}

}  // namespace effprice::cli
