#include "effprice/report.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "effprice/format.hpp"
#include "json.hpp"

namespace effprice {

namespace {

using nlohmann::ordered_json;

double js(double v) { return round_significant(v, json_significant_digits); }

std::string fixed(double v) { return format_fixed(v, table_decimals); }

std::string pct(double fraction, int decimals) {
    return format_fixed(fraction * 100.0, decimals) + "%";
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "table") return OutputFormat::Table;
    return std::nullopt;
}

EffectiveReport make_effective_report(const RateScenario& scenario, std::optional<double> price) {
    EffectiveReport r{scenario, gamma(scenario), effective_growth(scenario), price, std::nullopt};
    if (price) {
        r.effective_price = effective_price(*price, scenario);
    }
    return r;
}

void write_effective(std::ostream& out, const EffectiveReport& r, OutputFormat format) {
    const RateScenario& s = r.scenario;
    switch (format) {
        case OutputFormat::Csv:
            out << "baseline_rate,rate,growth,alpha,term_months,gamma,effective_growth"
                << (r.price ? ",price,effective_price" : "") << '\n';
            out << format_roundtrip(s.baseline_rate()) << ',' << format_roundtrip(s.alternative_rate())
                << ',' << format_roundtrip(s.nominal_growth()) << ','
                << format_roundtrip(s.terms().down_payment_rate()) << ',' << s.terms().term_months()
                << ',' << format_roundtrip(r.adjuster) << ',' << format_roundtrip(r.effective_growth);
            if (r.price) {
                out << ',' << format_roundtrip(*r.price) << ',' << format_roundtrip(*r.effective_price);
            }
            out << '\n';
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["baseline_rate"] = js(s.baseline_rate());
            j["rate"] = js(s.alternative_rate());
            j["growth"] = js(s.nominal_growth());
            j["alpha"] = js(s.terms().down_payment_rate());
            j["term_months"] = s.terms().term_months();
            j["gamma"] = js(r.adjuster);
            j["effective_growth"] = js(r.effective_growth);
            if (r.price) {
                j["price"] = js(*r.price);
                j["effective_price"] = js(*r.effective_price);
            }
            emit(out, j);
            break;
        }
        case OutputFormat::Table:
            out << "baseline rate     " << pct(s.baseline_rate(), 3) << '\n'
                << "alternative rate  " << pct(s.alternative_rate(), 3) << '\n'
                << "nominal growth    " << fixed(s.nominal_growth()) << '\n'
                << "gamma             " << fixed(r.adjuster) << '\n'
                << "effective growth  " << fixed(r.effective_growth) << '\n';
            if (r.price) {
                out << "price             " << format_fixed(*r.price, 2) << '\n'
                    << "effective price   " << format_fixed(*r.effective_price, 2) << '\n';
            }
            break;
    }
}

void write_grid(std::ostream& out, const EffectiveGrid& grid, OutputFormat format) {
    const auto& growths = grid.spec.growth_values;
    const auto baseline = grid.baseline_row();
    switch (format) {
        case OutputFormat::Csv:
            out << "rate";
            for (double g : growths) out << ',' << format_roundtrip(g);
            out << '\n';
            for (std::size_t i = 0; i < grid.rates.size(); ++i) {
                out << format_roundtrip(grid.rates[i]);
                for (double v : grid.cells[i]) out << ',' << format_roundtrip(v);
                out << '\n';
            }
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["baseline_rate"] = js(grid.spec.baseline_rate);
            j["alpha"] = js(grid.spec.terms.down_payment_rate());
            j["term_months"] = grid.spec.terms.term_months();
            j["growth_values"] = ordered_json::array();
            for (double g : growths) j["growth_values"].push_back(js(g));
            j["rows"] = ordered_json::array();
            for (std::size_t i = 0; i < grid.rates.size(); ++i) {
                ordered_json row;
                row["rate"] = js(grid.rates[i]);
                row["effective_growth"] = ordered_json::array();
                for (double v : grid.cells[i]) row["effective_growth"].push_back(js(v));
                j["rows"].push_back(std::move(row));
            }
            emit(out, j);
            break;
        }
        case OutputFormat::Table:
            out << "Effective growth (baseline " << pct(grid.spec.baseline_rate, 3)
                << ", T = " << grid.spec.terms.term_months()
                << ", alpha = " << pct(grid.spec.terms.down_payment_rate(), 0) << ")\n";
            out << std::setw(10) << "rate";
            for (double g : growths) out << std::setw(8) << pct(g, 0);
            out << '\n';
            for (std::size_t i = 0; i < grid.rates.size(); ++i) {
                const bool is_base = baseline && *baseline == i;
                out << (is_base ? '*' : ' ') << std::setw(9) << pct(grid.rates[i], 3);
                for (double v : grid.cells[i]) out << std::setw(8) << fixed(v);
                out << '\n';
            }
            break;
    }
}

void write_neutrality(std::ostream& out, double baseline_rate,
                      std::span<const NeutralityPoint> points, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv:
            out << "alternative_rate,neutral_growth\n";
            for (const auto& p : points) {
                out << format_roundtrip(p.alternative_rate) << ','
                    << format_roundtrip(p.neutral_growth) << '\n';
            }
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["baseline_rate"] = js(baseline_rate);
            j["points"] = ordered_json::array();
            for (const auto& p : points) {
                j["points"].push_back(ordered_json{{"alternative_rate", js(p.alternative_rate)},
                                                   {"neutral_growth", js(p.neutral_growth)}});
            }
            emit(out, j);
            break;
        }
        case OutputFormat::Table:
            out << std::setw(10) << "rate" << std::setw(10) << "growth" << '\n';
            for (const auto& p : points) {
                out << std::setw(10) << pct(p.alternative_rate, 3) << std::setw(10)
                    << fixed(p.neutral_growth) << '\n';
            }
            break;
    }
}

void write_classification(std::ostream& out, const RateScenario& scenario,
                          const RegionLabel& label, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv:
            out << "region,effective_growth,recommendation\n"
                << label.name() << ',' << format_roundtrip(effective_growth(scenario)) << ",\""
                << label.recommendation() << "\"\n";
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["region"] = std::string(label.name());
            j["effective_growth"] = js(effective_growth(scenario));
            j["recommendation"] = std::string(label.recommendation());
            emit(out, j);
            break;
        }
        case OutputFormat::Table:
            out << label.name() << ": " << label.recommendation() << '\n';
            break;
    }
}

void write_adjusted(std::ostream& out, const AdjustedIndex& index, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv:
            out << "month,nominal,growth,gamma,eff_growth,adjustment,adjusted\n";
            for (std::size_t i = 0; i < index.size(); ++i) {
                out << index.month(i).str() << ',' << format_roundtrip(index.nominal[i]) << ','
                    << format_roundtrip(index.growth[i]) << ','
                    << format_roundtrip(index.adjuster[i]) << ','
                    << format_roundtrip(index.effective_growth[i]) << ','
                    << format_roundtrip(index.adjustment[i]) << ','
                    << format_roundtrip(index.adjusted[i]) << '\n';
            }
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["alpha"] = js(index.terms.down_payment_rate());
            j["lag_months"] = index.lag_months;
            j["rows"] = ordered_json::array();
            for (std::size_t i = 0; i < index.size(); ++i) {
                j["rows"].push_back(ordered_json{{"month", index.month(i).str()},
                                                 {"nominal", js(index.nominal[i])},
                                                 {"growth", js(index.growth[i])},
                                                 {"gamma", js(index.adjuster[i])},
                                                 {"eff_growth", js(index.effective_growth[i])},
                                                 {"adjustment", js(index.adjustment[i])},
                                                 {"adjusted", js(index.adjusted[i])}});
            }
            emit(out, j);
            break;
        }
        case OutputFormat::Table:
            out << std::setw(8) << "month" << std::setw(10) << "nominal" << std::setw(10)
                << "gamma" << std::setw(10) << "adjusted" << '\n';
            for (std::size_t i = 0; i < index.size(); ++i) {
                out << std::setw(8) << index.month(i).str() << std::setw(10)
                    << fixed(index.nominal[i]) << std::setw(10) << fixed(index.adjuster[i])
                    << std::setw(10) << fixed(index.adjusted[i]) << '\n';
            }
            break;
    }
}

void write_impact(std::ostream& out, const ImpactReport& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv:
            out << "window_start,window_end,alpha,lag_months,nominal_growth,adjusted_growth,"
                   "impact\n"
                << r.window_start.str() << ',' << r.window_end.str() << ','
                << format_roundtrip(r.down_payment_rate) << ',' << r.lag_months << ','
                << format_roundtrip(r.nominal_growth) << ',' << format_roundtrip(r.adjusted_growth)
                << ',' << format_roundtrip(r.impact) << '\n';
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["window_start"] = r.window_start.str();
            j["window_end"] = r.window_end.str();
            j["alpha"] = js(r.down_payment_rate);
            j["lag_months"] = r.lag_months;
            j["nominal_growth"] = js(r.nominal_growth);
            j["adjusted_growth"] = js(r.adjusted_growth);
            j["impact"] = js(r.impact);
            emit(out, j);
            break;
        }
        case OutputFormat::Table:
            out << "window            " << r.window_start.str() << " .. " << r.window_end.str()
                << '\n'
                << "alpha             " << format_fixed(r.down_payment_rate, 2) << '\n'
                << "lag (months)      " << r.lag_months << '\n'
                << "nominal growth A  " << fixed(r.nominal_growth) << '\n'
                << "adjusted growth B " << fixed(r.adjusted_growth) << '\n'
                << "impact C          " << fixed(r.impact) << '\n';
            break;
    }
}

}  // namespace effprice
