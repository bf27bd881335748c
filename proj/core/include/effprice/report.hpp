#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "effprice/hpi.hpp"
#include "effprice/scenario.hpp"

namespace effprice {

/// csv: shortest round-trip numbers (bit-exact with the library values).
/// json: numbers rounded to 6 significant digits.
/// table: human-readable, 3 decimals.
/// Rates and growths are decimal fractions in csv/json and percent in table.
enum class OutputFormat { Csv, Json, Table };

[[nodiscard]] std::optional<OutputFormat> parse_output_format(std::string_view name);

inline constexpr int json_significant_digits = 6;
inline constexpr int table_decimals = 3;

struct EffectiveReport {
    RateScenario scenario;
    double adjuster;
    double effective_growth;
    std::optional<double> price;
    std::optional<double> effective_price;
};

[[nodiscard]] EffectiveReport make_effective_report(const RateScenario& scenario,
                                                    std::optional<double> price);

void write_effective(std::ostream& out, const EffectiveReport& report, OutputFormat format);

/// csv header: "rate,<growth_1>,...,<growth_m>", one row per rate.
void write_grid(std::ostream& out, const EffectiveGrid& grid, OutputFormat format);

/// csv header: "alternative_rate,neutral_growth".
void write_neutrality(std::ostream& out, double baseline_rate,
                      std::span<const NeutralityPoint> points, OutputFormat format);

void write_classification(std::ostream& out, const RateScenario& scenario,
                          const RegionLabel& label, OutputFormat format);

/// csv header: "month,nominal,growth,gamma,eff_growth,adjustment,adjusted".
void write_adjusted(std::ostream& out, const AdjustedIndex& index, OutputFormat format);

/// json keys: window_start, window_end, alpha, lag_months, nominal_growth,
/// adjusted_growth, impact.
void write_impact(std::ostream& out, const ImpactReport& report, OutputFormat format);

}  // namespace effprice
