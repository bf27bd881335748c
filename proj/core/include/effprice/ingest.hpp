#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effprice/series.hpp"

namespace effprice {

/// FRED publishes mortgage rates in percent ("3.29"); Percent values are
/// divided by 100 on load.
enum class ValueUnit { Fraction, Percent };

/// How several observations in one calendar month collapse to one value.
enum class Aggregation { Mean, Last, First };

struct RawObservation {
    std::chrono::year_month_day date;
    std::optional<double> value;  ///< absent for FRED's "." placeholder

    bool operator==(const RawObservation&) const = default;
};

/// Contents of a FRED CSV export: "DATE,<SERIES_ID>" then "YYYY-MM-DD,<value>".
struct FredTable {
    std::string series_id;
    std::vector<RawObservation> observations;

    bool operator==(const FredTable&) const = default;
};

struct SeriesSource {
    std::filesystem::path path;
    SeriesKind expected_kind = SeriesKind::IndexLevel;
    ValueUnit unit = ValueUnit::Fraction;
};

/// Throws FormatError on a missing/invalid header or header-only input and
/// ParseError (with a 1-based line number) on a bad row. LF and CRLF accepted.
[[nodiscard]] FredTable parse_fred_csv(std::istream& in, ValueUnit unit);
[[nodiscard]] FredTable parse_fred_csv_text(std::string_view text, ValueUnit unit);
[[nodiscard]] FredTable parse_fred_csv(const SeriesSource& source);

/// Writes LF-terminated FRED CSV. Values are converted back to `unit` using
/// the shortest decimal that re-parses to the same double (exact for any
/// value produced by parse_fred_csv with the same unit).
void write_fred_csv(std::ostream& out, const FredTable& table, ValueUnit unit);

/// Groups observations by calendar month and aggregates present values.
/// Throws GapError listing months with no present value or no rows between
/// the first and last month.
[[nodiscard]] MonthlySeries to_monthly(std::span<const RawObservation> observations,
                                       SeriesKind kind, Aggregation how = Aggregation::Mean);

/// Inclusive month-range slice. DomainError if start > end, RangeError when
/// the slice would be empty.
[[nodiscard]] MonthlySeries clip(const MonthlySeries& series, YearMonth start, YearMonth end);

/// parse_fred_csv followed by to_monthly with the source's kind.
[[nodiscard]] MonthlySeries load_monthly(const SeriesSource& source,
                                         Aggregation how = Aggregation::Mean);

/// Debug dump: "month,value" header, one "YYYY-MM,<value>" row per month.
void write_monthly_csv(std::ostream& out, const MonthlySeries& series);

}  // namespace effprice
