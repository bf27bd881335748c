#include "effprice/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "effprice/errors.hpp"
#include "effprice/format.hpp"

namespace effprice {

namespace {

constexpr double kPercentScale = 100.0;

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

std::chrono::year_month_day parse_date(std::string_view text, std::size_t line_no) {
    auto digits = [](std::string_view s, int& out) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return false;
        }
        return std::from_chars(s.data(), s.data() + s.size(), out).ec == std::errc{};
    };
    int y = 0, m = 0, d = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !digits(text.substr(0, 4), y) ||
        !digits(text.substr(5, 2), m) || !digits(text.substr(8, 2), d)) {
        throw ParseError(line_no, "malformed date '" + std::string(text) + "'");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) {
        throw ParseError(line_no, "invalid calendar date '" + std::string(text) + "'");
    }
    return ymd;
}

std::optional<double> parse_number(std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

double from_unit(double v, ValueUnit unit) {
    return unit == ValueUnit::Percent ? v / kPercentScale : v;
}

// Shortest decimal text that parses back (through from_unit) to `value`.
std::string to_unit_text(double value, ValueUnit unit) {
    if (unit == ValueUnit::Fraction) {
        return format_roundtrip(value);
    }
    const double scaled = value * kPercentScale;
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, scaled);
        if (auto back = parse_number(buf); back && from_unit(*back, unit) == value) {
            return buf;
        }
    }
    // value * 100 rounded away from the preimage; probe neighbouring doubles.
    double lo = scaled;
    double hi = scaled;
    for (int step = 0; step < 64; ++step) {
        lo = std::nextafter(lo, -INFINITY);
        hi = std::nextafter(hi, INFINITY);
        for (double candidate : {lo, hi}) {
            if (from_unit(candidate, unit) == value) {
                return format_roundtrip(candidate);
            }
        }
    }
    // Not the image of any parsed decimal; closest available text.
    return format_roundtrip(scaled);
}

std::string date_text(const std::chrono::year_month_day& d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

}  // namespace

FredTable parse_fred_csv(std::istream& in, ValueUnit unit) {
    FredTable table;
    std::string raw;
    std::size_t line_no = 0;

    if (!std::getline(in, raw)) {
        throw FormatError("empty input: expected header 'DATE,<SERIES_ID>'");
    }
    ++line_no;
    std::string_view header = strip_cr(raw);
    if (header.size() >= 3 && static_cast<unsigned char>(header[0]) == 0xEF &&
        static_cast<unsigned char>(header[1]) == 0xBB && static_cast<unsigned char>(header[2]) == 0xBF) {
        header.remove_prefix(3);
    }
    const auto comma = header.find(',');
    const std::string_view date_col = header.substr(0, comma);
    if (comma == std::string_view::npos || (date_col != "DATE" && date_col != "observation_date") ||
        header.size() == comma + 1 || header.find(',', comma + 1) != std::string_view::npos) {
        throw FormatError("expected header 'DATE,<SERIES_ID>', got '" + std::string(header) + "'");
    }
    table.series_id = std::string(header.substr(comma + 1));

    std::size_t pending_blank = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_cr(raw);
        if (line.empty()) {
            ++pending_blank;
            continue;
        }
        if (pending_blank > 0) {
            throw ParseError(line_no - 1, "blank line inside data");
        }
        const auto sep = line.find(',');
        if (sep == std::string_view::npos || line.find(',', sep + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected exactly two fields");
        }
        RawObservation obs{parse_date(line.substr(0, sep), line_no), std::nullopt};
        const std::string_view field = line.substr(sep + 1);
        if (field != ".") {
            const auto v = parse_number(field);
            if (!v) {
                throw ParseError(line_no, "non-numeric value '" + std::string(field) + "'");
            }
            obs.value = from_unit(*v, unit);
        }
        table.observations.push_back(obs);
    }
    if (table.observations.empty()) {
        throw FormatError("no observations after header");
    }
    return table;
}

FredTable parse_fred_csv_text(std::string_view text, ValueUnit unit) {
    std::istringstream in{std::string(text)};
    return parse_fred_csv(in, unit);
}

FredTable parse_fred_csv(const SeriesSource& source) {
    std::ifstream in(source.path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + source.path.string() + "'");
    }
    try {
        return parse_fred_csv(in, source.unit);
    } catch (const ParseError& e) {
        throw ParseError(source.path.string(), e.line(), e.reason());
    } catch (const FormatError& e) {
        throw FormatError(source.path.string() + ": " + e.what());
    }
}

void write_fred_csv(std::ostream& out, const FredTable& table, ValueUnit unit) {
    out << "DATE," << table.series_id << '\n';
    for (const auto& obs : table.observations) {
        out << date_text(obs.date) << ',' << (obs.value ? to_unit_text(*obs.value, unit) : ".")
            << '\n';
    }
}

MonthlySeries to_monthly(std::span<const RawObservation> observations, SeriesKind kind,
                         Aggregation how) {
    // Sorted within a month by (date, value) so the result does not depend on
    // row order.
    std::map<YearMonth, std::vector<std::pair<std::chrono::sys_days, double>>> by_month;
    std::vector<YearMonth> seen;
    for (const auto& obs : observations) {
        const YearMonth m(static_cast<int>(obs.date.year()),
                          static_cast<int>(static_cast<unsigned>(obs.date.month())));
        auto& bucket = by_month[m];
        if (obs.value) {
            bucket.emplace_back(std::chrono::sys_days{obs.date}, *obs.value);
        }
    }
    if (by_month.empty()) {
        throw DomainError("no observations to aggregate");
    }

    std::vector<std::string> gaps;
    std::vector<double> values;
    const YearMonth first = by_month.begin()->first;
    const YearMonth last = by_month.rbegin()->first;
    for (YearMonth m = first; m <= last; m = m.plus(1)) {
        auto it = by_month.find(m);
        if (it == by_month.end() || it->second.empty()) {
            gaps.push_back(m.str());
            continue;
        }
        auto& bucket = it->second;
        std::sort(bucket.begin(), bucket.end());
        double v = 0.0;
        switch (how) {
            case Aggregation::Mean: {
                double sum = 0.0;
                for (const auto& [_, x] : bucket) sum += x;
                v = sum / static_cast<double>(bucket.size());
                // Rounding can push a mean of identical values a hair outside.
                const auto [lo, hi] = std::minmax_element(
                    bucket.begin(), bucket.end(),
                    [](const auto& a, const auto& b) { return a.second < b.second; });
                v = std::clamp(v, lo->second, hi->second);
                break;
            }
            case Aggregation::Last: v = bucket.back().second; break;
            case Aggregation::First: v = bucket.front().second; break;
        }
        values.push_back(v);
    }
    if (!gaps.empty()) {
        throw GapError("no observations for months", std::move(gaps));
    }
    return MonthlySeries(kind, first, std::move(values));
}

MonthlySeries clip(const MonthlySeries& series, YearMonth start, YearMonth end) {
    if (start > end) {
        throw DomainError("clip start " + start.str() + " is after end " + end.str());
    }
    const YearMonth lo = std::max(start, series.start());
    const YearMonth hi = std::min(end, series.end());
    if (lo > hi) {
        throw RangeError("no data between " + start.str() + " and " + end.str() +
                         " (series covers " + series.start().str() + ".." + series.end().str() +
                         ")");
    }
    const auto first = static_cast<std::size_t>(lo.minus(series.start()));
    const auto count = static_cast<std::size_t>(hi.minus(lo)) + 1;
    const auto values = series.values().subspan(first, count);
    return MonthlySeries(series.kind(), lo, std::vector<double>(values.begin(), values.end()));
}

MonthlySeries load_monthly(const SeriesSource& source, Aggregation how) {
    const FredTable table = parse_fred_csv(source);
    try {
        return to_monthly(table.observations, source.expected_kind, how);
    } catch (const GapError& e) {
        throw GapError(source.path.string() + ": no observations for months", e.months());
    }
}

void write_monthly_csv(std::ostream& out, const MonthlySeries& series) {
    out << "month,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << series.month(i).str() << ',' << format_roundtrip(series[i]) << '\n';
    }
}

}  // namespace effprice
