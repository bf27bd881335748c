#include "effprice/series.hpp"

#include <cmath>
#include <string>

#include "effprice/errors.hpp"

namespace effprice {

namespace {

void check_value(SeriesKind kind, double v, YearMonth m) {
    const bool ok = kind == SeriesKind::IndexLevel ? v > 0.0 : v >= 0.0;
    if (!ok || !std::isfinite(v)) {
        throw DomainError(std::string(kind == SeriesKind::IndexLevel
                                          ? "index level must be positive"
                                          : "quoted rate must be non-negative") +
                          " at " + m.str() + ", got " + std::to_string(v));
    }
}

}  // namespace

MonthlySeries::MonthlySeries(SeriesKind kind, YearMonth start, std::vector<double> values)
    : kind_(kind), start_(start), values_(std::move(values)) {
    if (values_.empty()) {
        throw DomainError("a monthly series needs at least one observation");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        check_value(kind_, values_[i], month(i));
    }
}

MonthlySeries MonthlySeries::from_entries(
    SeriesKind kind, const std::vector<std::pair<YearMonth, double>>& entries) {
    if (entries.empty()) {
        throw DomainError("a monthly series needs at least one observation");
    }
    std::vector<std::string> gaps;
    std::vector<double> values;
    values.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) {
            const YearMonth prev = entries[i - 1].first;
            if (!(entries[i].first > prev)) {
                throw DomainError("months must be strictly increasing: " + prev.str() +
                                  " followed by " + entries[i].first.str());
            }
            for (YearMonth m = prev.plus(1); m < entries[i].first; m = m.plus(1)) {
                gaps.push_back(m.str());
            }
        }
        values.push_back(entries[i].second);
    }
    if (!gaps.empty()) {
        throw GapError("series has missing months", std::move(gaps));
    }
    return MonthlySeries(kind, entries.front().first, std::move(values));
}

double MonthlySeries::at(YearMonth m) const {
    if (!contains(m)) {
        throw RangeError("month " + m.str() + " outside series " + start_.str() + ".." +
                         end().str());
    }
    return values_[static_cast<std::size_t>(m.minus(start_))];
}

MonthlySeries MonthlySeries::shifted(long months) const {
    MonthlySeries out = *this;
    out.start_ = start_.plus(months);
    return out;
}

}  // namespace effprice
