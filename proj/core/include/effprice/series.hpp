#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "effprice/month.hpp"

namespace effprice {

enum class SeriesKind { IndexLevel, QuotedRate };

/// Contiguous monthly observations. Index levels must be positive; quoted
/// rates non-negative (decimal fractions).
class MonthlySeries {
public:
    MonthlySeries(SeriesKind kind, YearMonth start, std::vector<double> values);

    /// Builds from explicit (month, value) pairs; throws GapError listing the
    /// missing months when they are not contiguous, DomainError when not
    /// strictly increasing or a value violates the kind's bound.
    static MonthlySeries from_entries(SeriesKind kind,
                                      const std::vector<std::pair<YearMonth, double>>& entries);

    [[nodiscard]] SeriesKind kind() const noexcept { return kind_; }
    [[nodiscard]] YearMonth start() const noexcept { return start_; }
    [[nodiscard]] YearMonth end() const noexcept {
        return start_.plus(static_cast<long>(values_.size()) - 1);
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] YearMonth month(std::size_t i) const noexcept {
        return start_.plus(static_cast<long>(i));
    }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] bool contains(YearMonth m) const noexcept { return m >= start_ && m <= end(); }
    /// Throws RangeError when the month is outside the series.
    [[nodiscard]] double at(YearMonth m) const;

    /// Same values relabelled `months` later (negative shifts earlier).
    [[nodiscard]] MonthlySeries shifted(long months) const;

    bool operator==(const MonthlySeries&) const = default;

private:
    SeriesKind kind_;
    YearMonth start_;
    std::vector<double> values_;
};

}  // namespace effprice
