#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace effprice {

/// Calendar year-month. Ordered, and supports month arithmetic through a
/// linear month index (year * 12 + month - 1).
class YearMonth {
public:
    constexpr YearMonth() = default;
    YearMonth(int year, int month);

    /// Parses "YYYY-MM" or "YYYY-MM-DD" (day is validated, then dropped).
    static YearMonth parse(std::string_view text);
    static constexpr YearMonth from_index(long index) noexcept {
        YearMonth ym;
        ym.index_ = index;
        return ym;
    }

    [[nodiscard]] constexpr int year() const noexcept {
        return static_cast<int>(floor_div(index_, 12));
    }
    [[nodiscard]] constexpr int month() const noexcept {
        return static_cast<int>(index_ - floor_div(index_, 12) * 12) + 1;
    }
    [[nodiscard]] constexpr long index() const noexcept { return index_; }

    [[nodiscard]] constexpr YearMonth plus(long months) const noexcept {
        return from_index(index_ + months);
    }
    /// Number of months from `other` to *this.
    [[nodiscard]] constexpr long minus(YearMonth other) const noexcept {
        return index_ - other.index_;
    }

    /// "YYYY-MM"
    [[nodiscard]] std::string str() const;

    constexpr auto operator<=>(const YearMonth&) const = default;

private:
    static constexpr long floor_div(long a, long b) noexcept {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    }

    long index_ = 0;
};

}  // namespace effprice
