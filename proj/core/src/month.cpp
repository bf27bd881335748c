#include "effprice/month.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "effprice/errors.hpp"

namespace effprice {

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

YearMonth::YearMonth(int year, int month) {
    if (month < 1 || month > 12) {
        throw DomainError("month out of range: " + std::to_string(month));
    }
    index_ = static_cast<long>(year) * 12 + (month - 1);
}

YearMonth YearMonth::parse(std::string_view text) {
    int year = 0;
    int month = 0;
    int day = 1;
    const bool with_day = text.size() == 10;
    const bool ok = (text.size() == 7 || with_day) && text[4] == '-' &&
                    parse_int(text.substr(0, 4), year) && parse_int(text.substr(5, 2), month) &&
                    (!with_day || (text[7] == '-' && parse_int(text.substr(8, 2), day)));
    if (!ok) {
        throw DomainError("expected YYYY-MM or YYYY-MM-DD, got '" + std::string(text) + "'");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{static_cast<unsigned>(month)},
                                          std::chrono::day{static_cast<unsigned>(day)}};
    if (!ymd.ok()) {
        throw DomainError("invalid calendar date '" + std::string(text) + "'");
    }
    return YearMonth(year, month);
}

std::string YearMonth::str() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year(), month());
    return buf;
}

}  // namespace effprice
