#pragma once

#include <cstddef>
#include <vector>

#include "effprice/mortgage.hpp"
#include "effprice/series.hpp"

namespace effprice {

inline constexpr int default_lag_months = 2;

/// Home price index with mortgage-rate effects removed, together with every
/// intermediate series. Vectors are parallel, one entry per month from
/// `start`; the first entry of each is the neutral element (g = 0,
/// gamma = 1, k = 0, adjusted = nominal).
struct AdjustedIndex {
    YearMonth start;
    std::vector<double> nominal;           ///< h_n
    std::vector<double> growth;            ///< g_n
    std::vector<double> adjuster;          ///< gamma_n, chained r_{n-1} -> r_n
    std::vector<double> effective_growth;  ///< g*_n = gamma_n (1 + g_n) - 1
    std::vector<double> adjustment;        ///< k_n = h_{n-1} g*_n
    std::vector<double> adjusted;          ///< h*_n = h_1 + sum_{i<=n} k_i
    LoanTerms terms;
    int lag_months = default_lag_months;

    [[nodiscard]] std::size_t size() const noexcept { return nominal.size(); }
    [[nodiscard]] YearMonth month(std::size_t i) const noexcept {
        return start.plus(static_cast<long>(i));
    }
    [[nodiscard]] YearMonth end() const noexcept {
        return start.plus(static_cast<long>(nominal.size()) - 1);
    }
};

struct ImpactReport {
    YearMonth window_start;
    YearMonth window_end;
    double nominal_growth;   ///< A = h_end / h_start - 1
    double adjusted_growth;  ///< B, adjustment restarted at the window start
    double impact;           ///< C = (A - B) / (1 + A)
    double down_payment_rate;
    int lag_months;
};

/// g_1 = 0, g_n = (h_n - h_{n-1}) / h_{n-1}.
[[nodiscard]] std::vector<double> growth_series(const MonthlySeries& hpi);

/// gamma_1 = 1, gamma_n = price_adjuster(r_{n-1}, r_n).
[[nodiscard]] std::vector<double> adjuster_series(const MonthlySeries& rates,
                                                  const LoanTerms& terms);

/// Rates relabelled so that the rate observed in month m - lag sits at month
/// m, restricted to the HPI's months. Throws AlignmentError listing every
/// rate month the HPI needs but the rate series lacks.
[[nodiscard]] MonthlySeries align_rates(const MonthlySeries& hpi, const MonthlySeries& rates,
                                        int lag_months);

[[nodiscard]] AdjustedIndex neutralize(const MonthlySeries& hpi, const MonthlySeries& rates,
                                       const LoanTerms& terms,
                                       int lag_months = default_lag_months);

/// h*_n rebuilt as h_n + sum_{i<=n} (gamma_i - 1) h_i, independently of the
/// cumulative adjustment column.
[[nodiscard]] std::vector<double> adjusted_closed_form(const AdjustedIndex& index);

/// Restarts the adjustment at `start` (h*_start = h_start, gamma_start = 1)
/// and reports growth over [start, end]. Throws DomainError if start > end,
/// RangeError if either endpoint is outside the index.
[[nodiscard]] ImpactReport impact(const AdjustedIndex& index, YearMonth start, YearMonth end);
[[nodiscard]] ImpactReport impact(const AdjustedIndex& index);

/// (A - B) / (1 + A)
[[nodiscard]] double impact_share(double nominal_growth, double adjusted_growth) noexcept;

}  // namespace effprice
