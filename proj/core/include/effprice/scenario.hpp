#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "effprice/mortgage.hpp"

namespace effprice {

/// Rows are quoted rates rate_min, rate_min + step, ..., rate_max; columns are
/// nominal growth fractions. Rates are decimal fractions (0.045 == 4.5%).
struct GridSpec {
    double baseline_rate = 0.045;
    double rate_min = 0.035;
    double rate_max = 0.070;
    double rate_step = 0.00125;
    std::vector<double> growth_values = {-0.10, -0.08, -0.06, -0.04, -0.02, -0.01, 0.0,
                                         0.01,  0.02,  0.04,  0.06,  0.08,  0.10};
    LoanTerms terms{};

    /// Throws DomainError on an invalid spec and SizeError when the row count
    /// would exceed max_grid_rows.
    void validate() const;
    [[nodiscard]] std::size_t row_count() const;
};

inline constexpr std::size_t max_grid_rows = 1'000'000;

struct EffectiveGrid {
    GridSpec spec;
    std::vector<double> rates;
    /// cells[row][column], row per rate, column per growth value.
    std::vector<std::vector<double>> cells;

    [[nodiscard]] double at(std::size_t row, std::size_t column) const {
        return cells.at(row).at(column);
    }
    /// Index of the row whose rate is the baseline, if the grid contains it.
    [[nodiscard]] std::optional<std::size_t> baseline_row() const;
};

[[nodiscard]] EffectiveGrid build_grid(const GridSpec& spec);

enum class Region { A, B, C, D, E, F, OnBoundary };

struct RegionLabel {
    Region region;

    /// "A" .. "F" or "OnBoundary".
    [[nodiscard]] std::string_view name() const noexcept;
    [[nodiscard]] std::string_view recommendation() const noexcept;

    bool operator==(const RegionLabel&) const = default;
};

/// Sign of each quantity: +1, -1, or 0 when within tolerance of zero.
struct SignTriple {
    int price_change;
    int rate_change;
    int effective_growth;
};

inline constexpr double default_boundary_tolerance = 1e-9;

/// Maps a sign triple to its region; any zero sign gives OnBoundary. Throws
/// InvariantError for (+,+,-) and (-,-,+), which cannot arise from gamma > 0.
[[nodiscard]] RegionLabel region_for(SignTriple signs);
[[nodiscard]] SignTriple signs_of(const RateScenario& scenario, double tolerance);
[[nodiscard]] RegionLabel classify(const RateScenario& scenario,
                                   double tolerance = default_boundary_tolerance);

struct NeutralityPoint {
    double alternative_rate;
    double neutral_growth;
};

/// Nominal growth g solving gamma (1 + g) - 1 = 0, i.e. (1 - gamma) / gamma.
[[nodiscard]] NeutralityPoint neutral_growth(double baseline_rate, double alternative_rate,
                                             const LoanTerms& terms);

/// The two algebraic forms of the neutrality line. They are equal in exact
/// arithmetic; the first goes through gamma, the second through the
/// discount factors directly.
[[nodiscard]] double neutral_growth_via_adjuster(double baseline_rate, double alternative_rate,
                                                 const LoanTerms& terms);
[[nodiscard]] double neutral_growth_via_discount_factors(double baseline_rate,
                                                         double alternative_rate,
                                                         const LoanTerms& terms);

/// Samples the neutrality line at rate_min, rate_min + step, ..., rate_max.
/// A degenerate range rate_min == rate_max yields a single point.
[[nodiscard]] std::vector<NeutralityPoint> sample_neutrality_line(double baseline_rate,
                                                                  double rate_min,
                                                                  double rate_max, double step,
                                                                  const LoanTerms& terms);

}  // namespace effprice
