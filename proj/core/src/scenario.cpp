#include "effprice/scenario.hpp"

#include <cmath>
#include <string>

namespace effprice {

namespace {

// Rows are generated as min + i * step; anything this close to the baseline is
// snapped onto it so the baseline row is exact.
constexpr double kRateSnap = 1e-12;

std::size_t step_count(double lo, double hi, double step) {
    // Integer count, with slack for (hi - lo) / step landing a hair below an
    // integer, e.g. 0.035 / 0.00125.
    const double span = (hi - lo) / step;
    if (!std::isfinite(span) || span + 1.0 > static_cast<double>(max_grid_rows)) {
        throw SizeError("rate range produces more than " + std::to_string(max_grid_rows) +
                        " rows");
    }
    return static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
}

std::vector<double> rate_points(double lo, double hi, double step, double snap_to) {
    const std::size_t n = lo == hi ? 1 : step_count(lo, hi, step);
    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) {
        double r = lo + static_cast<double>(i) * step;
        if (std::abs(r - snap_to) <= kRateSnap) {
            r = snap_to;
        }
        rates[i] = r;
    }
    return rates;
}

void require_range(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0) {
        throw DomainError("rate bounds must be finite and non-negative");
    }
    if (lo > hi) {
        throw DomainError("empty rate range: minimum exceeds maximum");
    }
    if (!(step > 0.0) && lo != hi) {
        throw DomainError("rate step must be positive");
    }
}

int sign_within(double value, double tolerance) {
    if (std::abs(value) <= tolerance) {
        return 0;
    }
    return value > 0.0 ? 1 : -1;
}

}  // namespace

void GridSpec::validate() const {
    require_range(rate_min, rate_max, rate_step);
    if (!(rate_step > 0.0)) {
        throw DomainError("rate step must be positive");
    }
    if (!(baseline_rate >= 0.0)) {
        throw DomainError("baseline rate must be non-negative");
    }
    if (growth_values.empty()) {
        throw DomainError("at least one growth value is required");
    }
    for (std::size_t j = 0; j < growth_values.size(); ++j) {
        if (!(growth_values[j] > -1.0)) {
            throw DomainError("growth values must be greater than -1");
        }
        if (j > 0 && !(growth_values[j] > growth_values[j - 1])) {
            throw DomainError("growth values must be strictly increasing");
        }
    }
    (void)row_count();
}

std::size_t GridSpec::row_count() const {
    return rate_min == rate_max ? 1 : step_count(rate_min, rate_max, rate_step);
}

std::optional<std::size_t> EffectiveGrid::baseline_row() const {
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (rates[i] == spec.baseline_rate) {
            return i;
        }
    }
    return std::nullopt;
}

EffectiveGrid build_grid(const GridSpec& spec) {
    spec.validate();
    EffectiveGrid grid{spec, rate_points(spec.rate_min, spec.rate_max, spec.rate_step,
                                         spec.baseline_rate),
                       {}};
    grid.cells.reserve(grid.rates.size());
    for (double rate : grid.rates) {
        const double adjuster = price_adjuster(spec.baseline_rate, rate, spec.terms);
        std::vector<double> row;
        row.reserve(spec.growth_values.size());
        for (double g : spec.growth_values) {
            row.push_back(effective_growth(adjuster, g));
        }
        grid.cells.push_back(std::move(row));
    }
    return grid;
}

std::string_view RegionLabel::name() const noexcept {
    switch (region) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::D: return "D";
        case Region::E: return "E";
        case Region::F: return "F";
        case Region::OnBoundary: return "OnBoundary";
    }
    return "?";
}

std::string_view RegionLabel::recommendation() const noexcept {
    switch (region) {
        case Region::A:
            return "Should buy now; future mortgage rate reduction is not enough to compensate "
                   "for price increase";
        case Region::B:
            return "Should buy now; double whamming from future increase in both mortgage rate "
                   "and price";
        case Region::C:
            return "Should buy now; future price reduction is not enough to compensate for "
                   "mortgage rate increase";
        case Region::D:
            return "Should wait; future mortgage rate increase is well compensated by price "
                   "reduction";
        case Region::E:
            return "Should wait; future purchases benefit from reduction in both price and "
                   "mortgage rate";
        case Region::F:
            return "Should wait; future price increase is well compensated by mortgage rate "
                   "reduction";
        case Region::OnBoundary:
            return "On a boundary line; buying now and buying next period are equivalent on at "
                   "least one axis";
    }
    return "";
}

RegionLabel region_for(SignTriple s) {
    if (s.price_change == 0 || s.rate_change == 0 || s.effective_growth == 0) {
        return {Region::OnBoundary};
    }
    const bool price_up = s.price_change > 0;
    const bool rate_up = s.rate_change > 0;
    const bool dearer = s.effective_growth > 0;
    if (dearer) {
        if (price_up && !rate_up) return {Region::A};
        if (price_up && rate_up) return {Region::B};
        if (!price_up && rate_up) return {Region::C};
    } else {
        if (!price_up && rate_up) return {Region::D};
        if (!price_up && !rate_up) return {Region::E};
        if (price_up && !rate_up) return {Region::F};
    }
    throw InvariantError("sign triple (" + std::to_string(s.price_change) + "," +
                         std::to_string(s.rate_change) + "," +
                         std::to_string(s.effective_growth) + ") cannot occur");
}

SignTriple signs_of(const RateScenario& scenario, double tolerance) {
    if (!(tolerance >= 0.0)) {
        throw DomainError("tolerance must be non-negative");
    }
    return {sign_within(scenario.nominal_growth(), tolerance),
            sign_within(scenario.alternative_rate() - scenario.baseline_rate(), tolerance),
            sign_within(effective_growth(scenario), tolerance)};
}

RegionLabel classify(const RateScenario& scenario, double tolerance) {
    return region_for(signs_of(scenario, tolerance));
}

double neutral_growth_via_adjuster(double baseline_rate, double alternative_rate,
                                   const LoanTerms& terms) {
    const double adjuster = price_adjuster(baseline_rate, alternative_rate, terms);
    return (1.0 - adjuster) / adjuster;
}

double neutral_growth_via_discount_factors(double baseline_rate, double alternative_rate,
                                           const LoanTerms& terms) {
    const double alpha = terms.down_payment_rate();
    const double beta_a =
        discount_factor(to_periodic(baseline_rate, terms), terms.term_months());
    const double beta_b =
        discount_factor(to_periodic(alternative_rate, terms), terms.term_months());
    return (1.0 - alpha) * (beta_b - beta_a) / (alpha * beta_b + (1.0 - alpha) * beta_a);
}

NeutralityPoint neutral_growth(double baseline_rate, double alternative_rate,
                               const LoanTerms& terms) {
    return {alternative_rate,
            neutral_growth_via_discount_factors(baseline_rate, alternative_rate, terms)};
}

std::vector<NeutralityPoint> sample_neutrality_line(double baseline_rate, double rate_min,
                                                    double rate_max, double step,
                                                    const LoanTerms& terms) {
    require_range(rate_min, rate_max, step);
    std::vector<NeutralityPoint> points;
    for (double rate : rate_points(rate_min, rate_max, step, baseline_rate)) {
        points.push_back(neutral_growth(baseline_rate, rate, terms));
    }
    return points;
}

}  // namespace effprice
