#pragma once

#include "effprice/errors.hpp"

namespace effprice {

/// How a quoted mortgage rate maps to the per-month rate used in the
/// amortization formulas. Freddie Mac / FRED quote annual nominal rates
/// compounded monthly, so AnnualNominal divides by 12.
enum class RateConvention { AnnualNominal, MonthlyPeriodic };

/// Fixed-rate mortgage terms shared by every purchase in a comparison.
class LoanTerms {
public:
    /// Throws DomainError unless term_months >= 1 and 0 <= down_payment_rate < 1.
    explicit LoanTerms(int term_months = 360, double down_payment_rate = 0.20,
                       RateConvention convention = RateConvention::AnnualNominal);

    [[nodiscard]] int term_months() const noexcept { return term_months_; }
    /// Fraction of the price paid upfront (alpha).
    [[nodiscard]] double down_payment_rate() const noexcept { return down_payment_rate_; }
    [[nodiscard]] RateConvention convention() const noexcept { return convention_; }

    bool operator==(const LoanTerms&) const = default;

private:
    int term_months_;
    double down_payment_rate_;
    RateConvention convention_;
};

/// Per-month interest rate as a decimal fraction, in [0, 1).
class PeriodicRate {
public:
    explicit PeriodicRate(double value);

    [[nodiscard]] double value() const noexcept { return value_; }

    auto operator<=>(const PeriodicRate&) const = default;

private:
    double value_;
};

/// One-period comparison: buy now at the baseline rate, or next period at the
/// alternative rate after nominal prices moved by `nominal_growth`.
/// Rates are quoted per `terms.convention()`, as decimal fractions.
class RateScenario {
public:
    RateScenario(double baseline_rate, double alternative_rate, double nominal_growth,
                 LoanTerms terms = LoanTerms{});

    [[nodiscard]] double baseline_rate() const noexcept { return baseline_rate_; }
    [[nodiscard]] double alternative_rate() const noexcept { return alternative_rate_; }
    [[nodiscard]] double nominal_growth() const noexcept { return nominal_growth_; }
    [[nodiscard]] const LoanTerms& terms() const noexcept { return terms_; }

private:
    double baseline_rate_;
    double alternative_rate_;
    double nominal_growth_;
    LoanTerms terms_;
};

class PurchaseQuote {
public:
    PurchaseQuote(double price, double rate, LoanTerms terms = LoanTerms{});

    [[nodiscard]] double price() const noexcept { return price_; }
    [[nodiscard]] double rate() const noexcept { return rate_; }
    [[nodiscard]] const LoanTerms& terms() const noexcept { return terms_; }

private:
    double price_;
    double rate_;
    LoanTerms terms_;
};

[[nodiscard]] PeriodicRate to_periodic(double quoted_rate, RateConvention convention);
[[nodiscard]] PeriodicRate to_periodic(double quoted_rate, const LoanTerms& terms);

/// Present value of an annuity paying 1 per month for `term_months` months:
/// ((1+r)^T - 1) / (r (1+r)^T), with the limit T at r = 0.
[[nodiscard]] double discount_factor(PeriodicRate rate, int term_months);

/// Level monthly payment on the financed share (1 - alpha) of the price.
[[nodiscard]] double monthly_payment(const PurchaseQuote& quote);

/// Down payment alpha * P.
[[nodiscard]] double down_payment(const PurchaseQuote& quote);

/// Multiplier turning a next-period nominal price into a price comparable with
/// today's financing: (1 - alpha) * beta(baseline) / beta(alternative) + alpha.
/// Exactly 1 when both rates are equal.
[[nodiscard]] double price_adjuster(double baseline_rate, double alternative_rate,
                                    const LoanTerms& terms);

[[nodiscard]] double gamma(const RateScenario& scenario);

[[nodiscard]] double effective_price(double price_b, const RateScenario& scenario);

/// g* = gamma (1 + g) - 1, evaluated as gamma * g + (gamma - 1) so that
/// gamma == 1 returns g bit-for-bit.
[[nodiscard]] double effective_growth(double adjuster, double nominal_growth) noexcept;
[[nodiscard]] double effective_growth(const RateScenario& scenario);

}  // namespace effprice
