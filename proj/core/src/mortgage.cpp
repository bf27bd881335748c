#include "effprice/mortgage.hpp"

#include <cmath>
#include <string>

namespace effprice {

namespace {

void require_rate(double rate, const char* name) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw DomainError(std::string(name) + " must be a non-negative finite rate, got " +
                          std::to_string(rate));
    }
}

}  // namespace

LoanTerms::LoanTerms(int term_months, double down_payment_rate, RateConvention convention)
    : term_months_(term_months), down_payment_rate_(down_payment_rate), convention_(convention) {
    if (term_months < 1) {
        throw DomainError("term must be at least one month, got " + std::to_string(term_months));
    }
    if (!(down_payment_rate >= 0.0 && down_payment_rate < 1.0)) {
        throw DomainError("down payment rate must be in [0, 1), got " +
                          std::to_string(down_payment_rate));
    }
}

PeriodicRate::PeriodicRate(double value) : value_(value) {
    require_rate(value, "periodic rate");
    if (value >= 1.0) {
        throw DomainError("periodic rate must be below 1, got " + std::to_string(value));
    }
}

RateScenario::RateScenario(double baseline_rate, double alternative_rate, double nominal_growth,
                           LoanTerms terms)
    : baseline_rate_(baseline_rate),
      alternative_rate_(alternative_rate),
      nominal_growth_(nominal_growth),
      terms_(terms) {
    require_rate(baseline_rate, "baseline rate");
    require_rate(alternative_rate, "alternative rate");
    if (!(nominal_growth > -1.0) || !std::isfinite(nominal_growth)) {
        throw DomainError("nominal growth must be greater than -1, got " +
                          std::to_string(nominal_growth));
    }
}

PurchaseQuote::PurchaseQuote(double price, double rate, LoanTerms terms)
    : price_(price), rate_(rate), terms_(terms) {
    if (!(price > 0.0) || !std::isfinite(price)) {
        throw DomainError("price must be positive, got " + std::to_string(price));
    }
    require_rate(rate, "rate");
}

PeriodicRate to_periodic(double quoted_rate, RateConvention convention) {
    require_rate(quoted_rate, "rate");
    switch (convention) {
        case RateConvention::AnnualNominal:
            return PeriodicRate(quoted_rate / 12.0);
        case RateConvention::MonthlyPeriodic:
            return PeriodicRate(quoted_rate);
    }
    throw InvariantError("unknown rate convention");
}

PeriodicRate to_periodic(double quoted_rate, const LoanTerms& terms) {
    return to_periodic(quoted_rate, terms.convention());
}

double discount_factor(PeriodicRate rate, int term_months) {
    if (term_months < 1) {
        throw DomainError("term must be at least one month");
    }
    const double r = rate.value();
    if (r == 0.0) {
        return static_cast<double>(term_months);
    }
    // (1 - (1+r)^-T) / r, written with expm1/log1p to stay accurate as r -> 0.
    return -std::expm1(-static_cast<double>(term_months) * std::log1p(r)) / r;
}

double monthly_payment(const PurchaseQuote& quote) {
    const LoanTerms& terms = quote.terms();
    const double financed = (1.0 - terms.down_payment_rate()) * quote.price();
    if (financed == 0.0) {
        return 0.0;
    }
    return financed / discount_factor(to_periodic(quote.rate(), terms), terms.term_months());
}

double down_payment(const PurchaseQuote& quote) {
    return quote.terms().down_payment_rate() * quote.price();
}

double price_adjuster(double baseline_rate, double alternative_rate, const LoanTerms& terms) {
    const PeriodicRate a = to_periodic(baseline_rate, terms);
    const PeriodicRate b = to_periodic(alternative_rate, terms);
    if (a == b) {
        return 1.0;
    }
    const double alpha = terms.down_payment_rate();
    const double beta_a = discount_factor(a, terms.term_months());
    const double beta_b = discount_factor(b, terms.term_months());
    return (1.0 - alpha) * (beta_a / beta_b) + alpha;
}

double gamma(const RateScenario& scenario) {
    return price_adjuster(scenario.baseline_rate(), scenario.alternative_rate(), scenario.terms());
}

double effective_price(double price_b, const RateScenario& scenario) {
    if (!(price_b > 0.0) || !std::isfinite(price_b)) {
        throw DomainError("price must be positive, got " + std::to_string(price_b));
    }
    return gamma(scenario) * price_b;
}

double effective_growth(double adjuster, double nominal_growth) noexcept {
    return adjuster * nominal_growth + (adjuster - 1.0);
}

double effective_growth(const RateScenario& scenario) {
    return effective_growth(gamma(scenario), scenario.nominal_growth());
}

}  // namespace effprice
