#include "effprice/hpi.hpp"

#include <string>

#include "effprice/errors.hpp"

namespace effprice {

std::vector<double> growth_series(const MonthlySeries& hpi) {
    if (hpi.kind() != SeriesKind::IndexLevel) {
        throw DomainError("growth series needs an index-level series");
    }
    std::vector<double> g(hpi.size(), 0.0);
    for (std::size_t n = 1; n < hpi.size(); ++n) {
        g[n] = (hpi[n] - hpi[n - 1]) / hpi[n - 1];
    }
    return g;
}

std::vector<double> adjuster_series(const MonthlySeries& rates, const LoanTerms& terms) {
    if (rates.kind() != SeriesKind::QuotedRate) {
        throw DomainError("adjuster series needs a quoted-rate series");
    }
    std::vector<double> gamma(rates.size(), 1.0);
    for (std::size_t n = 1; n < rates.size(); ++n) {
        gamma[n] = price_adjuster(rates[n - 1], rates[n], terms);
    }
    return gamma;
}

MonthlySeries align_rates(const MonthlySeries& hpi, const MonthlySeries& rates, int lag_months) {
    if (rates.kind() != SeriesKind::QuotedRate) {
        throw DomainError("rate series must hold quoted rates");
    }
    const MonthlySeries lagged = rates.shifted(lag_months);
    std::vector<std::string> missing;
    for (std::size_t i = 0; i < hpi.size(); ++i) {
        if (!lagged.contains(hpi.month(i))) {
            missing.push_back(hpi.month(i).plus(-lag_months).str());
        }
    }
    if (!missing.empty()) {
        throw AlignmentError("rate series (lag " + std::to_string(lag_months) +
                                 ") lacks months needed by the index",
                             std::move(missing));
    }
    const auto first = static_cast<std::size_t>(hpi.start().minus(lagged.start()));
    const auto values = lagged.values().subspan(first, hpi.size());
    return MonthlySeries(SeriesKind::QuotedRate, hpi.start(),
                         std::vector<double>(values.begin(), values.end()));
}

AdjustedIndex neutralize(const MonthlySeries& hpi, const MonthlySeries& rates,
                         const LoanTerms& terms, int lag_months) {
    const MonthlySeries aligned = align_rates(hpi, rates, lag_months);

    AdjustedIndex out{hpi.start(),
                      std::vector<double>(hpi.values().begin(), hpi.values().end()),
                      growth_series(hpi),
                      adjuster_series(aligned, terms),
                      {},
                      {},
                      {},
                      terms,
                      lag_months};
    const std::size_t n_months = out.nominal.size();
    out.effective_growth.assign(n_months, 0.0);
    out.adjustment.assign(n_months, 0.0);
    out.adjusted.assign(n_months, out.nominal.front());
    double level = out.nominal.front();
    for (std::size_t n = 1; n < n_months; ++n) {
        out.effective_growth[n] = effective_growth(out.adjuster[n], out.growth[n]);
        out.adjustment[n] = out.nominal[n - 1] * out.effective_growth[n];
        level += out.adjustment[n];
        out.adjusted[n] = level;
    }
    return out;
}

std::vector<double> adjusted_closed_form(const AdjustedIndex& index) {
    std::vector<double> h(index.size());
    double correction = 0.0;
    for (std::size_t n = 0; n < index.size(); ++n) {
        correction += (index.adjuster[n] - 1.0) * index.nominal[n];
        h[n] = index.nominal[n] + correction;
    }
    return h;
}

double impact_share(double nominal_growth, double adjusted_growth) noexcept {
    return (nominal_growth - adjusted_growth) / (1.0 + nominal_growth);
}

ImpactReport impact(const AdjustedIndex& index, YearMonth start, YearMonth end) {
    if (start > end) {
        throw DomainError("empty window: " + start.str() + " is after " + end.str());
    }
    if (index.size() == 0 || start < index.start || end > index.end()) {
        throw RangeError("window " + start.str() + ".." + end.str() + " outside index " +
                         index.start.str() + ".." + index.end().str());
    }
    const auto first = static_cast<std::size_t>(start.minus(index.start));
    const auto last = static_cast<std::size_t>(end.minus(index.start));

    // gamma_n and g_n depend only on months n-1 and n, so rerunning the
    // adjustment from the window start reuses them with gamma_first := 1.
    const double base = index.nominal[first];
    double level = base;
    for (std::size_t n = first + 1; n <= last; ++n) {
        level += index.nominal[n - 1] * index.effective_growth[n];
    }
    const double a = index.nominal[last] / base - 1.0;
    const double b = level / base - 1.0;
    return {start, end, a, b, impact_share(a, b), index.terms.down_payment_rate(),
            index.lag_months};
}

ImpactReport impact(const AdjustedIndex& index) {
    return impact(index, index.start, index.end());
}

}  // namespace effprice
