// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and not tunable at run time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "effprice/effprice.hpp"
#include "oracles.hpp"
#include "published_grid.hpp"

using namespace effprice;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const LoanTerms k30y20{360, 0.20};

// 1. Full grid against the printed table, to printed precision, in under 1 s.
Outcome grid_reproduction() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const EffectiveGrid grid = build_grid(GridSpec{});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(grid.rates.size() == 29 && grid.cells.size() == 29, "grid is not 29 rows");
    double worst = 0.0;
    int sign_mismatch = 0;
    for (std::size_t i = 0; i < 29 && i < grid.rates.size(); ++i) {
        o.require(std::abs(grid.rates[i] - published::rate_rows[i]) < 1e-12, "row rate mismatch");
        for (std::size_t j = 0; j < 13; ++j) {
            const double printed = published::effective_growth[i][j];
            const double ours = grid.cells[i][j];
            worst = std::max(worst, std::abs(ours - printed));
            // Cells printed as 0.000 carry no sign information.
            if (printed != 0.0 && (ours > 0.0) != (printed > 0.0)) ++sign_mismatch;
        }
    }
    o.require(worst <= 0.0005, fmt("max |cell - printed| = %.6f > 0.0005", worst));
    o.require(sign_mismatch == 0, fmt("%g cells disagree in sign", sign_mismatch));
    o.require(seconds < 1.0, fmt("took %.3f s", seconds));
    if (o.pass) o.detail = fmt("377 cells, max |diff| %.6f, %.2e s", worst, seconds);
    return o;
}

// 2. Spot anchors.
Outcome spot_anchors() {
    Outcome o;
    const EffectiveGrid grid = build_grid(GridSpec{});
    const double top_right = grid.at(28, 12);
    const double bottom_left = grid.at(0, 12);
    o.require(format_fixed(top_right, 3) == "0.375", fmt("(7.000%%, 10%%) = %.6f", top_right));
    o.require(format_fixed(bottom_left, 3) == "0.000", fmt("(3.500%%, 10%%) = %.6f", bottom_left));
    const auto base = grid.baseline_row();
    o.require(base.has_value(), "no baseline row");
    if (base) {
        for (std::size_t j = 0; j < 13; ++j) {
            o.require(grid.cells[*base][j] == grid.spec.growth_values[j], "baseline row differs from nominal");
        }
    }
    if (o.pass) o.detail = fmt("%.4f, %.4f, baseline row exact", top_right, bottom_left);
    return o;
}

// 3. Neutrality line: zero effective growth and agreement of the two forms.
Outcome neutrality_properties() {
    Outcome o;
    std::mt19937_64 rng(20220630);
    std::uniform_real_distribution<double> rate(0.0, 0.15), alpha(0.0, 0.95);
    std::uniform_int_distribution<int> term(1, 480);
    double worst_zero = 0.0, worst_forms = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const LoanTerms terms(term(rng), alpha(rng));
        const double a = rate(rng), b = rate(rng);
        const NeutralityPoint p = neutral_growth(a, b, terms);
        worst_zero = std::max(worst_zero, std::abs(effective_growth(RateScenario(a, b, p.neutral_growth, terms))));
        worst_forms = std::max(worst_forms, std::abs(neutral_growth_via_adjuster(a, b, terms) -
                                                     neutral_growth_via_discount_factors(a, b, terms)));
    }
    o.require(worst_zero <= 1e-10, fmt("max |g*| on line = %.3e", worst_zero));
    o.require(worst_forms <= 1e-12, fmt("max form disagreement = %.3e", worst_forms));
    if (o.pass) o.detail = fmt("max |g*| %.2e, max form diff %.2e", worst_zero, worst_forms);
    return o;
}

// 4. Discount factor vs brute-force annuity sum; price decomposition.
Outcome discount_oracles() {
    Outcome o;
    std::mt19937_64 rng(1987);
    std::uniform_real_distribution<double> rate(0.0, 0.02), annual(0.0, 0.2), alpha(0.0, 0.99),
        price(1e4, 5e6);
    std::uniform_int_distribution<int> term(1, 480);
    double worst_beta = 0.0, worst_identity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double r = rate(rng);
        const int t = term(rng);
        worst_beta = std::max(worst_beta, oracle::rel_diff(discount_factor(PeriodicRate(r), t),
                                                           oracle::annuity_sum(r, t)));
        const LoanTerms terms(term(rng), alpha(rng));
        const PurchaseQuote q(price(rng), annual(rng), terms);
        const double beta = discount_factor(to_periodic(q.rate(), terms), terms.term_months());
        worst_identity = std::max(worst_identity,
                                  oracle::rel_diff(beta * monthly_payment(q) + down_payment(q), q.price()));
    }
    o.require(worst_beta <= 1e-9, fmt("beta rel diff %.3e", worst_beta));
    o.require(worst_identity <= 1e-9, fmt("decomposition rel diff %.3e", worst_identity));
    if (o.pass) o.detail = fmt("beta %.2e, decomposition %.2e", worst_beta, worst_identity);
    return o;
}

// 5. Cumulative vs closed-form adjusted index; constant rates telescope.
Outcome pipeline_identities() {
    Outcome o;
    std::mt19937_64 rng(2021);
    std::uniform_int_distribution<int> length(1, 600);
    std::uniform_real_distribution<double> step(-0.03, 0.04), rate_step(-0.004, 0.004),
        level(20.0, 400.0), flat(0.0, 0.15);
    double worst_forms = 0.0, worst_flat = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = length(rng);
        std::vector<double> h{level(rng)}, r{0.08};
        for (int i = 1; i < n; ++i) {
            h.push_back(h.back() * (1.0 + step(rng)));
            r.push_back(std::clamp(r.back() + rate_step(rng), 0.0, 0.2));
        }
        const auto hpi = MonthlySeries(SeriesKind::IndexLevel, YearMonth(1970, 1), h);
        const AdjustedIndex idx =
            neutralize(hpi, MonthlySeries(SeriesKind::QuotedRate, YearMonth(1969, 11), r), k30y20);
        const auto closed = adjusted_closed_form(idx);
        for (int i = 0; i < n; ++i) {
            worst_forms = std::max(worst_forms, oracle::rel_diff(idx.adjusted[i], closed[i]));
        }
        const AdjustedIndex flat_idx = neutralize(
            hpi, MonthlySeries(SeriesKind::QuotedRate, YearMonth(1969, 11), std::vector<double>(n, flat(rng))),
            k30y20);
        for (int i = 0; i < n; ++i) {
            worst_flat = std::max(worst_flat, oracle::rel_diff(flat_idx.adjusted[i], h[i]));
        }
    }
    o.require(worst_forms <= 1e-9, fmt("cumulative vs closed form %.3e", worst_forms));
    o.require(worst_flat <= 1e-12, fmt("constant-rate drift %.3e", worst_flat));
    if (o.pass) o.detail = fmt("forms %.2e, constant-rate %.2e", worst_forms, worst_flat);
    return o;
}

struct Fixtures {
    MonthlySeries hpi;
    MonthlySeries rates;
};

Fixtures load_fixtures() {
    const std::string dir = EFFPRICE_FIXTURE_DIR;
    return {load_monthly({dir + "/CSUSHPINSA.csv", SeriesKind::IndexLevel, ValueUnit::Fraction}),
            load_monthly({dir + "/MORTGAGE30US.csv", SeriesKind::QuotedRate, ValueUnit::Percent})};
}

ImpactReport window_impact(const Fixtures& f, YearMonth lo, YearMonth hi, double alpha) {
    return impact(neutralize(clip(f.hpi, lo, hi), f.rates, LoanTerms(360, alpha), 2));
}

// 6. Long-run impact table from the shipped fixtures.
Outcome long_run_impact() {
    Outcome o;
    const Fixtures f = load_fixtures();
    const YearMonth end(2021, 12);
    std::vector<ImpactReport> long_run;
    for (double alpha : {0.10, 0.15, 0.20}) {
        long_run.push_back(window_impact(f, YearMonth(1987, 1), end, alpha));
    }
    const ImpactReport recent = window_impact(f, YearMonth(2019, 1), end, 0.20);

    // Always required: identity and ordering in alpha.
    for (const auto& r : long_run) {
        o.require(r.impact == impact_share(r.nominal_growth, r.adjusted_growth), "C != (A-B)/(1+A)");
    }
    o.require(long_run[0].impact > long_run[1].impact && long_run[1].impact > long_run[2].impact,
              "impact not decreasing in alpha");

    // Printed values with data-vintage slack.
    const double a = long_run[2].nominal_growth, c = long_run[2].impact, c_recent = recent.impact;
    o.require(std::abs(a - 3.373) <= 0.010, fmt("A(1987-2021) = %.4f, want 3.373 +- 0.010", a));
    o.require(std::abs(c - 0.226) <= 0.015, fmt("C(1987-2021, 0.20) = %.4f, want 0.226 +- 0.015", c));
    o.require(std::abs(c_recent - 0.127) <= 0.015, fmt("C(2019-2021, 0.20) = %.4f, want 0.127 +- 0.015", c_recent));
    if (o.pass) {
        o.detail = fmt("A %.1f%%, C(0.20) %.1f%%, C(2019-2021) %.1f%%", 100 * a, 100 * c, 100 * c_recent) +
                   fmt("; C(0.10) %.1f%% > C(0.15) %.1f%%", 100 * long_run[0].impact, 100 * long_run[1].impact);
    }
    return o;
}

// 7. Pandemic windows.
Outcome pandemic_impact() {
    Outcome o;
    const Fixtures f = load_fixtures();
    const ImpactReport pandemic = window_impact(f, YearMonth(2020, 3), YearMonth(2021, 12), 0.20);
    const ImpactReport year2021 = window_impact(f, YearMonth(2021, 1), YearMonth(2021, 12), 0.20);
    o.require(std::abs(pandemic.nominal_growth - 0.295) <= 0.005,
              fmt("A(2020-03..2021-12) = %.4f, want 0.295 +- 0.005", pandemic.nominal_growth));
    o.require(std::abs(year2021.impact + 0.030) <= 0.010,
              fmt("C(2021) = %.4f, want -0.030 +- 0.010", year2021.impact));
    if (o.pass) {
        o.detail = fmt("A %.1f%%, C(2021) %.1f%%", 100 * pandemic.nominal_growth, 100 * year2021.impact);
    }
    return o;
}

// 8. Region table and exclusion of the two impossible sign triples.
Outcome classification() {
    Outcome o;
    const std::vector<std::pair<SignTriple, Region>> table = {
        {{+1, -1, +1}, Region::A}, {{+1, +1, +1}, Region::B}, {{-1, +1, +1}, Region::C},
        {{-1, +1, -1}, Region::D}, {{-1, -1, -1}, Region::E}, {{+1, -1, -1}, Region::F}};
    for (const auto& [signs, region] : table) {
        o.require(region_for(signs).region == region, "triple mapped to wrong region");
    }
    std::mt19937_64 rng(100000);
    std::uniform_real_distribution<double> rate(0.0, 0.15), growth(-0.5, 0.5), alpha(0.0, 0.95);
    std::uniform_int_distribution<int> term(1, 480);
    int impossible = 0;
    int counts[7] = {};
    for (int i = 0; i < 100000; ++i) {
        const RateScenario s(rate(rng), rate(rng), growth(rng), LoanTerms(term(rng), alpha(rng)));
        const SignTriple t = signs_of(s, 0.0);
        if ((t.price_change > 0 && t.rate_change > 0 && t.effective_growth < 0) ||
            (t.price_change < 0 && t.rate_change < 0 && t.effective_growth > 0)) {
            ++impossible;
            continue;
        }
        ++counts[static_cast<int>(region_for(t).region)];
    }
    o.require(impossible == 0, fmt("%g impossible triples", impossible));
    for (int r = 0; r < 6; ++r) o.require(counts[r] > 0, "a region was never visited");
    if (o.pass) {
        std::ostringstream ss;
        ss << "six triples ok; 1e5 scenarios, 0 impossible; counts A-F";
        for (int r = 0; r < 6; ++r) ss << ' ' << counts[r];
        o.detail = ss.str();
    }
    return o;
}

// 9. FRED format conformance and round trip.
Outcome ingest_conformance() {
    Outcome o;
    const std::string lf = "DATE,MORTGAGE30US\n2020-03-05,3.29\n2020-03-12,3.36\n2020-03-19,.\n";
    std::string crlf;
    for (char ch : lf) {
        if (ch == '\n') crlf += '\r';
        crlf += ch;
    }
    const FredTable t = parse_fred_csv_text(lf, ValueUnit::Percent);
    o.require(t.series_id == "MORTGAGE30US", "series id");
    o.require(t.observations.size() == 3, "row count");
    if (t.observations.size() == 3) {
        o.require(t.observations[0].value == 3.29 / 100.0, "percent scaling not exact");
        o.require(t.observations[1].value == 3.36 / 100.0, "percent scaling not exact");
        o.require(!t.observations[2].value.has_value(), "'.' not treated as missing");
    }
    o.require(parse_fred_csv_text(crlf, ValueUnit::Percent) == t, "CRLF differs from LF");

    std::ostringstream out;
    write_fred_csv(out, t, ValueUnit::Percent);
    o.require(out.str() == lf, "serialized text differs from input");
    o.require(parse_fred_csv_text(out.str(), ValueUnit::Percent) == t, "round trip differs");

    const std::string dir = EFFPRICE_FIXTURE_DIR;
    for (auto [file, unit] : {std::pair{"/CSUSHPINSA.csv", ValueUnit::Fraction},
                              std::pair{"/MORTGAGE30US.csv", ValueUnit::Percent}}) {
        const FredTable f = parse_fred_csv(SeriesSource{dir + file, SeriesKind::IndexLevel, unit});
        std::ostringstream again;
        write_fred_csv(again, f, unit);
        o.require(parse_fred_csv_text(again.str(), unit) == f, std::string("fixture round trip ") + file);
    }
    bool header_only_rejected = false;
    try {
        (void)parse_fred_csv_text("DATE,X\n", ValueUnit::Fraction);
    } catch (const FormatError&) {
        header_only_rejected = true;
    }
    o.require(header_only_rejected, "header-only file accepted");
    if (o.pass) o.detail = "missing '.', CRLF, percent scaling, round trips exact";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 effective growth grid reproduction", grid_reproduction},
        {"AC2 spot anchors", spot_anchors},
        {"AC3 neutrality line properties", neutrality_properties},
        {"AC4 discount factor and decomposition oracles", discount_oracles},
        {"AC5 adjusted index identities", pipeline_identities},
        {"AC6 long-run mortgage rate impact", long_run_impact},
        {"AC7 pandemic window impact", pandemic_impact},
        {"AC8 region classification", classification},
        {"AC9 FRED ingest conformance", ingest_conformance},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
