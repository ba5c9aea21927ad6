#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace wsreg {

/// Exact fraction with canonical form (reduced, den > 0, 0 stored as 0/1).
/// All time-saving percentages in this library are rationals so that model
/// identities can be asserted with equality instead of float tolerances.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Decimal rendering with `decimals` fractional digits, e.g. "0.5038".
    std::string str(int decimals = 4) const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);
};

/// Per-record costs of the two matching stages, in abstract cost units.
/// t_nf: one classification-id prefilter check. t_disc: one full discovery
/// match. The heavy stage never costs less than the prefilter.
struct CostModelParams {
    std::int64_t t_nf = 1;
    std::int64_t t_disc = 1;

    CostModelParams() = default;
    CostModelParams(std::int64_t nf, std::int64_t disc);

    std::int64_t ratio_num() const { return t_disc; } // t_disc / t_nf as a fraction
    std::int64_t ratio_den() const { return t_nf; }
};

/// Cost of a prefiltered linear scan: the x matched records pay both stages,
/// the y rejected records pay only the prefilter check.
///   time_filtered = x*(t_nf + t_disc) + y*t_nf
std::int64_t time_filtered(std::int64_t x, std::int64_t y, const CostModelParams& p);

/// Cost of the same scan with no selection in force: every record pays both
/// stages.
///   time_unfiltered = (x + y)*(t_nf + t_disc)
std::int64_t time_unfiltered(std::int64_t x, std::int64_t y, const CostModelParams& p);

/// time_unfiltered - time_filtered. Always equals y*t_disc; strictly positive
/// whenever y > 0 and t_disc > 0 (prefiltering always wins when anything is
/// rejected).
std::int64_t time_saving(std::int64_t x, std::int64_t y, const CostModelParams& p);

/// Time-saving percentage in the equal-cost regime (t_nf = t_disc):
///   tsp = y / (2x + y)
/// 1 when nothing matches, 0 when everything does. Throws when x + y == 0.
Rational tsp(std::int64_t x, std::int64_t y);

/// tsp generalized to unequal stage costs:
///   tsp_general = y*t_disc / (x*(t_nf + t_disc) + y*t_disc)
/// Reduces to tsp() when t_nf = t_disc. In terms of coverage c = x/(x+y) and
/// ratio r = t_disc/t_nf this is r*(1-c)/(r+c): as the heavy stage dominates
/// the saving approaches 1-c. Throws when x + y == 0.
Rational tsp_general(std::int64_t x, std::int64_t y, const CostModelParams& p);

/// Everything the model says about one (x, y, params) point.
struct ModelPrediction {
    std::int64_t time_filtered = 0;
    std::int64_t time_unfiltered = 0;
    std::int64_t saving = 0;
    Rational tsp; // Eq-convention percentage, tsp_general(x, y, p)
};

ModelPrediction predict(std::int64_t x, std::int64_t y, const CostModelParams& p);

/// One point of the coverage/saving trade-off curve.
struct CoveragePoint {
    Rational coverage;
    Rational tsp;
};

/// Uniform grid over coverage (0, 1]: point i of n is c = i/n with
/// tsp = (1-c)/(1+c) = (n-i)/(n+i). Strictly decreasing in coverage.
/// Requires n_points >= 2.
std::vector<CoveragePoint> coverage_curve(int n_points);

/// CSV export of a curve: header "coverage,tsp", one row per grid point.
void write_coverage_csv(std::ostream& out, std::span<const CoveragePoint> curve);
void write_coverage_csv(const std::string& path, std::span<const CoveragePoint> curve);

} // namespace wsreg
