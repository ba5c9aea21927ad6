#include "wsreg/cost_model.hpp"

#include "wsreg/errors.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

namespace wsreg {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) {
        throw ValidationError("costmodel: rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) {
        den = 1;
    }
}

bool operator<(const Rational& a, const Rational& b) {
    // Magnitudes here are small (cost units); no overflow care needed.
    return a.num * b.den < b.num * a.den;
}

std::string Rational::str(int decimals) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value());
    return buf;
}

CostModelParams::CostModelParams(std::int64_t nf, std::int64_t disc) : t_nf(nf), t_disc(disc) {
    if (t_nf <= 0) {
        throw ValidationError("costmodel: t_nf must be positive");
    }
    if (t_disc < t_nf) {
        throw ValidationError("costmodel: t_disc must be at least t_nf");
    }
}

namespace {

void require_counts(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0) {
        throw ValidationError("costmodel: record counts must be non-negative");
    }
}

} // namespace

std::int64_t time_filtered(std::int64_t x, std::int64_t y, const CostModelParams& p) {
    require_counts(x, y);
    return x * (p.t_nf + p.t_disc) + y * p.t_nf;
}

std::int64_t time_unfiltered(std::int64_t x, std::int64_t y, const CostModelParams& p) {
    require_counts(x, y);
    return (x + y) * (p.t_nf + p.t_disc);
}

std::int64_t time_saving(std::int64_t x, std::int64_t y, const CostModelParams& p) {
    return time_unfiltered(x, y, p) - time_filtered(x, y, p);
}

Rational tsp(std::int64_t x, std::int64_t y) {
    require_counts(x, y);
    if (x + y == 0) {
        throw ValidationError("costmodel: tsp undefined for x + y = 0");
    }
    return Rational(y, 2 * x + y);
}

Rational tsp_general(std::int64_t x, std::int64_t y, const CostModelParams& p) {
    require_counts(x, y);
    if (x + y == 0) {
        throw ValidationError("costmodel: tsp undefined for x + y = 0");
    }
    return Rational(y * p.t_disc, x * (p.t_nf + p.t_disc) + y * p.t_disc);
}

ModelPrediction predict(std::int64_t x, std::int64_t y, const CostModelParams& p) {
    ModelPrediction out;
    out.time_filtered = time_filtered(x, y, p);
    out.time_unfiltered = time_unfiltered(x, y, p);
    out.saving = out.time_unfiltered - out.time_filtered;
    out.tsp = tsp_general(x, y, p);
    return out;
}

std::vector<CoveragePoint> coverage_curve(int n_points) {
    if (n_points < 2) {
        throw ValidationError("costmodel: coverage curve needs at least 2 points");
    }
    std::vector<CoveragePoint> curve;
    curve.reserve(static_cast<std::size_t>(n_points));
    for (int i = 1; i <= n_points; ++i) {
        curve.push_back({Rational(i, n_points), Rational(n_points - i, n_points + i)});
    }
    return curve;
}

void write_coverage_csv(std::ostream& out, std::span<const CoveragePoint> curve) {
    out << "coverage,tsp\n";
    for (const auto& pt : curve) {
        out << pt.coverage.str(6) << ',' << pt.tsp.str(6) << '\n';
    }
}

void write_coverage_csv(const std::string& path, std::span<const CoveragePoint> curve) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("costmodel: cannot open \"" + path + "\" for writing");
    }
    write_coverage_csv(out, curve);
    if (!out.good()) {
        throw IoError("costmodel: failed writing \"" + path + "\"");
    }
}

} // namespace wsreg
