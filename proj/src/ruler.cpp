#include "qlen/ruler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qlen/errors.hpp"
#include "qlen/moments.hpp"
#include "qlen/series.hpp"

namespace qlen {

namespace {

constexpr double pi = std::numbers::pi;

void validate_spec(const RulerSpec& spec) {
    if (!(spec.lattice > 0.0))
        throw error(errc::invalid_input, "lattice length must be positive");
    if (spec.electrons < 1)
        throw error(errc::invalid_input, "need at least one electron");
    if (spec.statistics == Statistics::fermion) {
        if (spec.electrons % 2 != 0)
            throw error(errc::odd_electron_count, "fermion ruler needs an even electron count");
        if (spec.segments < 1 || spec.segments > spec.electrons / 2 ||
            (spec.electrons / 2) % spec.segments != 0)
            throw error(errc::indivisible_segmentation,
                        "segment count must divide the number of unit cells (" +
                            std::to_string(spec.electrons / 2) + ")");
    } else {
        if (spec.segments < 1 || spec.segments > spec.electrons ||
            spec.electrons % spec.segments != 0)
            throw error(errc::indivisible_segmentation,
                        "segment count must divide the number of unit cells (" +
                            std::to_string(spec.electrons) + ")");
    }
}

/// sqrt factor of the paired-filling length at N electrons cut into R parts.
double fermion_length_factor(std::int64_t electrons, std::int64_t segments) {
    const double s = series::partial_zeta2_fast(electrons / (2 * segments));
    const double arg = 1.0 - 12.0 / (pi * pi) * static_cast<double>(segments) /
                                 static_cast<double>(electrons) * s;
    return std::sqrt(arg > 0.0 ? arg : 0.0);
}

} // namespace

SegmentedLengthResult segment_length(const RulerSpec& spec) {
    validate_spec(spec);
    SegmentedLengthResult out;
    if (spec.statistics == Statistics::fermion) {
        const double half_width = 0.5 * spec.electrons * spec.lattice;
        out.total = half_width * fermion_length_factor(spec.electrons, spec.segments);
        out.monolithic = half_width * fermion_length_factor(spec.electrons, 1);
    } else {
        // one boson per cell: box width N a0, same factor at every R
        const double factor = std::sqrt(1.0 - 6.0 / (pi * pi));
        out.total = spec.electrons * spec.lattice * factor;
        out.monolithic = out.total;
    }
    out.per_segment = out.total / spec.segments;
    out.overestimate = out.monolithic - out.total;
    return out;
}

CuttingEnergy cutting_energy(const RulerSpec& spec) {
    validate_spec(spec);
    CuttingEnergy out;
    const double n = static_cast<double>(spec.electrons);
    const double r = static_cast<double>(spec.segments);
    const double a0 = spec.lattice;
    if (spec.statistics == Statistics::fermion) {
        out.energy_uncut = (n + 2.0) * (n + 1.0) / (24.0 * n * a0 * a0);
        out.energy_cut = (n + 2.0 * r) * (n + r) / (24.0 * n * a0 * a0);
        out.ratio = (n + 2.0 * r) * (n + r) / ((n + 2.0) * (n + 1.0));
    } else {
        out.energy_uncut = 1.0 / (8.0 * n * a0 * a0);
        out.energy_cut = out.energy_uncut * r * r;
        out.ratio = r * r;
    }
    return out;
}

double precision_condition_residual(std::int64_t electrons, std::int64_t segments) {
    validate_spec({1.0, electrons, segments, Statistics::fermion});
    const double shortfall = 1.0 - fermion_length_factor(electrons, segments);
    return shortfall - 1.0 / static_cast<double>(segments);
}

std::vector<std::int64_t> admissible_segments(std::int64_t electrons, Statistics statistics) {
    if (electrons < 1)
        throw error(errc::invalid_input, "need at least one electron");
    std::int64_t cells = electrons;
    if (statistics == Statistics::fermion) {
        if (electrons % 2 != 0)
            throw error(errc::odd_electron_count, "fermion ruler needs an even electron count");
        cells = electrons / 2;
    }
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d * d <= cells; ++d) {
        if (cells % d == 0) {
            divisors.push_back(d);
            if (d != cells / d)
                divisors.push_back(cells / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

OptimalRuling optimal_ruling(std::int64_t electrons) {
    if (electrons < 4)
        throw error(errc::invalid_input, "need at least four electrons");
    OptimalRuling out;
    const double root = std::sqrt(static_cast<double>(electrons));
    out.r_closed_form = std::llround(root);
    out.delta_l = 0.5 * root;

    const auto admissible = admissible_segments(electrons, Statistics::fermion);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t r : admissible) {
        const double res = std::abs(precision_condition_residual(electrons, r));
        if (res < best) {
            best = res;
            out.r_sweep = r;
        }
    }
    return out;
}

namespace {

/// Second-moment length of the stacked-well mixture by piecewise adaptive
/// quadrature of the pointwise density.  This route never touches the
/// closed-form well moments.
double mixture_length_by_quadrature(double well_width, int wells, double spacing) {
    const auto mix = Density1D::well_mixture(well_width, spacing, wells);
    const oracle::QuadratureSpec spec{1e-12, 20000};
    const MomentSet ms = moments_by_quadrature(mix, 2, spec);
    const double var = ms.m2 - ms.m1 * ms.m1;
    return std::sqrt(12.0 * (var > 0.0 ? var : 0.0));
}

} // namespace

SelfConsistencyReport self_consistent_segment_length(double well_width, int wells, double tol,
                                                     int max_iterations) {
    if (wells < 2)
        throw error(errc::invalid_input, "need at least two wells");
    if (!(well_width > 0.0))
        throw error(errc::invalid_input, "well width must be positive");
    if (!(tol > 0.0))
        throw error(errc::invalid_input, "tolerance must be positive");

    SelfConsistencyReport report;
    report.wells = wells;
    report.well_width = well_width;
    report.l1_closed_form = well_width * std::sqrt(1.0 - 6.0 / (pi * pi));
    report.l1_alternate = well_width * std::sqrt(1.0 / 3.0 - 1.0 / (2.0 * pi * pi));

    // fixed point of g(L1) = L2(mixture at pitch L1) / N, Steffensen
    // accelerated: the plain map contracts at rate (N^2-1)/N^2
    const double n = static_cast<double>(wells);
    auto g = [&](double l1) {
        return mixture_length_by_quadrature(well_width, wells, l1) / n;
    };

    double x = 0.6 * well_width;
    int iterations = 0;
    bool converged = false;
    while (iterations < max_iterations) {
        const double gx = g(x);
        ++iterations;
        report.residual = std::abs(gx - x);
        if (report.residual < tol) {
            x = gx;
            converged = true;
            break;
        }
        if (iterations >= max_iterations)
            break;
        const double ggx = g(gx);
        ++iterations;
        const double denom = ggx - 2.0 * gx + x;
        double next;
        if (std::abs(denom) > 1e-300) {
            next = x - (gx - x) * (gx - x) / denom;
        } else {
            next = ggx;
        }
        if (!(next > 0.0) || !std::isfinite(next))
            next = ggx;
        x = next;
    }
    if (!converged)
        throw error(errc::no_convergence,
                    "self-consistency fixed point did not settle within " +
                        std::to_string(max_iterations) + " iterations");

    report.l1_solved = x;
    report.iterations = iterations;
    report.coefficient_discrepancy =
        std::abs(report.l1_solved - report.l1_alternate) > 1e-3 * well_width;
    return report;
}

DensityProfile entangled_segment_density(int wells, double well_width, double spacing,
                                         int grid_points) {
    if (wells < 1)
        throw error(errc::invalid_input, "need at least one well");
    if (!(well_width > 0.0) || !(spacing > 0.0))
        throw error(errc::invalid_input, "well width and spacing must be positive");
    if (grid_points < 16)
        throw error(errc::invalid_input, "grid needs at least 16 points");
    if (well_width - spacing >= spacing)
        throw error(errc::excessive_overlap,
                    "wells overlap beyond their nearest neighbours (need spacing > width/2)");

    const auto mix = Density1D::well_mixture(well_width, spacing, wells);
    const auto [lo, hi] = mix.support();
    const int m = grid_points - 1;

    DensityProfile profile;
    profile.particle_count = wells;
    profile.highest_level = 1;
    profile.x_lo = lo;
    profile.x_hi = hi;
    profile.x.resize(grid_points);
    profile.rho.resize(grid_points);
    // mirrored fill: the mixture is symmetric about its midpoint
    for (int j = 0; j <= m / 2; ++j) {
        const double x = lo + (hi - lo) * j / m;
        profile.x[j] = x;
        profile.x[m - j] = hi - (x - lo);
        const double value = mix.value(x);
        profile.rho[j] = value;
        profile.rho[m - j] = value;
    }
    const double integral = profile.integral();
    if (integral > 0.0 && integral != 1.0) {
        for (double& v : profile.rho)
            v /= integral;
    }
    return profile;
}

} // namespace qlen
