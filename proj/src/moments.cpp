#include "qlen/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qlen/errors.hpp"

namespace qlen {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double norm_tol_sampled = 1e-7;

/// Moments about a fixed reference point `center`:
/// mu_k = <(x - center)^k>.  Accumulating about the support center keeps
/// the variance free of cancellation for far-translated densities.
struct CentralMoments {
    double center = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    bool has_high = false;
};

CentralMoments rod_central(const UniformRod& rod, double origin, int max_order) {
    CentralMoments cm;
    const double half = 0.5 * (rod.x_hi - rod.x_lo);
    cm.center = origin + 0.5 * (rod.x_lo + rod.x_hi);
    cm.mu2 = half * half / 3.0;
    if (max_order >= 4) {
        cm.mu4 = half * half * half * half / 5.0;
        cm.has_high = true;
    }
    return cm;
}

CentralMoments box_central(const BoxEigenstate& box, double origin, int max_order) {
    CentralMoments cm;
    const double a = box.width;
    const double n2 = static_cast<double>(box.index) * box.index;
    cm.center = origin + 0.5 * a;
    cm.mu2 = a * a * (1.0 / 12.0 - 1.0 / (2.0 * pi * pi * n2));
    if (max_order >= 4) {
        cm.mu4 = a * a * a * a *
                 (1.0 / 80.0 - 1.0 / (4.0 * pi * pi * n2) + 3.0 / (2.0 * pi * pi * pi * pi * n2 * n2));
        cm.has_high = true;
    }
    return cm;
}

CentralMoments mixture_central(const WellMixture& mix, double origin, int max_order) {
    const BoxEigenstate well{mix.well_width, 1};
    const CentralMoments wm = box_central(well, 0.0, max_order);

    CentralMoments cm;
    cm.center = origin + 0.5 * ((mix.count - 1) * mix.spacing + mix.well_width);
    double sum_d2 = 0.0, sum_d4 = 0.0;
    for (int i = 0; i < mix.count; ++i) {
        const double d = (i - 0.5 * (mix.count - 1)) * mix.spacing;
        sum_d2 += d * d;
        sum_d4 += d * d * d * d;
    }
    const double mean_d2 = sum_d2 / mix.count;
    cm.mu2 = wm.mu2 + mean_d2;
    if (max_order >= 4) {
        cm.mu4 = wm.mu4 + 6.0 * wm.mu2 * mean_d2 + sum_d4 / mix.count;
        cm.has_high = true;
    }
    return cm;
}

CentralMoments sampled_central(const SampledDensity& s, double origin, int max_order) {
    const double c_local = 0.5 * (s.x.front() + s.x.back());
    double m0 = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
    for (std::size_t i = 0; i + 1 < s.x.size(); ++i) {
        const double h = s.x[i + 1] - s.x[i];
        const double ya = s.x[i] - c_local;
        const double yb = s.x[i + 1] - c_local;
        const double ra = s.rho[i];
        const double rb = s.rho[i + 1];
        m0 += 0.5 * h * (ra + rb);
        t1 += 0.5 * h * (ya * ra + yb * rb);
        t2 += 0.5 * h * (ya * ya * ra + yb * yb * rb);
        if (max_order >= 4) {
            t3 += 0.5 * h * (ya * ya * ya * ra + yb * yb * yb * rb);
            t4 += 0.5 * h * (ya * ya * ya * ya * ra + yb * yb * yb * yb * rb);
        }
    }
    if (std::abs(m0 - 1.0) > norm_tol_sampled)
        throw error(errc::unnormalized_density,
                    "sampled density integrates to " + std::to_string(m0));

    CentralMoments cm;
    cm.center = origin + c_local;
    cm.mu1 = t1 / m0;
    cm.mu2 = t2 / m0;
    if (max_order >= 4) {
        cm.mu3 = t3 / m0;
        cm.mu4 = t4 / m0;
        cm.has_high = true;
    }
    return cm;
}

CentralMoments central_moments(const Density1D& d, int max_order) {
    if (max_order != 2 && max_order != 4)
        throw error(errc::invalid_input, "max_order must be 2 or 4");
    return std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, UniformRod>)
                return rod_central(k, d.origin(), max_order);
            else if constexpr (std::is_same_v<T, BoxEigenstate>)
                return box_central(k, d.origin(), max_order);
            else if constexpr (std::is_same_v<T, WellMixture>)
                return mixture_central(k, d.origin(), max_order);
            else
                return sampled_central(k, d.origin(), max_order);
        },
        d.kind());
}

MomentSet to_moment_set(const CentralMoments& cm) {
    MomentSet ms;
    const double c = cm.center;
    ms.center = c;
    ms.m1 = c + cm.mu1;
    ms.m2 = cm.mu2 + 2.0 * c * cm.mu1 + c * c;
    if (cm.has_high) {
        ms.m3 = cm.mu3 + 3.0 * c * cm.mu2 + 3.0 * c * c * cm.mu1 + c * c * c;
        ms.m4 = cm.mu4 + 4.0 * c * cm.mu3 + 6.0 * c * c * cm.mu2 + 4.0 * c * c * c * cm.mu1 +
                c * c * c * c;
    }
    return ms;
}

double variance_of(const CentralMoments& cm) {
    const double v = cm.mu2 - cm.mu1 * cm.mu1;
    return v > 0.0 ? v : 0.0;
}

Method method_of(const Density1D& d) {
    return d.analytic() ? Method::analytic : Method::quadrature;
}

} // namespace

MomentSet moments(const Density1D& d, int max_order) {
    return to_moment_set(central_moments(d, max_order));
}

MomentSet moments_by_quadrature(const Density1D& d, int max_order,
                                const oracle::QuadratureSpec& spec) {
    if (max_order != 2 && max_order != 4)
        throw error(errc::invalid_input, "max_order must be 2 or 4");
    const auto pts = d.breakpoints();
    const auto [lo, hi] = d.support();
    const double c = 0.5 * (lo + hi);

    auto piece = [&](auto&& f) { return oracle::integrate_segments(f, pts, spec); };
    const double m0 = piece([&](double x) { return d.value(x); });
    if (std::abs(m0 - 1.0) > norm_tol_sampled)
        throw error(errc::unnormalized_density,
                    "density integrates to " + std::to_string(m0));

    CentralMoments cm;
    cm.center = c;
    cm.mu1 = piece([&](double x) { return (x - c) * d.value(x); }) / m0;
    cm.mu2 = piece([&](double x) { return (x - c) * (x - c) * d.value(x); }) / m0;
    if (max_order >= 4) {
        cm.mu3 = piece([&](double x) {
                     const double y = x - c;
                     return y * y * y * d.value(x);
                 }) / m0;
        cm.mu4 = piece([&](double x) {
                     const double y = x - c;
                     return y * y * y * y * d.value(x);
                 }) / m0;
        cm.has_high = true;
    }
    return to_moment_set(cm);
}

LengthReport length_l2(const Density1D& d) {
    const CentralMoments cm = central_moments(d, 2);
    LengthReport report;
    report.l2 = std::sqrt(12.0 * variance_of(cm));
    report.moments = to_moment_set(cm);
    report.method = method_of(d);
    return report;
}

LengthReport length_l4(const Density1D& d) {
    const CentralMoments cm = central_moments(d, 4);

    // moments about the mean, from moments about the support center
    const double e = cm.mu1;
    const double mu2 = cm.mu2 - e * e;
    const double mu3 = cm.mu3 - 3.0 * e * cm.mu2 + 2.0 * e * e * e;
    const double mu4 = cm.mu4 - 4.0 * e * cm.mu3 + 6.0 * e * e * cm.mu2 - 3.0 * e * e * e * e;
    const double mean = cm.center + e;

    // <x^4> - 2<x^3><x> + <x>^4 reduces to mu4 + 2 mu3 <x>
    double q = mu4 + 2.0 * mu3 * mean;
    if (q < -1e-12)
        throw error(errc::negative_radicand,
                    "fourth-moment combination is negative: " + std::to_string(q));
    if (q < 0.0)
        q = 0.0;

    LengthReport report;
    report.l2 = std::sqrt(12.0 * (mu2 > 0.0 ? mu2 : 0.0));
    report.l4 = 2.0 * std::pow(5.0 * q, 0.25);
    report.moments = to_moment_set(cm);
    report.method = method_of(d);
    return report;
}

double box_x2_matrix_element(double width, int index) {
    if (index < 1)
        throw error(errc::invalid_index, "level index must be >= 1");
    if (!(width > 0.0))
        throw error(errc::invalid_input, "box width must be positive");
    const double n2 = static_cast<double>(index) * index;
    return width * width * (1.0 / 3.0 - 1.0 / (2.0 * pi * pi * n2));
}

double nonuniform_rod_length(std::span<const RodSegment> segments) {
    double prev_hi = -std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (const auto& seg : segments) {
        if (seg.x_hi < seg.x_lo)
            throw error(errc::overlapping_segments, "segment has x_hi < x_lo");
        if (seg.x_lo < prev_hi)
            throw error(errc::overlapping_segments, "segments overlap or are out of order");
        prev_hi = seg.x_hi;
        if (!seg.occupied || seg.x_hi == seg.x_lo)
            continue;
        total += length_l2(Density1D::uniform_rod(seg.x_lo, seg.x_hi)).l2;
    }
    return total;
}

Density1D translate(const Density1D& d, double delta) {
    return d.translated(delta);
}

} // namespace qlen
