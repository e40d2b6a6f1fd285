#pragma once

#include <optional>
#include <span>

#include "qlen/density.hpp"
#include "qlen/quadrature.hpp"

namespace qlen {

/// Raw position moments <x^k> plus the geometric center they were
/// accumulated about.
struct MomentSet {
    double m1 = 0.0;
    double m2 = 0.0;
    std::optional<double> m3;
    std::optional<double> m4;
    double center = 0.0;
};

enum class Method { analytic, quadrature };

/// Length estimates of a density together with the moments behind them.
/// l2 is sqrt(12 * variance); l4 is the fourth-moment estimator
/// 2 * (5 * (<x^4> - 2<x^3><x> + <x>^4))^(1/4).
struct LengthReport {
    double l2 = 0.0;
    std::optional<double> l4;
    MomentSet moments;
    Method method = Method::analytic;
};

/// Moments up to max_order (2 or 4).  Analytic density kinds use closed
/// forms; sampled densities use the trapezoid rule on their own grid.
/// Throws unnormalized_density when a sampled density integrates away
/// from one beyond 1e-7.
MomentSet moments(const Density1D& d, int max_order = 2);

/// Independent route: the same moments by adaptive quadrature of the
/// pointwise density, regardless of kind.
MomentSet moments_by_quadrature(const Density1D& d, int max_order = 2,
                                const oracle::QuadratureSpec& spec = {});

LengthReport length_l2(const Density1D& d);

/// Fourth-moment length.  The radical combination is taken to the fourth
/// root, which restores length units and returns L for a uniform rod.
/// Throws negative_radicand when the combination falls below -1e-12.
LengthReport length_l4(const Density1D& d);

/// <n|x^2|n> = width^2 (1/3 - 1/(2 pi^2 n^2)) for an infinite well on
/// [0, width].
double box_x2_matrix_element(double width, int index);

struct RodSegment {
    double x_lo;
    double x_hi;
    bool occupied = true;
};

/// Total length of an ordered, non-overlapping set of uniform segments:
/// each occupied segment contributes its own second-moment length and gaps
/// contribute nothing.  Zero-width segments contribute zero.
double nonuniform_rod_length(std::span<const RodSegment> segments);

Density1D translate(const Density1D& d, double delta);

} // namespace qlen
