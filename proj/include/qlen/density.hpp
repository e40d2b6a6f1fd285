#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace qlen {

/// Uniform density 1/(x_hi - x_lo) on [x_lo, x_hi].
struct UniformRod {
    double x_lo;
    double x_hi;
};

/// |psi_n|^2 of an infinite well of the given width, supported on
/// [0, width] before any translation.
struct BoxEigenstate {
    double width;
    int index;
};

/// Equal-weight mixture of `count` ground-state well densities, the i-th
/// shifted by i*spacing.  Wells may overlap or leave gaps.
struct WellMixture {
    double well_width;
    double spacing;
    int count;
};

/// Tabulated density on an ascending grid, integrated by the trapezoid rule.
struct SampledDensity {
    std::vector<double> x;
    std::vector<double> rho;
};

/// A normalized one-dimensional density.  Analytic kinds carry exact closed
/// forms; the sampled kind is whatever the caller measured.  All kinds can be
/// rigidly translated, evaluated pointwise, and handed to the moment and
/// length estimators.
class Density1D {
public:
    using Kind = std::variant<UniformRod, BoxEigenstate, WellMixture, SampledDensity>;

    static Density1D uniform_rod(double x_lo, double x_hi);
    static Density1D box_eigenstate(double width, int index);
    static Density1D well_mixture(double well_width, double spacing, int count);
    static Density1D sampled(std::vector<double> x, std::vector<double> rho);

    bool analytic() const;
    const Kind& kind() const { return kind_; }

    /// Rigid shift applied on top of the base kind.
    double origin() const { return origin_; }

    double value(double x) const;
    std::pair<double, double> support() const;

    /// Boundaries of smooth pieces (support edges, well edges); useful for
    /// piecewise quadrature.
    std::vector<double> breakpoints() const;

    Density1D translated(double delta) const;

private:
    Density1D(Kind kind, double origin) : kind_(std::move(kind)), origin_(origin) {}

    Kind kind_;
    double origin_ = 0.0;
};

} // namespace qlen
