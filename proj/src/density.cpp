#include "qlen/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qlen/errors.hpp"

namespace qlen {

namespace {

double well_ground_density(double width, double y) {
    if (y <= 0.0 || y >= width)
        return 0.0;
    const double s = std::sin(std::numbers::pi * y / width);
    return 2.0 / width * s * s;
}

} // namespace

Density1D Density1D::uniform_rod(double x_lo, double x_hi) {
    if (!(x_hi > x_lo))
        throw error(errc::invalid_input, "uniform rod needs x_hi > x_lo");
    return Density1D(UniformRod{x_lo, x_hi}, 0.0);
}

Density1D Density1D::box_eigenstate(double width, int index) {
    if (index < 1)
        throw error(errc::invalid_index, "box eigenstate index must be >= 1");
    if (!(width > 0.0))
        throw error(errc::invalid_input, "box width must be positive");
    return Density1D(BoxEigenstate{width, index}, 0.0);
}

Density1D Density1D::well_mixture(double well_width, double spacing, int count) {
    if (count < 1)
        throw error(errc::invalid_input, "well mixture needs count >= 1");
    if (!(well_width > 0.0))
        throw error(errc::invalid_input, "well width must be positive");
    if (spacing < 0.0)
        throw error(errc::invalid_input, "well spacing must be nonnegative");
    return Density1D(WellMixture{well_width, spacing, count}, 0.0);
}

Density1D Density1D::sampled(std::vector<double> x, std::vector<double> rho) {
    if (x.size() < 2 || x.size() != rho.size())
        throw error(errc::invalid_input, "sampled density needs matching grids of size >= 2");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i + 1] > x[i]))
            throw error(errc::invalid_input, "sampled grid must be strictly ascending");
    for (double v : rho)
        if (v < 0.0 || !std::isfinite(v))
            throw error(errc::invalid_input, "sampled density values must be finite and nonnegative");
    return Density1D(SampledDensity{std::move(x), std::move(rho)}, 0.0);
}

bool Density1D::analytic() const {
    return !std::holds_alternative<SampledDensity>(kind_);
}

double Density1D::value(double x) const {
    const double y = x - origin_;
    return std::visit(
        [y](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, UniformRod>) {
                return (y >= k.x_lo && y <= k.x_hi) ? 1.0 / (k.x_hi - k.x_lo) : 0.0;
            } else if constexpr (std::is_same_v<T, BoxEigenstate>) {
                if (y <= 0.0 || y >= k.width)
                    return 0.0;
                const double s = std::sin(k.index * std::numbers::pi * y / k.width);
                return 2.0 / k.width * s * s;
            } else if constexpr (std::is_same_v<T, WellMixture>) {
                double sum = 0.0;
                for (int i = 0; i < k.count; ++i)
                    sum += well_ground_density(k.well_width, y - i * k.spacing);
                return sum / k.count;
            } else {
                // linear interpolation on the sample grid, zero outside
                const auto& xs = k.x;
                if (y <= xs.front() || y >= xs.back()) {
                    if (y == xs.front())
                        return k.rho.front();
                    if (y == xs.back())
                        return k.rho.back();
                    return 0.0;
                }
                const auto it = std::upper_bound(xs.begin(), xs.end(), y);
                const std::size_t j = static_cast<std::size_t>(it - xs.begin());
                const double t = (y - xs[j - 1]) / (xs[j] - xs[j - 1]);
                return k.rho[j - 1] + t * (k.rho[j] - k.rho[j - 1]);
            }
        },
        kind_);
}

std::pair<double, double> Density1D::support() const {
    auto base = std::visit(
        [](const auto& k) -> std::pair<double, double> {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, UniformRod>) {
                return {k.x_lo, k.x_hi};
            } else if constexpr (std::is_same_v<T, BoxEigenstate>) {
                return {0.0, k.width};
            } else if constexpr (std::is_same_v<T, WellMixture>) {
                return {0.0, (k.count - 1) * k.spacing + k.well_width};
            } else {
                return {k.x.front(), k.x.back()};
            }
        },
        kind_);
    return {base.first + origin_, base.second + origin_};
}

std::vector<double> Density1D::breakpoints() const {
    std::set<double> pts;
    std::visit(
        [&pts](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, UniformRod>) {
                pts.insert(k.x_lo);
                pts.insert(k.x_hi);
            } else if constexpr (std::is_same_v<T, BoxEigenstate>) {
                pts.insert(0.0);
                pts.insert(k.width);
            } else if constexpr (std::is_same_v<T, WellMixture>) {
                for (int i = 0; i < k.count; ++i) {
                    pts.insert(i * k.spacing);
                    pts.insert(i * k.spacing + k.well_width);
                }
            } else {
                pts.insert(k.x.front());
                pts.insert(k.x.back());
            }
        },
        kind_);
    std::vector<double> out;
    out.reserve(pts.size());
    for (double p : pts)
        out.push_back(p + origin_);
    return out;
}

Density1D Density1D::translated(double delta) const {
    Density1D copy = *this;
    copy.origin_ += delta;
    return copy;
}

} // namespace qlen
