#include "qlen/grid_oracle.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "qlen/errors.hpp"

namespace qlen::oracle {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt2 = 0.70710678118654752440;
constexpr double inv_sqrt6 = 0.40824829046386301637;
} // namespace

GridWavefunction::GridWavefunction(std::vector<int> levels, double width, Statistics statistics,
                                   int grid_points)
    : levels_(std::move(levels)), width_(width), statistics_(statistics),
      grid_points_(grid_points), step_(width / grid_points) {
    const auto p = levels_.size();
    if (p != 2 && p != 3)
        throw error(errc::invalid_input, "grid oracle supports two or three particles");
    if (!(width_ > 0.0))
        throw error(errc::invalid_input, "box width must be positive");
    if (grid_points_ < 256)
        throw error(errc::invalid_input, "grid oracle needs at least 256 points per axis");
    for (int n : levels_)
        if (n < 1)
            throw error(errc::invalid_index, "level index must be >= 1");
    if (statistics_ == Statistics::fermion) {
        std::set<int> distinct(levels_.begin(), levels_.end());
        if (distinct.size() != p)
            throw error(errc::duplicate_fermion_level,
                        "two fermions in one level make the state vanish");
    }

    tables_.resize(p * static_cast<std::size_t>(grid_points_));
    const double norm1 = std::sqrt(2.0 / width_);
    for (std::size_t which = 0; which < p; ++which) {
        const double k = levels_[which] * pi / width_;
        double* row = tables_.data() + which * grid_points_;
        for (int j = 0; j < grid_points_; ++j) {
            const double x = (j + 0.5) * step_;
            row[j] = norm1 * std::sin(k * x);
        }
    }
}

double GridWavefunction::amplitude(std::span<const int> idx) const {
    const double sign = statistics_ == Statistics::fermion ? -1.0 : 1.0;
    if (levels_.size() == 2) {
        const double* a = table(0);
        const double* b = table(1);
        const int i = idx[0], j = idx[1];
        return inv_sqrt2 * (a[i] * b[j] + sign * b[i] * a[j]);
    }
    const double* a = table(0);
    const double* b = table(1);
    const double* c = table(2);
    const int i = idx[0], j = idx[1], k = idx[2];
    // six products, even permutations first
    const double even = a[i] * b[j] * c[k] + b[i] * c[j] * a[k] + c[i] * a[j] * b[k];
    const double odd = a[i] * c[j] * b[k] + c[i] * b[j] * a[k] + b[i] * a[j] * c[k];
    return inv_sqrt6 * (even + sign * odd);
}

double GridWavefunction::norm() const {
    const int g = grid_points_;
    const double pair_sign = statistics_ == Statistics::fermion ? -1.0 : 1.0;
    double total = 0.0;
    if (levels_.size() == 2) {
        const double* a = table(0);
        const double* b = table(1);
        for (int i = 0; i < g; ++i) {
            double slab = 0.0;
            for (int j = 0; j < g; ++j) {
                const double amp = inv_sqrt2 * (a[i] * b[j] + pair_sign * b[i] * a[j]);
                slab += amp * amp;
            }
            total += slab;
        }
        return total * step_ * step_;
    }
    const double* a = table(0);
    const double* b = table(1);
    const double* c = table(2);
    for (int i = 0; i < g; ++i) {
        double slab = 0.0;
        for (int j = 0; j < g; ++j) {
            for (int k = 0; k < g; ++k) {
                const double even = a[i] * b[j] * c[k] + b[i] * c[j] * a[k] + c[i] * a[j] * b[k];
                const double odd = a[i] * c[j] * b[k] + c[i] * b[j] * a[k] + b[i] * a[j] * c[k];
                const double amp = inv_sqrt6 * (even + pair_sign * odd);
                slab += amp * amp;
            }
        }
        total += slab;
    }
    return total * step_ * step_ * step_;
}

double GridWavefunction::spread_x1() const {
    const int g = grid_points_;
    const double sign = statistics_ == Statistics::fermion ? -1.0 : 1.0;
    double w_total = 0.0, w_x = 0.0, w_x2 = 0.0;
    if (levels_.size() == 2) {
        const double* a = table(0);
        const double* b = table(1);
        for (int i = 0; i < g; ++i) {
            const double x1 = (i + 0.5) * step_;
            double slab = 0.0;
            for (int j = 0; j < g; ++j) {
                const double amp = inv_sqrt2 * (a[i] * b[j] + sign * b[i] * a[j]);
                slab += amp * amp;
            }
            w_total += slab;
            w_x += slab * x1;
            w_x2 += slab * x1 * x1;
        }
    } else {
        const double* a = table(0);
        const double* b = table(1);
        const double* c = table(2);
        for (int i = 0; i < g; ++i) {
            const double x1 = (i + 0.5) * step_;
            double slab = 0.0;
            for (int j = 0; j < g; ++j) {
                for (int k = 0; k < g; ++k) {
                    const double even = a[i] * b[j] * c[k] + b[i] * c[j] * a[k] + c[i] * a[j] * b[k];
                    const double odd = a[i] * c[j] * b[k] + c[i] * b[j] * a[k] + b[i] * a[j] * c[k];
                    const double amp = inv_sqrt6 * (even + sign * odd);
                    slab += amp * amp;
                }
            }
            w_total += slab;
            w_x += slab * x1;
            w_x2 += slab * x1 * x1;
        }
    }
    const double mean = w_x / w_total;
    return w_x2 / w_total - mean * mean;
}

double brute_force_spread(std::vector<int> levels, double width, Statistics statistics,
                          int grid_points) {
    const GridWavefunction psi(std::move(levels), width, statistics, grid_points);
    return psi.spread_x1();
}

} // namespace qlen::oracle
