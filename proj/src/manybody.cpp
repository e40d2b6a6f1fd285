#include "qlen/manybody.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "qlen/errors.hpp"
#include "qlen/moments.hpp"
#include "qlen/series.hpp"

namespace qlen {

namespace {
constexpr double pi = std::numbers::pi;
}

BoxSystem BoxSystem::fixed_width(double width) {
    if (!(width > 0.0))
        throw error(errc::invalid_input, "box width must be positive");
    return BoxSystem(width, 0.0, 0);
}

BoxSystem BoxSystem::unit_cells(double lattice, int cells) {
    if (!(lattice > 0.0))
        throw error(errc::invalid_input, "lattice length must be positive");
    if (cells < 1)
        throw error(errc::invalid_input, "need at least one unit cell");
    return BoxSystem(lattice * cells, lattice, cells);
}

FillingPlan::FillingPlan(Statistics statistics, std::vector<LevelOccupation> levels)
    : statistics_(statistics), levels_(std::move(levels)), particle_count_(0) {
    std::set<int> seen;
    for (const auto& lo : levels_) {
        if (lo.level < 1)
            throw error(errc::invalid_index, "level index must be >= 1");
        if (lo.occupancy < 1)
            throw error(errc::invalid_input, "occupancy must be >= 1");
        if (statistics_ == Statistics::fermion && lo.occupancy > 2)
            throw error(errc::invalid_input, "fermion level occupancy is at most 2");
        if (!seen.insert(lo.level).second)
            throw error(errc::invalid_input, "duplicate level in filling plan");
        particle_count_ += lo.occupancy;
    }
    std::sort(levels_.begin(), levels_.end(),
              [](const LevelOccupation& a, const LevelOccupation& b) { return a.level < b.level; });
}

FillingPlan FillingPlan::fermion_ground(int electrons) {
    if (electrons < 1)
        throw error(errc::invalid_input, "need at least one electron");
    std::vector<LevelOccupation> levels;
    levels.reserve(static_cast<std::size_t>(electrons / 2 + 1));
    for (int n = 1; n <= electrons / 2; ++n)
        levels.push_back({n, 2});
    if (electrons % 2 == 1)
        levels.push_back({electrons / 2 + 1, 1});
    return FillingPlan(Statistics::fermion, std::move(levels));
}

FillingPlan FillingPlan::boson_ground(int count) {
    if (count < 1)
        throw error(errc::invalid_input, "need at least one particle");
    return FillingPlan(Statistics::boson, {{1, count}});
}

int FillingPlan::highest_level() const {
    return levels_.empty() ? 0 : levels_.back().level;
}

double DensityProfile::integral() const {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += 0.5 * (x[i + 1] - x[i]) * (rho[i] + rho[i + 1]);
    return sum;
}

Density1D DensityProfile::to_density() const {
    return Density1D::sampled(x, rho);
}

double fermion_length(const BoxSystem& box, std::int64_t electrons) {
    if (electrons < 2)
        throw error(errc::invalid_input, "need at least two electrons");
    if (electrons % 2 != 0)
        throw error(errc::odd_electron_count,
                    "paired-filling length needs an even electron count; "
                    "use an explicit FillingPlan for odd counts");
    const double s = series::partial_zeta2_fast(electrons / 2);
    const double arg = 1.0 - 12.0 / (pi * pi * static_cast<double>(electrons)) * s;
    return box.width() * std::sqrt(arg > 0.0 ? arg : 0.0);
}

double excited_state_length(double width, int level) {
    if (level < 1)
        throw error(errc::invalid_index, "level index must be >= 1");
    if (!(width > 0.0))
        throw error(errc::invalid_input, "box width must be positive");
    const double n2 = static_cast<double>(level) * level;
    return width * std::sqrt(1.0 - 6.0 / (pi * pi * n2));
}

double boson_length(double width, int count) {
    if (count < 1)
        throw error(errc::invalid_input, "need at least one particle");
    if (!(width > 0.0))
        throw error(errc::invalid_input, "box width must be positive");
    return width * std::sqrt(1.0 - 6.0 / (pi * pi));
}

double many_body_spread(const FillingPlan& plan, const BoxSystem& box) {
    if (plan.levels().empty())
        throw error(errc::empty_filling, "filling plan is empty");
    const double a = box.width();
    const double c = 0.5 * a;
    // every well state is centered, so <n|x|n> = a/2 for all n and the
    // variance is the occupation-weighted mean of the per-level variances
    double mean_var = 0.0;
    const double n_total = plan.particle_count();
    for (const auto& lo : plan.levels()) {
        const double per_level = box_x2_matrix_element(a, lo.level) - c * c;
        mean_var += lo.occupancy * per_level;
    }
    return mean_var / n_total;
}

double length_from_plan(const BoxSystem& box, const FillingPlan& plan) {
    const double var = many_body_spread(plan, box);
    return std::sqrt(12.0 * (var > 0.0 ? var : 0.0));
}

DensityProfile electron_density(const BoxSystem& box, const FillingPlan& plan, int grid_points) {
    if (grid_points < 16)
        throw error(errc::invalid_input, "grid needs at least 16 points");
    if (plan.levels().empty())
        throw error(errc::empty_filling, "filling plan is empty");

    const double a = box.width();
    const int m = grid_points - 1;

    DensityProfile profile;
    profile.particle_count = plan.particle_count();
    profile.highest_level = plan.highest_level();
    profile.x_lo = 0.0;
    profile.x_hi = a;
    profile.x.resize(grid_points);
    profile.rho.resize(grid_points);

    // fill the lower half and mirror it so the grid and the values are
    // symmetric about a/2 exactly
    for (int j = 0; j <= m / 2; ++j) {
        const double x = a * j / m;
        profile.x[j] = x;
        profile.x[m - j] = a - x;
        double sum = 0.0;
        for (const auto& lo : plan.levels()) {
            const double s = std::sin(lo.level * pi * x / a);
            sum += lo.occupancy * s * s;
        }
        const double value = 2.0 * sum / (a * profile.particle_count);
        profile.rho[j] = value;
        profile.rho[m - j] = value;
    }

    // the trapezoid integral is already 1 to rounding whenever the grid
    // resolves the highest level; rescale so the stored profile always
    // integrates to one
    const double integral = profile.integral();
    if (integral > 0.0 && integral != 1.0) {
        for (double& v : profile.rho)
            v /= integral;
    }
    return profile;
}

} // namespace qlen
