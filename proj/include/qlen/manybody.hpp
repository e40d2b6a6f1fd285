#pragma once

#include <cstdint>
#include <vector>

#include "qlen/density.hpp"
#include "qlen/statistics.hpp"

namespace qlen {

/// A one-dimensional infinite well, either of fixed width or built from
/// unit cells of lattice length a0 (one cell per electron pair).
class BoxSystem {
public:
    static BoxSystem fixed_width(double width);
    static BoxSystem unit_cells(double lattice, int cells);

    double width() const { return width_; }
    double lattice() const { return lattice_; }
    int cells() const { return cells_; }
    bool from_cells() const { return cells_ > 0; }

private:
    BoxSystem(double width, double lattice, int cells)
        : width_(width), lattice_(lattice), cells_(cells) {}

    double width_;
    double lattice_; // 0 when fixed-width
    int cells_;      // 0 when fixed-width
};

struct LevelOccupation {
    int level;
    int occupancy;
};

/// Assignment of particles to single-particle levels.  Fermions carry at
/// most two particles per level (one spin pair); bosons any number.
class FillingPlan {
public:
    FillingPlan(Statistics statistics, std::vector<LevelOccupation> levels);

    /// Levels 1..N/2 doubly occupied; an odd count leaves the top level
    /// singly occupied.
    static FillingPlan fermion_ground(int electrons);

    /// All particles condensed in the single-particle ground state.
    static FillingPlan boson_ground(int count);

    Statistics statistics() const { return statistics_; }
    int particle_count() const { return particle_count_; }
    int highest_level() const;
    const std::vector<LevelOccupation>& levels() const { return levels_; }

private:
    Statistics statistics_;
    std::vector<LevelOccupation> levels_;
    int particle_count_;
};

/// Single-particle probability density averaged over a filling, sampled on
/// a uniform grid over the box.  The grid is symmetric about the box center
/// by construction.
struct DensityProfile {
    std::vector<double> x;
    std::vector<double> rho;
    int particle_count = 0;
    int highest_level = 0;
    double x_lo = 0.0;
    double x_hi = 0.0;

    double integral() const; // trapezoid
    Density1D to_density() const;
};

/// Ground-state length of N paired electrons:
/// width * sqrt(1 - 12/(pi^2 N) * sum_{n<=N/2} 1/n^2).
/// Throws odd_electron_count for odd N; use an explicit FillingPlan there.
double fermion_length(const BoxSystem& box, std::int64_t electrons);

/// width * sqrt(1 - 6/(pi^2 n^2)); increases toward the box width.
double excited_state_length(double width, int level);

/// Condensate length width * sqrt(1 - 6/pi^2), independent of the count.
double boson_length(double width, int count);

/// Position spread (variance) of one particle in the filled state, from
/// single-particle matrix elements.
double many_body_spread(const FillingPlan& plan, const BoxSystem& box);

/// sqrt(12 * many_body_spread); agrees with the closed forms above for
/// ground fillings and covers odd counts and excited configurations.
double length_from_plan(const BoxSystem& box, const FillingPlan& plan);

DensityProfile electron_density(const BoxSystem& box, const FillingPlan& plan, int grid_points);

} // namespace qlen
