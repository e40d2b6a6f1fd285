#pragma once

#include <span>
#include <vector>

#include "qlen/statistics.hpp"

namespace qlen::oracle {

/// Explicit (anti)symmetrized product wavefunction for two or three
/// particles in a box, tabulated on a midpoint grid.  Everything is
/// computed by direct summation over the full P-dimensional grid; no
/// single-particle reduction is used anywhere.
class GridWavefunction {
public:
    /// Throws duplicate_fermion_level when a repeated level makes the
    /// fermionic determinant vanish.
    GridWavefunction(std::vector<int> levels, double width, Statistics statistics,
                     int grid_points = 256);

    int particle_count() const { return static_cast<int>(levels_.size()); }
    int grid_points() const { return grid_points_; }
    double grid_step() const { return step_; }

    /// Amplitude at grid indices (one per particle), before normalization.
    double amplitude(std::span<const int> idx) const;

    /// sum |Psi|^2 dx^P of the raw symmetrized amplitude.
    double norm() const;

    /// Position spread of particle #1, <x1^2> - <x1>^2, with the weights
    /// normalized by the summed norm.
    double spread_x1() const;

private:
    std::vector<int> levels_;
    double width_;
    Statistics statistics_;
    int grid_points_;
    double step_;
    std::vector<double> tables_; // per level: psi_n at every grid node

    const double* table(int which) const { return tables_.data() + which * grid_points_; }
};

/// Delta x1^2 from the explicit grid wavefunction.
double brute_force_spread(std::vector<int> levels, double width, Statistics statistics,
                          int grid_points = 256);

} // namespace qlen::oracle
