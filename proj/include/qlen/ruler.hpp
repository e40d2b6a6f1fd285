#pragma once

#include <cstdint>
#include <vector>

#include "qlen/manybody.hpp"
#include "qlen/statistics.hpp"

namespace qlen {

/// A ruler of N electrons on lattice a0, cut into R equal segments.
/// Fermions pair two electrons per unit cell, so R must divide N/2;
/// spinless bosons sit one per cell, so R must divide N.
struct RulerSpec {
    double lattice = 1.0;          // a0
    std::int64_t electrons = 2;    // N
    std::int64_t segments = 1;     // R
    Statistics statistics = Statistics::fermion;
};

struct SegmentedLengthResult {
    double per_segment = 0.0;  // quantum length of one segment
    double total = 0.0;        // segments stacked end to end
    double monolithic = 0.0;   // uncut (R = 1) length
    double overestimate = 0.0; // monolithic - total
};

struct CuttingEnergy {
    double energy_uncut = 0.0; // ground-state energy before cutting
    double energy_cut = 0.0;   // ground-state energy of the R pieces
    double ratio = 0.0;        // energy_cut / energy_uncut
};

struct OptimalRuling {
    std::int64_t r_closed_form = 0; // round(sqrt(N))
    double delta_l = 0.0;           // ruling size, in lattice units
    std::int64_t r_sweep = 0;       // integer sweep minimizer of |residual|
};

/// Outcome of solving the stacked-well self-consistency L = N * L1.
/// l1_solved comes from a quadrature fixed point on the mixture density;
/// l1_closed_form from the reassembled quadratic
///   L^2 = (1 - 6/pi^2) a^2 + (N^2 - 1) L1^2.
/// l1_alternate evaluates the variant coefficient (1/3 - 1/(2 pi^2)) a^2,
/// and the flag records that it disagrees with the solved value.
struct SelfConsistencyReport {
    double l1_solved = 0.0;
    double l1_closed_form = 0.0;
    double l1_alternate = 0.0;
    bool coefficient_discrepancy = false;
    int wells = 0;
    double well_width = 0.0;
    int iterations = 0;
    double residual = 0.0; // |g(L1) - L1| at the accepted iterate
};

/// Quantum length of the segmented ruler.  Throws indivisible_segmentation
/// when R does not respect the unit-cell granularity.
SegmentedLengthResult segment_length(const RulerSpec& spec);

/// Ground-state energies before and after cutting, natural units h = m = 1.
CuttingEnergy cutting_energy(const RulerSpec& spec);

/// Left side minus right side of the best-accuracy balance
///   [1 - sqrt(1 - (12/pi^2)(R/N) sum_{n<=N/2R} 1/n^2)] = 1/R.
/// Negative when the ruling is too coarse, positive when too fine.
double precision_condition_residual(std::int64_t electrons, std::int64_t segments);

/// Closed-form best ruling R = sqrt(N) with ruling size sqrt(N)/2 lattice
/// units, plus the admissible-integer sweep minimizer for cross-validation.
OptimalRuling optimal_ruling(std::int64_t electrons);

/// Admissible segment counts for the given spec (divisors of N/2 for
/// fermions, of N for bosons), ascending.
std::vector<std::int64_t> admissible_segments(std::int64_t electrons, Statistics statistics);

SelfConsistencyReport self_consistent_segment_length(double well_width, int wells,
                                                     double tol = 1e-10,
                                                     int max_iterations = 100);

/// Average single-particle density of N stacked wells of width a at pitch
/// L1, sampled on a uniform grid over the combined support.  Requires the
/// overlap to reach at most the adjacent well: a - L1 < L1.
DensityProfile entangled_segment_density(int wells, double well_width, double spacing,
                                         int grid_points);

} // namespace qlen
