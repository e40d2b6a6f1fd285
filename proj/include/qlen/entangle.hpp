#pragma once

#include <optional>
#include <vector>

#include "qlen/manybody.hpp"

namespace qlen {

/// A box whose width is pinned by its nuclei: width = lattice * electrons/2,
/// where `electrons` is the count the material was built with.  Occupation
/// changes never move the walls.
struct MaterialBox {
    double lattice = 1.0;
    int electrons = 2;

    double width() const { return 0.5 * lattice * electrons; }
};

enum class TransferPolicy { none, pairwise, single_electron };
enum class Subsystem { object, ruler };

struct MeasurementScenario {
    MaterialBox object;
    MaterialBox ruler;
    TransferPolicy policy = TransferPolicy::pairwise;
};

/// Outcome of letting the object/ruler system relax by electron transfer.
/// quantum_ratio and ruler_length are absent when the ruler ends up empty.
struct ScenarioReport {
    double classical_ratio = 0.0;
    std::optional<double> quantum_ratio;
    double object_length = 0.0;
    std::optional<double> ruler_length;
    int transfers = 0; // electrons moved
    std::vector<double> photon_energies;
    std::vector<LevelOccupation> object_occupation;
    std::vector<LevelOccupation> ruler_occupation;
};

/// E_n = 2 pi^2 n^2 / (lattice^2 electrons^2), natural units hbar = m = 1.
double level_energy(const MaterialBox& box, int level);

/// Energy of the highest occupied level in the ground filling; depends on
/// the lattice constant only.
double fermi_energy(const MaterialBox& box);

/// Critical lattice ratio a0/b0 at which the ruler's Fermi level meets the
/// object's lowest unoccupied level: (N_o + 2)/N_o.
double fermi_matching_ratio(int object_electrons, int ruler_electrons);

/// Critical a0/b0 at which even the ruler's bottom level sits above the
/// object's lowest vacancy, emptying the ruler: (N_o + 2) N_r / (2 N_o).
double evacuation_matching_ratio(int object_electrons, int ruler_electrons);

/// Moves electrons from the ruler to the object while a move strictly
/// lowers the total energy, then reports lengths and ratios with both box
/// widths held fixed.  Each moved electron contributes one photon energy
/// (donor level minus acceptor level).
ScenarioReport relax(const MeasurementScenario& scenario);

/// Density of one subsystem after the scenario's policy has been applied.
/// Throws empty_subsystem when every electron has left it.
DensityProfile subsystem_density(const MeasurementScenario& scenario, Subsystem which,
                                 int grid_points);

} // namespace qlen
