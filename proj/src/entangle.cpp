#include "qlen/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qlen/errors.hpp"

namespace qlen {

namespace {

constexpr double pi = std::numbers::pi;

void validate_box(const MaterialBox& box) {
    if (!(box.lattice > 0.0))
        throw error(errc::invalid_input, "lattice length must be positive");
    if (box.electrons < 2 || box.electrons % 2 != 0)
        throw error(errc::invalid_input, "a material box needs an even electron count >= 2");
}

using Occupation = std::map<int, int>; // level -> electrons (0..2)

Occupation ground_occupation(int electrons) {
    Occupation occ;
    for (int n = 1; n <= electrons / 2; ++n)
        occ[n] = 2;
    return occ;
}

std::vector<LevelOccupation> to_levels(const Occupation& occ) {
    std::vector<LevelOccupation> out;
    for (const auto& [level, count] : occ)
        if (count > 0)
            out.push_back({level, count});
    return out;
}

int lowest_vacancy(const Occupation& occ) {
    int n = 1;
    while (true) {
        auto it = occ.find(n);
        if (it == occ.end() || it->second < 2)
            return n;
        ++n;
    }
}

std::optional<double> occupation_length(const MaterialBox& box, const Occupation& occ) {
    const auto levels = to_levels(occ);
    if (levels.empty())
        return std::nullopt;
    return length_from_plan(BoxSystem::fixed_width(box.width()),
                            FillingPlan(Statistics::fermion, levels));
}

} // namespace

double level_energy(const MaterialBox& box, int level) {
    validate_box(box);
    if (level < 1)
        throw error(errc::invalid_index, "level index must be >= 1");
    const double n = static_cast<double>(level);
    const double ne = static_cast<double>(box.electrons);
    return 2.0 * pi * pi * n * n / (box.lattice * box.lattice * ne * ne);
}

double fermi_energy(const MaterialBox& box) {
    validate_box(box);
    return level_energy(box, box.electrons / 2);
}

double fermi_matching_ratio(int object_electrons, int ruler_electrons) {
    MaterialBox object{1.0, object_electrons};
    MaterialBox ruler{1.0, ruler_electrons};
    validate_box(object);
    validate_box(ruler);
    // E_f^r ~ 1/b0^2 meets E_l^o ~ ((N_o/2 + 1)/N_o)^2 / a0^2
    return (object_electrons + 2.0) / object_electrons;
}

double evacuation_matching_ratio(int object_electrons, int ruler_electrons) {
    MaterialBox object{1.0, object_electrons};
    MaterialBox ruler{1.0, ruler_electrons};
    validate_box(object);
    validate_box(ruler);
    return (object_electrons + 2.0) * ruler_electrons / (2.0 * object_electrons);
}

ScenarioReport relax(const MeasurementScenario& scenario) {
    validate_box(scenario.object);
    validate_box(scenario.ruler);

    Occupation object_occ = ground_occupation(scenario.object.electrons);
    Occupation ruler_occ = ground_occupation(scenario.ruler.electrons);

    ScenarioReport report;
    report.classical_ratio = scenario.object.width() / scenario.ruler.width();

    if (scenario.policy != TransferPolicy::none) {
        while (true) {
            const int acceptor = lowest_vacancy(object_occ);
            const double acceptor_energy = level_energy(scenario.object, acceptor);

            // donors scan upward from the bottom of the ruler spectrum; a
            // move happens only when it strictly lowers the total energy
            int donor = 0;
            double donor_energy = 0.0;
            for (const auto& [level, count] : ruler_occ) {
                if (count == 0)
                    continue;
                const double energy = level_energy(scenario.ruler, level);
                if (energy > acceptor_energy) {
                    donor = level;
                    donor_energy = energy;
                    break;
                }
            }
            if (donor == 0)
                break;

            const int slots = 2 - object_occ[acceptor];
            int moved = scenario.policy == TransferPolicy::single_electron ? 1 : 2;
            moved = std::min({moved, ruler_occ[donor], slots});
            ruler_occ[donor] -= moved;
            object_occ[acceptor] += moved;
            report.transfers += moved;
            for (int k = 0; k < moved; ++k)
                report.photon_energies.push_back(donor_energy - acceptor_energy);
        }
    }

    report.object_occupation = to_levels(object_occ);
    report.ruler_occupation = to_levels(ruler_occ);

    const auto object_length = occupation_length(scenario.object, object_occ);
    const auto ruler_length = occupation_length(scenario.ruler, ruler_occ);
    report.object_length = object_length.value_or(0.0);
    report.ruler_length = ruler_length;
    if (ruler_length && *ruler_length > 0.0)
        report.quantum_ratio = report.object_length / *ruler_length;
    return report;
}

DensityProfile subsystem_density(const MeasurementScenario& scenario, Subsystem which,
                                 int grid_points) {
    const ScenarioReport report = relax(scenario);
    const auto& levels =
        which == Subsystem::object ? report.object_occupation : report.ruler_occupation;
    const MaterialBox& box = which == Subsystem::object ? scenario.object : scenario.ruler;
    if (levels.empty())
        throw error(errc::empty_subsystem, "subsystem holds no electrons");
    return electron_density(BoxSystem::fixed_width(box.width()),
                            FillingPlan(Statistics::fermion, levels), grid_points);
}

} // namespace qlen
