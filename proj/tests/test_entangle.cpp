#include <cmath>
#include <numbers>
#include <random>

#include "qlen/entangle.hpp"
#include "support.hpp"

using namespace qlen;

namespace {

constexpr double pi = std::numbers::pi;

double total_energy(const MaterialBox& box, const std::vector<LevelOccupation>& occ) {
    double sum = 0.0;
    for (const auto& lo : occ)
        sum += lo.occupancy * level_energy(box, lo.level);
    return sum;
}

MeasurementScenario table_scenario(double lattice_ratio, TransferPolicy policy) {
    return {{lattice_ratio, 10}, {1.0, 4}, policy};
}

} // namespace

TEST_CASE("single-particle level energies") {
    CHECK(level_energy({1.0, 2}, 1) == doctest::Approx(pi * pi / 2.0).epsilon(1e-14));
    CHECK(level_energy({1.0, 10}, 6) == doctest::Approx(18.0 * pi * pi / 25.0).epsilon(1e-14));
    CHECK_QLEN_ERROR(level_energy({1.0, 10}, 0), errc::invalid_index);
    CHECK_QLEN_ERROR(level_energy({1.0, 3}, 1), errc::invalid_input);
}

TEST_CASE("the Fermi energy depends only on the lattice") {
    const double reference = fermi_energy({1.0, 2});
    CHECK(reference == doctest::Approx(pi * pi / 2.0).epsilon(1e-14));
    for (int electrons : {4, 10, 100, 2000})
        CHECK(fermi_energy({1.0, electrons}) == doctest::Approx(reference).epsilon(1e-12));
    CHECK(fermi_energy({2.0, 10}) == doctest::Approx(reference / 4.0).epsilon(1e-12));
}

TEST_CASE("lattice-ratio thresholds") {
    CHECK(fermi_matching_ratio(10, 4) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(evacuation_matching_ratio(10, 4) == doctest::Approx(2.4).epsilon(1e-15));
}

TEST_CASE("identical materials stay put") {
    const auto report = relax({{1.0, 10}, {1.0, 4}, TransferPolicy::pairwise});
    CHECK(report.transfers == 0);
    CHECK(report.classical_ratio == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(report.quantum_ratio.has_value());
}

TEST_CASE("transfer threshold is sharp") {
    const auto below = relax(table_scenario(1.2 * (1.0 - 1e-6), TransferPolicy::pairwise));
    CHECK(below.transfers == 0);

    const auto above = relax(table_scenario(1.2 * (1.0 + 1e-6), TransferPolicy::pairwise));
    CHECK(above.transfers >= 2);
}

TEST_CASE("moderate mismatch moves one pair") {
    const double ratio = 1.2 * (1.0 + 1e-7);

    const auto before = relax(table_scenario(ratio, TransferPolicy::none));
    CHECK(before.classical_ratio == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(std::abs(*before.quantum_ratio - 3.45) < 0.01);

    const auto after = relax(table_scenario(ratio, TransferPolicy::pairwise));
    CHECK(after.transfers == 2);
    CHECK(after.object_occupation.back().level == 6);
    CHECK(after.ruler_occupation.size() == 1);
    CHECK(after.ruler_occupation.front().level == 1);
    CHECK(std::abs(*after.quantum_ratio - 4.41) < 0.01);
    for (double photon : after.photon_energies)
        CHECK(photon > 0.0);
}

TEST_CASE("strong mismatch empties the ruler") {
    const double ratio = 2.4 * (1.0 + 1e-7);

    const auto before = relax(table_scenario(ratio, TransferPolicy::none));
    CHECK(before.classical_ratio == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(std::abs(*before.quantum_ratio - 6.91) < 0.01);

    const auto after = relax(table_scenario(ratio, TransferPolicy::pairwise));
    CHECK(after.transfers == 4);
    CHECK(after.ruler_occupation.empty());
    CHECK_FALSE(after.quantum_ratio.has_value());
    CHECK_FALSE(after.ruler_length.has_value());
    CHECK(after.object_occupation.back().level == 7);
}

TEST_CASE("single-electron policy reaches the same final occupation") {
    const double ratio = 1.2 * (1.0 + 1e-7);
    const auto pairwise = relax(table_scenario(ratio, TransferPolicy::pairwise));
    const auto single = relax(table_scenario(ratio, TransferPolicy::single_electron));
    CHECK(single.transfers == pairwise.transfers);
    CHECK(single.photon_energies.size() == pairwise.photon_energies.size());
    REQUIRE(single.ruler_occupation.size() == pairwise.ruler_occupation.size());
    for (std::size_t i = 0; i < single.ruler_occupation.size(); ++i) {
        CHECK(single.ruler_occupation[i].level == pairwise.ruler_occupation[i].level);
        CHECK(single.ruler_occupation[i].occupancy == pairwise.ruler_occupation[i].occupancy);
    }
}

TEST_CASE("electrons are conserved and energy never rises") {
    std::mt19937 rng(77031);
    std::uniform_int_distribution<int> cells(1, 8);
    std::uniform_real_distribution<double> lattice(0.2, 3.0);
    for (int trial = 0; trial < 120; ++trial) {
        const MeasurementScenario scenario{{lattice(rng), 2 * cells(rng)},
                                           {lattice(rng), 2 * cells(rng)},
                                           trial % 2 ? TransferPolicy::pairwise
                                                     : TransferPolicy::single_electron};
        const auto initial = relax({scenario.object, scenario.ruler, TransferPolicy::none});
        const auto final_state = relax(scenario);

        int before = 0, after = 0;
        for (const auto& lo : initial.object_occupation)
            before += lo.occupancy;
        for (const auto& lo : initial.ruler_occupation)
            before += lo.occupancy;
        for (const auto& lo : final_state.object_occupation)
            after += lo.occupancy;
        for (const auto& lo : final_state.ruler_occupation)
            after += lo.occupancy;
        CHECK(before == after);

        const double e_before = total_energy(scenario.object, initial.object_occupation) +
                                total_energy(scenario.ruler, initial.ruler_occupation);
        const double e_after = total_energy(scenario.object, final_state.object_occupation) +
                               total_energy(scenario.ruler, final_state.ruler_occupation);
        CHECK(e_after <= e_before + 1e-12);
        if (final_state.transfers > 0)
            CHECK(e_after < e_before);
        for (double photon : final_state.photon_energies)
            CHECK(photon > 0.0);
    }
}

TEST_CASE("subsystem densities") {
    const MeasurementScenario idle{{1.0, 2}, {1.0, 2}, TransferPolicy::none};
    const auto object = subsystem_density(idle, Subsystem::object, 1024);
    const auto direct = electron_density(BoxSystem::fixed_width(1.0),
                                         FillingPlan::fermion_ground(2), 1024);
    for (std::size_t i = 0; i < object.rho.size(); i += 83)
        CHECK(object.rho[i] == doctest::Approx(direct.rho[i]).epsilon(1e-12));

    const auto evacuated = table_scenario(2.4 * (1.0 + 1e-7), TransferPolicy::pairwise);
    CHECK_QLEN_ERROR(subsystem_density(evacuated, Subsystem::ruler, 1024),
                     errc::empty_subsystem);
    CHECK(subsystem_density(evacuated, Subsystem::object, 1024).particle_count == 14);
}
