#include <array>
#include <cmath>

#include "qlen/grid_oracle.hpp"
#include "qlen/moments.hpp"
#include "support.hpp"

using namespace qlen;
namespace o = qlen::oracle;

namespace {

// occupation-averaged variance from single-particle matrix elements
double closed_form_spread(const std::vector<int>& levels, double width) {
    double mean_m2 = 0.0;
    for (int n : levels)
        mean_m2 += box_x2_matrix_element(width, n);
    mean_m2 /= static_cast<double>(levels.size());
    return mean_m2 - 0.25 * width * width;
}

} // namespace

TEST_CASE("two fermions") {
    const double grid = o::brute_force_spread({1, 2}, 1.0, Statistics::fermion, 256);
    CHECK(std::abs(grid - closed_form_spread({1, 2}, 1.0)) < 1e-6);
    CHECK(grid == doctest::Approx(ref::spread_levels_12).epsilon(1e-6));
}

TEST_CASE("three fermions") {
    const double grid = o::brute_force_spread({1, 2, 3}, 1.0, Statistics::fermion, 256);
    CHECK(std::abs(grid - closed_form_spread({1, 2, 3}, 1.0)) < 1e-6);
    CHECK(grid == doctest::Approx(ref::spread_levels_123).epsilon(1e-6));
}

TEST_CASE("wider box scales the spread") {
    const double grid = o::brute_force_spread({1, 3}, 2.0, Statistics::fermion, 256);
    CHECK(std::abs(grid - closed_form_spread({1, 3}, 2.0)) < 4e-6);
}

TEST_CASE("repeated fermion levels are rejected") {
    CHECK_QLEN_ERROR(o::brute_force_spread({1, 1}, 1.0, Statistics::fermion, 256),
                     errc::duplicate_fermion_level);
    CHECK_QLEN_ERROR(o::brute_force_spread({1, 2, 1}, 1.0, Statistics::fermion, 256),
                     errc::duplicate_fermion_level);
}

TEST_CASE("condensed bosons reduce to the single-particle spread") {
    const double grid = o::brute_force_spread({1, 1}, 1.0, Statistics::boson, 256);
    CHECK(grid == doctest::Approx(ref::spread_boson_11).epsilon(1e-6));
}

TEST_CASE("distinct-level bosons match fermions") {
    const double boson = o::brute_force_spread({1, 2}, 1.0, Statistics::boson, 256);
    const double fermion = o::brute_force_spread({1, 2}, 1.0, Statistics::fermion, 256);
    CHECK(boson == doctest::Approx(fermion).epsilon(1e-10));
}

TEST_CASE("normalization of the raw symmetrized amplitude") {
    const o::GridWavefunction two({1, 2}, 1.0, Statistics::fermion, 256);
    CHECK(std::abs(two.norm() - 1.0) < 1e-8);
    const o::GridWavefunction three({1, 2, 3}, 1.0, Statistics::fermion, 256);
    CHECK(std::abs(three.norm() - 1.0) < 1e-8);
    const o::GridWavefunction bosons({2, 2, 5}, 1.0, Statistics::boson, 256);
    CHECK(bosons.norm() > 0.0); // repeated levels change the raw norm
    CHECK(std::abs(bosons.norm() - 2.0) < 1e-6);
}

TEST_CASE("exchange antisymmetry on the grid") {
    const o::GridWavefunction pair({1, 2}, 1.0, Statistics::fermion, 256);
    const o::GridWavefunction pair_boson({1, 2}, 1.0, Statistics::boson, 256);
    for (std::array<int, 2> idx : {std::array{3, 200}, {17, 64}, {128, 129}}) {
        const std::array<int, 2> swapped{idx[1], idx[0]};
        CHECK(pair.amplitude(idx) == -pair.amplitude(swapped));
        CHECK(pair_boson.amplitude(idx) == pair_boson.amplitude(swapped));
    }

    const o::GridWavefunction triple({1, 2, 3}, 1.0, Statistics::fermion, 256);
    double scale = 0.0;
    for (std::array<int, 3> idx : {std::array{3, 77, 200}, {10, 20, 30}, {99, 140, 7}})
        scale = std::max(scale, std::abs(triple.amplitude(idx)));
    for (std::array<int, 3> idx : {std::array{3, 77, 200}, {10, 20, 30}, {99, 140, 7}}) {
        const std::array<int, 3> swap01{idx[1], idx[0], idx[2]};
        const std::array<int, 3> swap12{idx[0], idx[2], idx[1]};
        CHECK(std::abs(triple.amplitude(idx) + triple.amplitude(swap01)) <= 1e-12 * scale);
        CHECK(std::abs(triple.amplitude(idx) + triple.amplitude(swap12)) <= 1e-12 * scale);
    }
}

TEST_CASE("grid refinement is already converged") {
    const double coarse = o::brute_force_spread({1, 2}, 1.0, Statistics::fermion, 256);
    const double fine = o::brute_force_spread({1, 2}, 1.0, Statistics::fermion, 512);
    CHECK(std::abs(fine - coarse) < 4e-6);
}

TEST_CASE("construction limits") {
    CHECK_QLEN_ERROR(o::brute_force_spread({1}, 1.0, Statistics::fermion, 256),
                     errc::invalid_input);
    CHECK_QLEN_ERROR(o::brute_force_spread({1, 2, 3, 4}, 1.0, Statistics::fermion, 256),
                     errc::invalid_input);
    CHECK_QLEN_ERROR(o::brute_force_spread({1, 2}, 1.0, Statistics::fermion, 128),
                     errc::invalid_input);
    CHECK_QLEN_ERROR(o::brute_force_spread({0, 2}, 1.0, Statistics::fermion, 256),
                     errc::invalid_index);
}
