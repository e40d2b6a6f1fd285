#include <cmath>
#include <numbers>

#include "qlen/quadrature.hpp"
#include "support.hpp"

using namespace qlen;
namespace o = qlen::oracle;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("polynomial integral") {
    const double v = o::integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("box ground-state density is normalized") {
    const double v = o::integrate(
        [](double x) { return 2.0 * std::sin(pi * x) * std::sin(pi * x); }, 0.0, 1.0);
    CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("x^2 against the ground-state density") {
    // this quadrature is the reference for the closed-form matrix element
    const double v = o::integrate(
        [](double x) { return 2.0 * x * x * std::sin(pi * x) * std::sin(pi * x); }, 0.0, 1.0,
        o::QuadratureSpec(1e-12, 4000));
    CHECK(std::abs(v - ref::box_m2_n1) < 1e-11);
}

TEST_CASE("piecewise integration with breakpoints") {
    const double pts[] = {-1.0, 0.0, 1.0};
    const double v = o::integrate_segments([](double x) { return std::abs(x); }, pts);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("subdivision budget is enforced") {
    const o::QuadratureSpec tight(1e-15, 4);
    CHECK_QLEN_ERROR(o::integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0,
                                  tight),
                     errc::max_subdivisions_exceeded);
}

TEST_CASE("spec validation") {
    CHECK_QLEN_ERROR(o::QuadratureSpec(-1.0, 100), errc::invalid_input);
    const double one_pt[] = {0.0};
    CHECK_QLEN_ERROR(o::integrate_segments([](double) { return 1.0; }, one_pt),
                     errc::invalid_input);
}

TEST_CASE("empty interval integrates to zero") {
    CHECK(o::integrate([](double) { return 42.0; }, 2.0, 2.0) == 0.0);
}
