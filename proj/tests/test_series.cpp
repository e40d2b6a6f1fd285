#include <cmath>
#include <vector>

#include "qlen/series.hpp"
#include "support.hpp"

using namespace qlen;
namespace o = qlen::oracle;

TEST_CASE("partial sums") {
    CHECK(o::partial_zeta2(1) == 1.0);
    CHECK(o::partial_zeta2(5) == doctest::Approx(ref::zeta2_partial_5).epsilon(1e-15));
    CHECK(o::partial_zeta2(50) == doctest::Approx(ref::zeta2_partial_50).epsilon(1e-15));
    CHECK_QLEN_ERROR(o::partial_zeta2(0), errc::invalid_input);
}

TEST_CASE("tail bounds 1/(m+1) < pi^2/6 - S(m) < 1/m") {
    for (std::int64_t m : {1, 2, 3, 7, 10, 100, 1000, 12345}) {
        const double tail = ref::zeta2_limit - o::partial_zeta2(m);
        CHECK(tail > 1.0 / static_cast<double>(m + 1));
        CHECK(tail < 1.0 / static_cast<double>(m));
    }
}

TEST_CASE("fast path agrees with direct summation across the crossover") {
    for (std::int64_t m : {999'999LL, 1'000'000LL, 1'000'001LL, 2'000'000LL}) {
        const double direct = o::partial_zeta2(m);
        const double fast = series::partial_zeta2_fast(m);
        CHECK(std::abs(fast - direct) < 1e-15);
    }
}

TEST_CASE("sign change location") {
    auto shifted = [](std::int64_t r) { return static_cast<double>(r - 7); };
    CHECK(o::find_sign_change(shifted, 1, 20) == 7);

    auto monotone = [](std::int64_t r) { return static_cast<double>(r + 1); };
    CHECK_QLEN_ERROR(o::find_sign_change(monotone, 1, 20), errc::no_sign_change);

    // nearest endpoint of the change wins
    auto skewed = [](std::int64_t r) { return r < 5 ? -0.01 : 3.0; };
    CHECK(o::find_sign_change(skewed, 1, 20) == 4);
}

TEST_CASE("sign change over an explicit admissible list") {
    const std::vector<std::int64_t> odd{1, 3, 5, 9, 15};
    auto f = [](std::int64_t r) { return static_cast<double>(r) - 6.9; };
    CHECK(o::find_sign_change(f, odd) == 5);
    CHECK_QLEN_ERROR(o::find_sign_change(f, std::vector<std::int64_t>{2}), errc::invalid_input);
}
