#include "qlen/series.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qlen/errors.hpp"

namespace qlen::oracle {

double partial_zeta2(std::int64_t m) {
    if (m < 1)
        throw error(errc::invalid_input, "partial_zeta2 requires m >= 1");
    double sum = 0.0;
    double carry = 0.0;
    for (std::int64_t n = m; n >= 1; --n) {
        const double term = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

std::int64_t find_sign_change(const std::function<double(std::int64_t)>& f,
                              std::span<const std::int64_t> admissible) {
    if (admissible.size() < 2)
        throw error(errc::invalid_input, "need at least two admissible integers");

    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };

    double prev_val = f(admissible[0]);
    int prev_sign = sgn(prev_val);
    for (std::size_t i = 1; i < admissible.size(); ++i) {
        const double val = f(admissible[i]);
        const int s = sgn(val);
        if (prev_sign == 0)
            return admissible[i - 1];
        if (s == 0)
            return admissible[i];
        if (s != prev_sign)
            return std::abs(prev_val) <= std::abs(val) ? admissible[i - 1] : admissible[i];
        prev_val = val;
        prev_sign = s;
    }
    throw error(errc::no_sign_change, "f keeps one sign over the admissible integers");
}

std::int64_t find_sign_change(const std::function<double(std::int64_t)>& f,
                              std::int64_t lo, std::int64_t hi) {
    if (hi < lo)
        throw error(errc::invalid_input, "empty integer range");
    std::vector<std::int64_t> range;
    range.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t v = lo; v <= hi; ++v)
        range.push_back(v);
    return find_sign_change(f, range);
}

} // namespace qlen::oracle

namespace qlen::series {

double partial_zeta2_fast(std::int64_t m) {
    constexpr std::int64_t direct_cutoff = 1'000'000;
    if (m <= direct_cutoff)
        return oracle::partial_zeta2(m);
    // trigamma(m+1) asymptotic; next omitted term is O(x^-9), far below
    // double rounding for m this large
    const double x = static_cast<double>(m) + 1.0;
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double tail = inv * (1.0 + inv * (0.5 + inv * (1.0 / 6.0 - inv2 * (1.0 / 30.0 - inv2 / 42.0))));
    return std::numbers::pi * std::numbers::pi / 6.0 - tail;
}

} // namespace qlen::series
