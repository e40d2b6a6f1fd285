#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "qlen/errors.hpp"

namespace qlen::oracle {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_subdivisions = 4000;
    QuadratureSpec() = default;
    QuadratureSpec(double tol, int max_subdiv)
        : abs_tol(tol), max_subdivisions(max_subdiv) {
        if (!(abs_tol > 0.0))
            throw error(errc::invalid_input, "quadrature tolerance must be positive");
    }
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK dqk15).
inline constexpr double kron_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kron_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(const F& f, double lo, double hi, double& value, double& err) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f_mid = f(mid);
    double k15 = kron_weights[7] * f_mid;
    double g7 = gauss_weights[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kron_nodes[i];
        const double pair = f(mid + dx) + f(mid - dx);
        k15 += kron_weights[i] * pair;
        if (i % 2 == 1)
            g7 += gauss_weights[i / 2] * pair;
    }
    value = k15 * half;
    err = std::abs((k15 - g7) * half);
}

} // namespace detail

/// Adaptive quadrature of f over [lo, hi] to an absolute tolerance.
/// Throws max_subdivisions_exceeded when the interval budget runs out
/// before the local error estimates fall under the tolerance.
template <class F>
double integrate(const F& f, double lo, double hi, const QuadratureSpec& spec = {}) {
    if (lo == hi)
        return 0.0;
    const double span = std::abs(hi - lo);

    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> stack{{lo, hi}};
    stack.reserve(64);

    double total = 0.0;
    int used = 0;
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();

        double value = 0.0, err = 0.0;
        detail::gauss_kronrod_15(f, iv.lo, iv.hi, value, err);

        const double local_tol = spec.abs_tol * std::abs(iv.hi - iv.lo) / span;
        if (err <= local_tol || err <= 1e-300) {
            total += value;
            continue;
        }
        if (++used > spec.max_subdivisions)
            throw error(errc::max_subdivisions_exceeded,
                        "quadrature failed to reach tolerance within the subdivision budget");
        const double mid = 0.5 * (iv.lo + iv.hi);
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    return total;
}

/// Integrate across a piecewise-smooth function using explicit breakpoints;
/// breakpoints must be ascending.
template <class F>
double integrate_segments(const F& f, std::span<const double> breakpoints,
                          const QuadratureSpec& spec = {}) {
    if (breakpoints.size() < 2)
        throw error(errc::invalid_input, "need at least two breakpoints");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] < breakpoints[i])
            throw error(errc::invalid_input, "breakpoints must be ascending");
        total += integrate(f, breakpoints[i], breakpoints[i + 1], spec);
    }
    return total;
}

} // namespace qlen::oracle
