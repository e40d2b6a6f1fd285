#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace qlen::oracle {

/// Partial sum S(m) = sum_{n=1}^{m} 1/n^2 by direct compensated summation,
/// smallest terms first.  Tail bound: 1/(m+1) < pi^2/6 - S(m) < 1/m.
double partial_zeta2(std::int64_t m);

/// Scans a sorted list of admissible integers for the first sign change of f
/// and returns whichever endpoint of the change has the smaller |f|.
/// A zero of f counts as a sign change.  Throws no_sign_change when
/// f keeps one sign over the whole list.
std::int64_t find_sign_change(const std::function<double(std::int64_t)>& f,
                              std::span<const std::int64_t> admissible);

/// Same over the contiguous range [lo, hi].
std::int64_t find_sign_change(const std::function<double(std::int64_t)>& f,
                              std::int64_t lo, std::int64_t hi);

} // namespace qlen::oracle

namespace qlen::series {

// Production path: exact summation below the crossover, trigamma tail
// expansion above it.  Agrees with oracle::partial_zeta2 to machine
// precision on both sides of the crossover.
double partial_zeta2_fast(std::int64_t m);

} // namespace qlen::series
