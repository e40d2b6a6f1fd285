#pragma once

#include <doctest.h>

#include "qlen/errors.hpp"

// High-precision reference values, frozen after computing them with the
// quadrature and series oracles (30-digit arithmetic cross-check).
namespace ref {

inline constexpr double box_m2_n1 = 0.282672741512164448;      // <1|x^2|1>, a=1
inline constexpr double box_m2_n2 = 0.320668185378041112;      // <2|x^2|2>, a=1
inline constexpr double box_m2_n3_a2 = 1.31081751474614716;    // <3|x^2|3>, a=2
inline constexpr double box_m3_n1 = 0.174009112268246671;      // <1|x^3|1>, a=1
inline constexpr double box_m4_n1 = 0.114077789739688731;      // <1|x^4|1>, a=1
inline constexpr double l2_box_n1 = 0.626157247140024222;      // sqrt(1 - 6/pi^2)
inline constexpr double l2_box_n3 = 0.965635823816847365;
inline constexpr double l2_box_n4 = 0.980818309440705402;
inline constexpr double l4_box_n1 = 0.673286475780482964;
inline constexpr double fermion_len_n10 = 0.906667650132160662;
inline constexpr double fermion_len_n100_width50 = 49.5035543002324995;
inline constexpr double boson_len_w2p5 = 1.56539311785006055;
inline constexpr double zeta2_partial_5 = 1.46361111111111111;
inline constexpr double zeta2_partial_50 = 1.62513273362152931;
inline constexpr double zeta2_limit = 1.64493406684822644;     // pi^2/6
inline constexpr double spread_levels_12 = 0.0516704634451027798;
inline constexpr double spread_levels_123 = 0.0603484351922474500;
inline constexpr double spread_boson_11 = 0.0326727415121644476;
inline constexpr double l1_alternate = 0.531669767348270845;   // sqrt(1/3 - 1/(2 pi^2))
inline constexpr double deficit_ratio_n5 = 1.66646243656073150;
inline constexpr double deficit_ratio_n10 = 1.66665449979778692;
inline constexpr double deficit_ratio_n20 = 1.66666591516460090;

} // namespace ref

#define CHECK_QLEN_ERROR(expr, expected_code)                                                  \
    do {                                                                                       \
        bool caught_ = false;                                                                  \
        try {                                                                                  \
            (void)(expr);                                                                      \
        } catch (const qlen::error& e_) {                                                      \
            caught_ = true;                                                                    \
            CHECK(e_.code() == (expected_code));                                               \
        }                                                                                      \
        CHECK_MESSAGE(caught_, #expr " did not throw");                                        \
    } while (0)
