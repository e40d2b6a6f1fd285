#include "qlen/errors.hpp"

namespace qlen {

const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::unnormalized_density:      return "unnormalized_density";
        case errc::invalid_index:             return "invalid_index";
        case errc::invalid_input:             return "invalid_input";
        case errc::negative_radicand:         return "negative_radicand";
        case errc::overlapping_segments:      return "overlapping_segments";
        case errc::odd_electron_count:        return "odd_electron_count";
        case errc::empty_filling:             return "empty_filling";
        case errc::indivisible_segmentation:  return "indivisible_segmentation";
        case errc::no_convergence:            return "no_convergence";
        case errc::excessive_overlap:         return "excessive_overlap";
        case errc::empty_subsystem:           return "empty_subsystem";
        case errc::duplicate_fermion_level:   return "duplicate_fermion_level";
        case errc::max_subdivisions_exceeded: return "max_subdivisions_exceeded";
        case errc::no_sign_change:            return "no_sign_change";
    }
    return "unknown";
}

} // namespace qlen
