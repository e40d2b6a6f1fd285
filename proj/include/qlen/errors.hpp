#pragma once

#include <stdexcept>
#include <string>

namespace qlen {

enum class errc {
    unnormalized_density,
    invalid_index,
    invalid_input,
    negative_radicand,
    overlapping_segments,
    odd_electron_count,
    empty_filling,
    indivisible_segmentation,
    no_convergence,
    excessive_overlap,
    empty_subsystem,
    duplicate_fermion_level,
    max_subdivisions_exceeded,
    no_sign_change,
};

/// Stable machine-readable identifier, e.g. "unnormalized_density".
const char* to_string(errc code) noexcept;

/// All computation failures carry an errc so callers (and the CLI error
/// stream) can dispatch without parsing messages.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_str() const noexcept { return to_string(code_); }

private:
    errc code_;
};

} // namespace qlen
