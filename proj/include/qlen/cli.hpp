#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlen::cli {

/// Runs one command.  args excludes the program name.
/// Exit codes: 0 success, 1 computation error (machine-readable code on
/// `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Natural-to-SI scale for a length power (lattice constant in meters).
double si_length_scale(double a0_meters, int power);

/// Joules per natural energy unit hbar^2/(m_e a0^2) resp. h^2/(m_e a0^2).
double si_energy_scale_hbar(double a0_meters);
double si_energy_scale_h(double a0_meters);

} // namespace qlen::cli
