#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace liepoisson::cli {

/// Runs the command line (without the program name); returns 0 pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a+bi", "a", "bi", "-i", ...; throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& s);
/// Comma-separated list of complex literals; empty string gives an empty list.
std::vector<std::complex<double>> parse_complex_list(const std::string& s);

} // namespace liepoisson::cli
