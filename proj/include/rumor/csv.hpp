#ifndef RUMOR_CSV_HPP
#define RUMOR_CSV_HPP

#include <string>
#include <vector>

#include "rumor/integrator.hpp"

namespace rumor::csv {

/// Shortest decimal form that parses back to the same double.
std::string format(double v);

/// Fixed 17-significant-digit form (always round-trips).
std::string format17(double v);

/// Trajectory as CSV text: header `t,I,S1,S2,H,R1,R2`, one row per sample,
/// 17 significant digits. `comment` lines (if any) are emitted first, each
/// prefixed with "# ".
std::string trajectory_csv(const Trajectory& traj,
                           const std::vector<std::string>& comment = {});

/// Parse CSV text produced by this module: skips '#' comment lines, checks
/// the expected header, returns one row of doubles per data line.
std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           const std::string& expected_header);

/// Write text to a file, throwing ConfigError on I/O failure.
void write_file(const std::string& path, const std::string& text);

} // namespace rumor::csv

#endif
