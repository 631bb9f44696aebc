#pragma once

#include "hhgq/grids.hpp"
#include "hhgq/qoptics.hpp"
#include "hhgq/sbe.hpp"
#include "hhgq/spectrum.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace hhgq {

// CSV renderers. All numeric cells go through the same fixed "%.12e"
// format so identical data produces identical bytes, run to run and
// thread count to thread count.

std::string spectrum_csv(const SpectrumTrace& spec);
std::string current_csv(const CurrentTrace& trace, const TimeGrid& grid);
std::string wigner_csv(const WignerMap& map);
std::string displacements_csv(const ModeDisplacements& disp);
std::string trajectory_csv(const SBETrajectory& traj, const TimeGrid& grid);

/// Generic scan table: one labelled axis column plus named value columns.
std::string scan_csv(const std::string& axis_name, const std::vector<std::string>& value_names,
                     const std::vector<double>& axis,
                     const std::vector<std::vector<double>>& values);

/// Write text to path, creating parent directories; throws IoError.
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

} // namespace hhgq
