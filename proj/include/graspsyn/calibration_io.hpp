#pragma once

#include <filesystem>
#include <string>

#include "graspsyn/sensors.hpp"

namespace graspsyn {

// Key-value calibration file ("key = value" lines, '#' comments).
// Round-trips exactly: values are written with shortest-exact formatting.
std::string calibration_file_string(const GloveCalibration& cal);
void write_calibration_file(const std::filesystem::path& path,
                            const GloveCalibration& cal);

// Throws ParseError for unknown keys, duplicates, malformed values or
// missing entries; CalibrationError for invalid force knots.
GloveCalibration read_calibration_file(const std::filesystem::path& path);
GloveCalibration parse_calibration_file(std::string_view text,
                                        const std::string& name);

}  // namespace graspsyn
