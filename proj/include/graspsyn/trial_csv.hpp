#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graspsyn/types.hpp"

namespace graspsyn {

inline constexpr std::string_view kTrialCsvHeader =
    "t_s,f_thumb,f_index,f_middle,f_ring,f_pinky,"
    "a_thumb,a_index,a_middle,a_ring,a_pinky";

// Locale-independent "%.9g" rendering used for all CSV records.
std::string format_record_value(double value);

// Shortest representation that parses back to the same double.
std::string format_exact(double value);

std::string trial_csv_string(const TrialSeries& series);
void write_trial_csv(const std::filesystem::path& path,
                     const TrialSeries& series);

// Parses a trial recording. Throws ParseError (with 1-based row numbers,
// row 1 being the header) for unknown or missing columns, malformed
// values, wrong field counts or a non-monotone time base.
TrialSeries read_trial_csv(const std::filesystem::path& path);
TrialSeries parse_trial_csv(std::string_view text, const std::string& name);

}  // namespace graspsyn
