#include "graspsyn/calibration_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "graspsyn/errors.hpp"
#include "graspsyn/trial_csv.hpp"

namespace graspsyn {

namespace {

struct Line {
    std::string key;
    std::string value;
    std::size_t row = 0;
};

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string_view::npos) return {};
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& value, const std::string& name,
                    std::size_t row) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(name, row, "malformed numeric value '" + value + "'");
    }
    return out;
}

}  // namespace

std::string calibration_file_string(const GloveCalibration& cal) {
    std::ostringstream out;
    out << "# glove calibration\n";
    out << "version = 1\n";
    out << "divider.v_cc_v = " << format_exact(cal.divider.v_cc_v) << '\n';
    out << "divider.r_pulldown_ohm = "
        << format_exact(cal.divider.r_pulldown_ohm) << '\n';
    for (FingerId f : kFingers) {
        const auto& flex = cal.flex[static_cast<int>(f)];
        const std::string prefix = "flex." + std::string(to_string(f));
        out << prefix << ".r_flat_ohm = " << format_exact(flex.r_flat_ohm)
            << '\n';
        out << prefix << ".r_full_ohm = " << format_exact(flex.r_full_ohm)
            << '\n';
        out << prefix << ".full_angle_deg = "
            << format_exact(flex.full_angle_deg) << '\n';
    }
    for (FingerId f : kFingers) {
        const auto& force = cal.force[static_cast<int>(f)];
        const std::string prefix = "force." + std::string(to_string(f));
        for (std::size_t k = 0; k < force.knots.size(); ++k) {
            out << prefix << ".knot." << k << " = "
                << format_exact(force.knots[k].capacitance_f) << ' '
                << format_exact(force.knots[k].force_n) << '\n';
        }
    }
    return out.str();
}

void write_calibration_file(const std::filesystem::path& path,
                            const GloveCalibration& cal) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraspError("cannot open " + path.string() + " for writing");
    }
    out << calibration_file_string(cal);
}

GloveCalibration parse_calibration_file(std::string_view text,
                                        const std::string& name) {
    std::map<std::string, Line> entries;
    std::size_t row = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++row;
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(name, row, "expected 'key = value'");
        }
        Line entry{trim(std::string_view(line).substr(0, eq)),
                   trim(std::string_view(line).substr(eq + 1)), row};
        if (entry.key.empty()) throw ParseError(name, row, "empty key");
        if (entries.count(entry.key)) {
            throw ParseError(name, row, "duplicate key '" + entry.key + "'");
        }
        entries.emplace(entry.key, std::move(entry));
    }

    auto take = [&](const std::string& key) -> Line {
        auto it = entries.find(key);
        if (it == entries.end()) {
            throw ParseError(name, 0, "missing key '" + key + "'");
        }
        Line line = it->second;
        entries.erase(it);
        return line;
    };
    auto take_double = [&](const std::string& key) {
        const Line line = take(key);
        return parse_double(line.value, name, line.row);
    };

    const Line version = take("version");
    if (version.value != "1") {
        throw ParseError(name, version.row,
                         "unsupported version '" + version.value + "'");
    }

    GloveCalibration cal;
    cal.divider.v_cc_v = take_double("divider.v_cc_v");
    cal.divider.r_pulldown_ohm = take_double("divider.r_pulldown_ohm");
    for (FingerId f : kFingers) {
        auto& flex = cal.flex[static_cast<int>(f)];
        const std::string prefix = "flex." + std::string(to_string(f));
        flex.r_flat_ohm = take_double(prefix + ".r_flat_ohm");
        flex.r_full_ohm = take_double(prefix + ".r_full_ohm");
        flex.full_angle_deg = take_double(prefix + ".full_angle_deg");
    }
    for (FingerId f : kFingers) {
        const std::string prefix = "force." + std::string(to_string(f));
        std::vector<CalibrationSample> knots;
        for (std::size_t k = 0;; ++k) {
            auto it = entries.find(prefix + ".knot." + std::to_string(k));
            if (it == entries.end()) break;
            const Line line = it->second;
            entries.erase(it);
            std::istringstream fields(line.value);
            std::string c_str, f_str, extra;
            if (!(fields >> c_str >> f_str) || (fields >> extra)) {
                throw ParseError(name, line.row,
                                 "expected '<capacitance> <force>'");
            }
            knots.push_back({parse_double(c_str, name, line.row),
                             parse_double(f_str, name, line.row)});
        }
        cal.force[static_cast<int>(f)] = fit_force_calibration(std::move(knots));
    }
    if (!entries.empty()) {
        const Line& leftover = entries.begin()->second;
        throw ParseError(name, leftover.row,
                         "unknown key '" + leftover.key + "'");
    }
    return cal;
}

GloveCalibration read_calibration_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraspError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_calibration_file(buffer.str(), path.string());
}

}  // namespace graspsyn
