#include "graspsyn/trial_csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "graspsyn/errors.hpp"

namespace graspsyn {

namespace {

constexpr std::array<std::string_view, 11> kColumns = {
    "t_s",     "f_thumb", "f_index",  "f_middle", "f_ring", "f_pinky",
    "a_thumb", "a_index", "a_middle", "a_ring",   "a_pinky"};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_value(std::string_view field, const std::string& name,
                   std::size_t row) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(name, row,
                         "malformed numeric value '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

std::string format_record_value(double value) {
    char buffer[40];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                         std::chars_format::general, 9);
    (void)ec;
    return std::string(buffer, ptr);
}

std::string format_exact(double value) {
    char buffer[40];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec;
    return std::string(buffer, ptr);
}

std::string trial_csv_string(const TrialSeries& series) {
    std::ostringstream out;
    out << kTrialCsvHeader << '\n';
    const std::size_t n = series.samples();
    for (std::size_t t = 0; t < n; ++t) {
        out << format_record_value(series.t_s[t]);
        for (const auto& channel : series.force_n) {
            out << ',' << format_record_value(channel[t]);
        }
        for (const auto& channel : series.angle_deg) {
            out << ',' << format_record_value(channel[t]);
        }
        out << '\n';
    }
    return out.str();
}

void write_trial_csv(const std::filesystem::path& path,
                     const TrialSeries& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraspError("cannot open " + path.string() + " for writing");
    }
    out << trial_csv_string(series);
}

TrialSeries parse_trial_csv(std::string_view text, const std::string& name) {
    std::size_t pos = 0;
    std::size_t row = 0;
    auto next_line = [&](std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++row;
        return true;
    };

    std::string_view header;
    if (!next_line(header)) throw ParseError(name, 1, "missing header row");
    const auto names = split_fields(header);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i >= kColumns.size()) {
            throw ParseError(name, 1,
                             "unknown column '" + std::string(names[i]) + "'");
        }
        if (names[i] != kColumns[i]) {
            throw ParseError(name, 1,
                             "unknown column '" + std::string(names[i]) +
                                 "' (expected '" + std::string(kColumns[i]) +
                                 "')");
        }
    }
    if (names.size() < kColumns.size()) {
        throw ParseError(name, 1,
                         "missing column '" +
                             std::string(kColumns[names.size()]) + "'");
    }

    TrialSeries series;
    std::string_view line;
    while (next_line(line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != kColumns.size()) {
            throw ParseError(name, row,
                             "expected 11 fields, got " +
                                 std::to_string(fields.size()));
        }
        const double t = parse_value(fields[0], name, row);
        if (!series.t_s.empty() && !(t > series.t_s.back())) {
            throw ParseError(name, row, "t_s not strictly increasing");
        }
        series.t_s.push_back(t);
        for (int i = 0; i < 5; ++i) {
            series.force_n[i].push_back(parse_value(fields[1 + i], name, row));
        }
        for (int i = 0; i < 5; ++i) {
            series.angle_deg[i].push_back(
                parse_value(fields[6 + i], name, row));
        }
    }
    return series;
}

TrialSeries read_trial_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraspError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_trial_csv(buffer.str(), path.string());
}

}  // namespace graspsyn
