#include "graspsyn/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace graspsyn {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void append_attr(std::string& out, std::string_view name,
                 std::string_view value) {
    out += ' ';
    out += name;
    out += "=\"";
    out += value;
    out += '"';
}

void append_attr(std::string& out, std::string_view name, double value) {
    append_attr(out, name, svg_number(value));
}

}  // namespace

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string svg_number(double value, int decimals) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
    // Avoid "-0.00".
    if (value == 0.0) value = 0.0;
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                   std::chars_format::fixed, decimals);
    if (ec != std::errc()) throw std::invalid_argument("value out of range");
    std::string out(buffer, end);
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    if (out == "-0") out = "0";
    return out;
}

SvgDocument::SvgDocument(double width, double height)
    : width_(width), height_(height) {}

void SvgDocument::line(double x1, double y1, double x2, double y2,
                       std::string_view stroke, double stroke_width) {
    body_ += "  <line";
    append_attr(body_, "x1", x1);
    append_attr(body_, "y1", y1);
    append_attr(body_, "x2", x2);
    append_attr(body_, "y2", y2);
    append_attr(body_, "stroke", stroke);
    append_attr(body_, "stroke-width", stroke_width);
    body_ += "/>\n";
}

namespace {

std::string points_attr(std::span<const std::pair<double, double>> points) {
    std::string out;
    for (const auto& [x, y] : points) {
        if (!out.empty()) out += ' ';
        out += svg_number(x);
        out += ',';
        out += svg_number(y);
    }
    return out;
}

}  // namespace

void SvgDocument::polyline(std::span<const std::pair<double, double>> points,
                           std::string_view stroke, double stroke_width) {
    body_ += "  <polyline";
    append_attr(body_, "points", points_attr(points));
    append_attr(body_, "fill", "none");
    append_attr(body_, "stroke", stroke);
    append_attr(body_, "stroke-width", stroke_width);
    body_ += "/>\n";
}

void SvgDocument::polygon(std::span<const std::pair<double, double>> points,
                          std::string_view stroke, std::string_view fill,
                          double fill_opacity, double stroke_width) {
    body_ += "  <polygon";
    append_attr(body_, "points", points_attr(points));
    append_attr(body_, "fill", fill);
    append_attr(body_, "fill-opacity", fill_opacity);
    append_attr(body_, "stroke", stroke);
    append_attr(body_, "stroke-width", stroke_width);
    body_ += "/>\n";
}

void SvgDocument::circle(double cx, double cy, double r,
                         std::string_view fill) {
    body_ += "  <circle";
    append_attr(body_, "cx", cx);
    append_attr(body_, "cy", cy);
    append_attr(body_, "r", r);
    append_attr(body_, "fill", fill);
    body_ += "/>\n";
}

void SvgDocument::text(double x, double y, std::string_view content,
                       double size, std::string_view anchor,
                       std::string_view fill) {
    body_ += "  <text";
    append_attr(body_, "x", x);
    append_attr(body_, "y", y);
    append_attr(body_, "font-size", size);
    append_attr(body_, "font-family", "sans-serif");
    append_attr(body_, "text-anchor", anchor);
    append_attr(body_, "fill", fill);
    body_ += '>';
    body_ += xml_escape(content);
    body_ += "</text>\n";
}

std::string SvgDocument::str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\"";
    append_attr(out, "width", width_);
    append_attr(out, "height", height_);
    append_attr(out, "viewBox",
                "0 0 " + svg_number(width_) + " " + svg_number(height_));
    out += ">\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

std::string_view grasp_type_color(GraspType type) {
    switch (type) {
        case GraspType::PulpPinch: return "#1f77b4";
        case GraspType::LateralPinch: return "#ff7f0e";
        case GraspType::DiagonalVolarGrip: return "#2ca02c";
        case GraspType::CylindricalGrip: return "#d62728";
        case GraspType::ExtensionGrip: return "#9467bd";
        case GraspType::TripodPinch: return "#8c564b";
        case GraspType::SphericalGrasp: return "#e377c2";
        case GraspType::HookGrasp: return "#7f7f7f";
        case GraspType::Platform: return "#bcbd22";
        case GraspType::IndexPointing: return "#17becf";
    }
    return "#000000";
}

namespace {

struct RadarLayout {
    double cx = 300.0;
    double cy = 320.0;
    double radius = 220.0;
};

std::pair<double, double> spoke_point(const RadarLayout& layout, double angle,
                                      double r01) {
    return {layout.cx + layout.radius * r01 * std::sin(angle),
            layout.cy - layout.radius * r01 * std::cos(angle)};
}

void draw_legend(SvgDocument& svg, double x, double y,
                 const std::vector<GraspType>& types) {
    for (std::size_t i = 0; i < types.size(); ++i) {
        const double row_y = y + 22.0 * static_cast<double>(i);
        svg.line(x, row_y - 4.0, x + 18.0, row_y - 4.0,
                 grasp_type_color(types[i]), 3.0);
        svg.text(x + 26.0, row_y, to_string(types[i]), 13.0);
    }
}

}  // namespace

std::string radar_chart_svg(const std::map<GraspType, RadarProfile>& profiles,
                            std::string_view title) {
    SvgDocument svg(840, 640);
    svg.text(20, 30, title, 18.0, "start", "#111111");
    if (profiles.empty()) {
        svg.text(20, 60, "no profiles", 14.0);
        return svg.str();
    }

    const std::size_t spokes = profiles.begin()->second.spokes.size();
    for (const auto& [type, profile] : profiles) {
        if (profile.spokes.size() != spokes) {
            throw std::invalid_argument("profiles have mixed spoke counts");
        }
    }

    double max_radius = 0.0;
    for (const auto& [type, profile] : profiles) {
        for (const RadarSpoke& spoke : profile.spokes) {
            max_radius = std::max(max_radius, spoke.radius);
        }
    }
    if (max_radius <= 0.0) max_radius = 1.0;

    const RadarLayout layout;
    // Grid rings at 25/50/75/100%.
    for (int ring = 1; ring <= 4; ++ring) {
        const double r01 = 0.25 * ring;
        std::vector<std::pair<double, double>> pts;
        pts.reserve(spokes);
        for (std::size_t s = 0; s < spokes; ++s) {
            const double angle =
                2.0 * kPi * static_cast<double>(s) / static_cast<double>(spokes);
            pts.push_back(spoke_point(layout, angle, r01));
        }
        svg.polygon(pts, "#cccccc", "none", 0.0, 0.7);
    }

    const RadarProfile& first = profiles.begin()->second;
    for (std::size_t s = 0; s < spokes; ++s) {
        const double angle =
            2.0 * kPi * static_cast<double>(s) / static_cast<double>(spokes);
        const auto [ex, ey] = spoke_point(layout, angle, 1.0);
        svg.line(layout.cx, layout.cy, ex, ey, "#cccccc", 0.7);
        const auto [lx, ly] = spoke_point(layout, angle, 1.09);
        svg.text(lx, ly, first.spokes[s].label, 11.0, "middle");
    }
    svg.text(layout.cx + 6.0, layout.cy - layout.radius - 6.0,
             "full scale = " + svg_number(max_radius), 11.0);

    std::vector<GraspType> legend;
    for (const auto& [type, profile] : profiles) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(spokes);
        for (std::size_t s = 0; s < spokes; ++s) {
            const double angle =
                2.0 * kPi * static_cast<double>(s) / static_cast<double>(spokes);
            pts.push_back(spoke_point(layout, angle,
                                      profile.spokes[s].radius / max_radius));
        }
        svg.polygon(pts, grasp_type_color(type), grasp_type_color(type), 0.08,
                    1.8);
        legend.push_back(type);
    }
    draw_legend(svg, 640.0, 80.0, legend);
    return svg.str();
}

std::string scree_chart_svg(std::span<const double> explained,
                            std::size_t elbow, std::string_view title) {
    SvgDocument svg(720, 480);
    svg.text(20, 30, title, 18.0, "start", "#111111");
    const std::size_t d = explained.size();
    if (d == 0) {
        svg.text(20, 60, "no components", 14.0);
        return svg.str();
    }

    const double left = 70.0, right = 680.0, top = 60.0, bottom = 420.0;
    const double slot = (right - left) / static_cast<double>(d);

    // Axes and 0/50/100% gridlines.
    svg.line(left, top, left, bottom, "#444444", 1.0);
    svg.line(left, bottom, right, bottom, "#444444", 1.0);
    for (int pct = 0; pct <= 100; pct += 25) {
        const double y = bottom - (bottom - top) * pct / 100.0;
        svg.line(left - 4.0, y, left, y, "#444444", 1.0);
        svg.text(left - 8.0, y + 4.0, svg_number(pct) + "%", 11.0, "end");
        if (pct > 0) svg.line(left, y, right, y, "#eeeeee", 0.7);
    }

    double cumulative = 0.0;
    std::vector<std::pair<double, double>> curve;
    curve.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double x = left + slot * (static_cast<double>(k) + 0.5);
        const double bar_h = (bottom - top) * explained[k];
        svg.polygon(
            std::array<std::pair<double, double>, 4>{
                {{x - slot * 0.3, bottom},
                 {x - slot * 0.3, bottom - bar_h},
                 {x + slot * 0.3, bottom - bar_h},
                 {x + slot * 0.3, bottom}}},
            "#1f77b4", "#1f77b4", 0.5, 1.0);
        cumulative += explained[k];
        curve.emplace_back(x, bottom - (bottom - top) * cumulative);
        svg.text(x, bottom + 16.0, "PC" + std::to_string(k + 1), 11.0,
                 "middle");
    }
    svg.polyline(curve, "#d62728", 2.0);
    for (const auto& [x, y] : curve) svg.circle(x, y, 3.0, "#d62728");

    if (elbow >= 1 && elbow <= d) {
        const auto& [ex, ey] = curve[elbow - 1];
        svg.circle(ex, ey, 7.0, "none");
        svg.line(ex, top, ex, bottom, "#2ca02c", 1.2);
        svg.text(ex + 6.0, top + 14.0, "elbow k=" + std::to_string(elbow),
                 12.0, "start", "#2ca02c");
    }
    return svg.str();
}

std::string scatter_chart_svg(const Embedding& embedding,
                              std::span<const GraspType> labels,
                              std::string_view title) {
    if (static_cast<std::size_t>(embedding.points.rows()) != labels.size()) {
        throw std::invalid_argument("one label per embedded point required");
    }
    SvgDocument svg(760, 560);
    svg.text(20, 30, title, 18.0, "start", "#111111");

    const double left = 50.0, right = 560.0, top = 60.0, bottom = 520.0;
    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    if (embedding.points.rows() > 0) {
        min_x = embedding.points.col(0).minCoeff();
        max_x = embedding.points.col(0).maxCoeff();
        min_y = embedding.points.col(1).minCoeff();
        max_y = embedding.points.col(1).maxCoeff();
    }
    const double span_x = std::max(max_x - min_x, 1e-12);
    const double span_y = std::max(max_y - min_y, 1e-12);

    svg.line(left, top, left, bottom, "#444444", 1.0);
    svg.line(left, bottom, right, bottom, "#444444", 1.0);

    std::vector<GraspType> legend;
    for (Eigen::Index i = 0; i < embedding.points.rows(); ++i) {
        const double x =
            left + (right - left) * (embedding.points(i, 0) - min_x) / span_x;
        const double y = bottom -
                         (bottom - top) * (embedding.points(i, 1) - min_y) /
                             span_y;
        const GraspType type = labels[static_cast<std::size_t>(i)];
        svg.circle(x, y, 4.0, std::string(grasp_type_color(type)));
        if (std::find(legend.begin(), legend.end(), type) == legend.end()) {
            legend.push_back(type);
        }
    }
    draw_legend(svg, 590.0, 80.0, legend);
    svg.text(20, 550, "KL divergence " + svg_number(embedding.final_kl, 4),
             12.0);
    return svg.str();
}

std::string force_mass_chart_svg(std::span<const ForceMassModel> models,
                                 std::string_view title) {
    SvgDocument svg(760, 520);
    svg.text(20, 30, title, 18.0, "start", "#111111");
    if (models.empty()) {
        svg.text(20, 60, "no models", 14.0);
        return svg.str();
    }

    double min_mass = models.front().samples.front().mass_g;
    double max_mass = min_mass;
    double max_force = 0.0;
    for (const ForceMassModel& model : models) {
        for (const ForceMassPoint& point : model.samples) {
            min_mass = std::min(min_mass, point.mass_g);
            max_mass = std::max(max_mass, point.mass_g);
            max_force = std::max(max_force, point.mean_force_n);
        }
    }
    const double mass_span = std::max(max_mass - min_mass, 1e-12);
    if (max_force <= 0.0) max_force = 1.0;

    const double left = 70.0, right = 560.0, top = 60.0, bottom = 440.0;
    svg.line(left, top, left, bottom, "#444444", 1.0);
    svg.line(left, bottom, right, bottom, "#444444", 1.0);
    svg.text((left + right) / 2.0, bottom + 36.0, "object mass (g)", 12.0,
             "middle");
    svg.text(20.0, top - 10.0, "mean hold force (N)", 12.0);
    for (int tick = 0; tick <= 4; ++tick) {
        const double frac = tick / 4.0;
        const double x = left + (right - left) * frac;
        const double y = bottom - (bottom - top) * frac;
        svg.line(x, bottom, x, bottom + 4.0, "#444444", 1.0);
        svg.text(x, bottom + 18.0, svg_number(min_mass + mass_span * frac, 0),
                 11.0, "middle");
        svg.line(left - 4.0, y, left, y, "#444444", 1.0);
        svg.text(left - 8.0, y + 4.0, svg_number(max_force * frac, 1), 11.0,
                 "end");
    }

    std::vector<GraspType> legend;
    for (const ForceMassModel& model : models) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(model.samples.size());
        for (const ForceMassPoint& point : model.samples) {
            const double x =
                left + (right - left) * (point.mass_g - min_mass) / mass_span;
            const double y =
                bottom - (bottom - top) * point.mean_force_n / max_force;
            pts.emplace_back(x, y);
        }
        const std::string_view color = grasp_type_color(model.grasp_type);
        svg.polyline(pts, color, 1.8);
        for (const auto& [x, y] : pts) svg.circle(x, y, 3.5, color);
        legend.push_back(model.grasp_type);
    }
    draw_legend(svg, 590.0, 80.0, legend);
    return svg.str();
}

}  // namespace graspsyn
