#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graspsyn/force_mass.hpp"
#include "graspsyn/radar.hpp"
#include "graspsyn/tsne.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

std::string xml_escape(std::string_view text);

// Fixed-point decimal with trailing zeros trimmed; locale-independent.
std::string svg_number(double value, int decimals = 2);

// Minimal SVG assembly: elements append to the body, str() closes the
// document. Coordinates follow the SVG convention (y grows downward).
class SvgDocument {
public:
    SvgDocument(double width, double height);

    void line(double x1, double y1, double x2, double y2,
              std::string_view stroke, double stroke_width = 1.0);
    void polyline(std::span<const std::pair<double, double>> points,
                  std::string_view stroke, double stroke_width = 1.5);
    void polygon(std::span<const std::pair<double, double>> points,
                 std::string_view stroke, std::string_view fill,
                 double fill_opacity, double stroke_width = 1.5);
    void circle(double cx, double cy, double r, std::string_view fill);
    void text(double x, double y, std::string_view content, double size,
              std::string_view anchor = "start",
              std::string_view fill = "#333333");

    std::string str() const;

private:
    double width_;
    double height_;
    std::string body_;
};

// Stable color per grasp type across every chart.
std::string_view grasp_type_color(GraspType type);

// Overlaid radar plot of one domain's per-type profiles (5 spokes for
// forces, 15 for postures). Spoke labels come from the profiles.
std::string radar_chart_svg(const std::map<GraspType, RadarProfile>& profiles,
                            std::string_view title);

// Scree plot: per-component explained-variance bars, the cumulative
// curve, and a marker on the selected elbow (1-based).
std::string scree_chart_svg(std::span<const double> explained,
                            std::size_t elbow, std::string_view title);

// 2-D embedding scatter colored by grasp type; labels align with rows.
std::string scatter_chart_svg(const Embedding& embedding,
                              std::span<const GraspType> labels,
                              std::string_view title);

// Force-vs-mass interpolation polylines, one per model.
std::string force_mass_chart_svg(std::span<const ForceMassModel> models,
                                 std::string_view title);

}  // namespace graspsyn
