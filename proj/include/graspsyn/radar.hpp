#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "graspsyn/dataset.hpp"
#include "graspsyn/features.hpp"
#include "graspsyn/segmentation.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

struct RadarSpoke {
    std::string label;
    double radius = 0.0;
};

struct RadarProfile {
    GraspType grasp_type = GraspType::PulpPinch;
    std::vector<RadarSpoke> spokes;
};

// Per grasp type: posture profiles carry 15 spokes (MCP, PIP, DIP per
// finger; the thumb's PIP slot is its IP joint and its DIP spoke is 0),
// force profiles carry the 5 mean fingertip forces. Values are means of
// the per-trial hold-phase summaries across all usable trials of the
// type; a type with zero usable trials is omitted with a warning.
struct RadarProfiles {
    std::map<GraspType, RadarProfile> posture;
    std::map<GraspType, RadarProfile> force;
    std::vector<std::string> warnings;
};

RadarProfiles radar_profiles(std::span<const GraspTrial> trials,
                             const SegmentationConfig& config = {});
RadarProfiles radar_profiles(const Dataset& dataset,
                             const SegmentationConfig& config = {});
// Aggregation of already-extracted hold summaries.
RadarProfiles radar_profiles(const HoldExtraction& extraction);

// Pentagon area of a 5-spoke profile with spokes at equal 72 deg
// spacing: (1/2) * sum_i r_i * r_{i+1} * sin(72 deg), indices cyclic.
// Any other spoke count is invalid.
double radar_area(const RadarProfile& profile);

}  // namespace graspsyn
