#include "graspsyn/radar.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace graspsyn {

namespace {

constexpr double kDegToRad = 3.141592653589793238462643383279502884 / 180.0;

std::string joint_label(FingerId finger, int joint) {
    static constexpr std::array<const char*, 3> kJoint{"MCP", "PIP", "DIP"};
    std::string label(to_string(finger));
    label += ' ';
    label += finger == FingerId::Thumb && joint == 1 ? "IP" : kJoint[joint];
    return label;
}

}  // namespace

RadarProfiles radar_profiles(const HoldExtraction& extraction) {
    RadarProfiles out;
    out.warnings = extraction.warnings;

    struct Sums {
        std::array<double, 15> posture{};
        std::array<double, 5> force{};
        int trials = 0;
    };
    std::map<GraspType, Sums> sums;
    for (const TrialHold& hold : extraction.trials) {
        Sums& s = sums[hold.meta.object.grasp_type];
        ++s.trials;
        for (FingerId f : kFingers) {
            const int i = static_cast<int>(f);
            const JointAngles& joints = hold.features.mean_posture[f];
            s.posture[3 * i + 0] += joints.mcp_deg;
            s.posture[3 * i + 1] += joints.pip_deg;
            s.posture[3 * i + 2] += joints.dip_deg;
            s.force[i] += hold.features.mean_force_n[i];
        }
    }

    for (const auto& [type, s] : sums) {
        const double n = static_cast<double>(s.trials);
        RadarProfile posture{type, {}};
        posture.spokes.reserve(15);
        for (FingerId f : kFingers) {
            const int i = static_cast<int>(f);
            for (int joint = 0; joint < 3; ++joint) {
                posture.spokes.push_back(
                    {joint_label(f, joint), s.posture[3 * i + joint] / n});
            }
        }
        out.posture.emplace(type, std::move(posture));

        RadarProfile force{type, {}};
        force.spokes.reserve(5);
        for (FingerId f : kFingers) {
            force.spokes.push_back(
                {std::string(to_string(f)), s.force[static_cast<int>(f)] / n});
        }
        out.force.emplace(type, std::move(force));
    }

    for (GraspType type : kAllGraspTypes) {
        bool present = false;
        for (const TrialHold& hold : extraction.trials) {
            if (hold.meta.object.grasp_type == type) {
                present = true;
                break;
            }
        }
        bool attempted = false;
        for (const std::string& warning : extraction.warnings) {
            if (warning.find(std::string("(") +
                             std::string(abbreviation(type)) + ")") !=
                std::string::npos) {
                attempted = true;
                break;
            }
        }
        if (!present && attempted) {
            out.warnings.push_back(std::string(to_string(type)) +
                                   ": no usable trials, omitted");
        }
    }
    return out;
}

RadarProfiles radar_profiles(std::span<const GraspTrial> trials,
                             const SegmentationConfig& config) {
    return radar_profiles(extract_hold_features(trials, config));
}

RadarProfiles radar_profiles(const Dataset& dataset,
                             const SegmentationConfig& config) {
    return radar_profiles(extract_hold_features(dataset, config));
}

double radar_area(const RadarProfile& profile) {
    if (profile.spokes.size() != 5) {
        throw std::invalid_argument(
            "radar_area needs exactly 5 spokes, got " +
            std::to_string(profile.spokes.size()));
    }
    const double sin72 = std::sin(72.0 * kDegToRad);
    double area = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        area += profile.spokes[i].radius * profile.spokes[(i + 1) % 5].radius;
    }
    return 0.5 * sin72 * area;
}

}  // namespace graspsyn
