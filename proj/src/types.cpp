#include "graspsyn/types.hpp"

#include <cmath>
#include <stdexcept>

namespace graspsyn {

namespace {

constexpr std::array<std::string_view, 5> kFingerNames = {
    "thumb", "index", "middle", "ring", "pinky"};

struct GraspTypeName {
    GraspType type;
    std::string_view name;
    std::string_view abbrev;
};

constexpr std::array<GraspTypeName, 10> kGraspTypeNames = {{
    {GraspType::PulpPinch, "PulpPinch", "PP"},
    {GraspType::LateralPinch, "LateralPinch", "LP"},
    {GraspType::DiagonalVolarGrip, "DiagonalVolarGrip", "DVG"},
    {GraspType::CylindricalGrip, "CylindricalGrip", "CG"},
    {GraspType::ExtensionGrip, "ExtensionGrip", "EG"},
    {GraspType::TripodPinch, "TripodPinch", "TP"},
    {GraspType::SphericalGrasp, "SphericalGrasp", "SG"},
    {GraspType::HookGrasp, "HookGrasp", "H"},
    {GraspType::Platform, "Platform", "Platform"},
    {GraspType::IndexPointing, "IndexPointing", "IP"},
}};

}  // namespace

std::string_view to_string(FingerId finger) {
    return kFingerNames[static_cast<int>(finger)];
}

FingerId finger_from_string(std::string_view name) {
    for (FingerId f : kFingers) {
        if (kFingerNames[static_cast<int>(f)] == name) return f;
    }
    throw std::invalid_argument("unknown finger name: " + std::string(name));
}

std::string_view to_string(GraspType type) {
    return kGraspTypeNames[static_cast<int>(type)].name;
}

std::string_view abbreviation(GraspType type) {
    return kGraspTypeNames[static_cast<int>(type)].abbrev;
}

GraspType grasp_type_from_string(std::string_view name) {
    for (const auto& entry : kGraspTypeNames) {
        if (entry.name == name || entry.abbrev == name) return entry.type;
    }
    throw std::invalid_argument("unknown grasp type: " + std::string(name));
}

bool is_graspable(GraspType type) {
    return type != GraspType::Platform && type != GraspType::IndexPointing;
}

bool is_power_grasp(GraspType type) {
    switch (type) {
        case GraspType::SphericalGrasp:
        case GraspType::CylindricalGrip:
        case GraspType::ExtensionGrip:
        case GraspType::HookGrasp:
            return true;
        default:
            return false;
    }
}

bool is_precision_grasp(GraspType type) {
    switch (type) {
        case GraspType::TripodPinch:
        case GraspType::LateralPinch:
        case GraspType::PulpPinch:
        case GraspType::DiagonalVolarGrip:
            return true;
        default:
            return false;
    }
}

std::size_t TrialMeta::expected_samples() const {
    return static_cast<std::size_t>(std::llround(scan_rate_hz * duration_s));
}

std::string trial_label(const TrialMeta& meta) {
    return meta.subject_id + " " + meta.object.name + " (" +
           std::string(abbreviation(meta.object.grasp_type)) + ") t" +
           std::to_string(meta.trial_index);
}

}  // namespace graspsyn
