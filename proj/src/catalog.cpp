#include "graspsyn/catalog.hpp"

namespace graspsyn {

const std::vector<ObjectSpec>& builtin_catalog() {
    static const std::vector<ObjectSpec> catalog = {
        {"Skillet lid", GraspType::HookGrasp, 220.03},
        {"Apple", GraspType::SphericalGrasp, 158.01},
        {"Large Marker", GraspType::TripodPinch, 12.16},
        {"Plate", GraspType::ExtensionGrip, 453.26},
        {"Chips Can", GraspType::CylindricalGrip, 107.27},
        {"Screwdriver", GraspType::DiagonalVolarGrip, 68.8},
        {"Bowl", GraspType::LateralPinch, 167.67},
        {"Small Marker", GraspType::PulpPinch, 7.67},
        {"Switch", GraspType::IndexPointing, std::nullopt},
        {"Pitcher base", GraspType::HookGrasp, 197.82},
        {"Mini Soccer ball", GraspType::SphericalGrasp, 16.89},
        {"Tuna Can", GraspType::TripodPinch, 132.59},
        {"Craker Box", GraspType::ExtensionGrip, 388.34},
        {"Coffee Can", GraspType::CylindricalGrip, 174.42},
        {"Spatula", GraspType::DiagonalVolarGrip, 19.72},
        {"XS Clamp", GraspType::LateralPinch, 57.12},
        {"Plastic Peer", GraspType::PulpPinch, 11.01},
        {"Plate", GraspType::Platform, 453.26},
        {"Coffee Cup", GraspType::HookGrasp, 303.48},
        {"Softball", GraspType::SphericalGrasp, 59.54},
        {"Table Tennis Ball", GraspType::TripodPinch, 2.74},
        {"Tetra Pack", GraspType::ExtensionGrip, 174.94},
        {"Power Drill", GraspType::CylindricalGrip, 450.07},
        {"Skillet", GraspType::DiagonalVolarGrip, 549.11},
        {"Key", GraspType::LateralPinch, 3.83},
        {"Washer", GraspType::PulpPinch, 2.3},
    };
    return catalog;
}

std::optional<ObjectSpec> find_object(std::string_view name) {
    for (const auto& object : builtin_catalog()) {
        if (object.name == name) return object;
    }
    return std::nullopt;
}

std::optional<ObjectSpec> find_object(std::string_view name, GraspType type) {
    for (const auto& object : builtin_catalog()) {
        if (object.name == name && object.grasp_type == type) return object;
    }
    return std::nullopt;
}

std::vector<ObjectSpec> objects_for_type(GraspType type) {
    std::vector<ObjectSpec> result;
    for (const auto& object : builtin_catalog()) {
        if (object.grasp_type == type) result.push_back(object);
    }
    return result;
}

}  // namespace graspsyn
