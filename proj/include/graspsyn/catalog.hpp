#pragma once

#include <optional>
#include <vector>

#include "graspsyn/types.hpp"

namespace graspsyn {

// The acquisition protocol's object set: 26 entries covering 25 distinct
// household objects ("Plate" is used both for ExtensionGrip and Platform).
// Masses are grams; the Switch is wall-mounted and carries no mass.
const std::vector<ObjectSpec>& builtin_catalog();

// First catalog entry with this name, if any.
std::optional<ObjectSpec> find_object(std::string_view name);

// Catalog entry matching both name and grasp type.
std::optional<ObjectSpec> find_object(std::string_view name, GraspType type);

// All catalog entries exercised with the given grasp type.
std::vector<ObjectSpec> objects_for_type(GraspType type);

}  // namespace graspsyn
