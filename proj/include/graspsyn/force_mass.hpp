#pragma once

#include <span>
#include <vector>

#include "graspsyn/dataset.hpp"
#include "graspsyn/features.hpp"
#include "graspsyn/segmentation.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

struct ForceMassPoint {
    double mass_g = 0.0;
    double mean_force_n = 0.0;  // mean hold-phase total force
    int trials = 0;
};

struct ForceMassModel {
    GraspType grasp_type = GraspType::PulpPinch;
    std::vector<ForceMassPoint> samples;  // masses strictly increasing
};

struct ForceMassEval {
    double force_n = 0.0;
    bool extrapolated = false;
};

// Groups the type's usable trials by object mass (objects sharing a
// mass pool their trials) and averages hold-phase total force per mass.
// Objects without a recorded mass are ignored. Fewer than two distinct
// masses raise InsufficientDataError.
ForceMassModel force_mass_fit(const HoldExtraction& extraction,
                              GraspType grasp_type);
ForceMassModel force_mass_fit(std::span<const GraspTrial> trials,
                              GraspType grasp_type,
                              const SegmentationConfig& config = {});
ForceMassModel force_mass_fit(const Dataset& dataset, GraspType grasp_type,
                              const SegmentationConfig& config = {});

// Piecewise-linear interpolation over mass; beyond the sampled range the
// nearest segment is extended and the result is flagged.
ForceMassEval force_mass_eval(const ForceMassModel& model, double mass_g);

}  // namespace graspsyn
