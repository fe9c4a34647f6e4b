#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "graspsyn/dataset.hpp"
#include "graspsyn/segmentation.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

enum class SignalDomain { Force, Posture };

std::string_view to_string(SignalDomain domain);
SignalDomain domain_from_string(std::string_view name);

// Hold-phase summary of one trial: per-channel means over
// [hold_start, hold_end) plus the decomposed mean posture.
struct HoldFeatures {
    std::array<double, 5> mean_force_n{};
    std::array<double, 5> mean_angle_deg{};
    HandPosture mean_posture;
    double total_force_n = 0.0;
};

// Throws std::invalid_argument when the annotation window is empty or
// falls outside the trial.
HoldFeatures hold_features(const GraspTrial& trial,
                           const PhaseAnnotation& phases);

// Observation vector for synergy analysis. Force: the 5 mean fingertip
// forces. Posture: the 5 raw mean flex angles, or with
// decomposed_posture the 15 joint angles (MCP, PIP, DIP per finger;
// thumb DIP slot is 0).
std::vector<double> feature_vector(const HoldFeatures& features,
                                   SignalDomain domain,
                                   bool decomposed_posture = false);

// Dataset-level extraction: segment every trial and summarize its hold
// phase. Trials that cannot be segmented (no contact, unstable hold)
// are skipped and reported as warnings.
struct TrialHold {
    TrialMeta meta;
    PhaseAnnotation phases;
    HoldFeatures features;
};

struct HoldExtraction {
    std::vector<TrialHold> trials;
    std::vector<std::string> warnings;
};

HoldExtraction extract_hold_features(std::span<const GraspTrial> trials,
                                     const SegmentationConfig& config = {});
HoldExtraction extract_hold_features(const Dataset& dataset,
                                     const SegmentationConfig& config = {});

}  // namespace graspsyn
