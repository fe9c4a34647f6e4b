#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graspsyn/types.hpp"

namespace graspsyn {

// Raw flex channels cannot exceed the angle at which the MCP share of
// the decomposition reaches 90 degrees: 90 * 29 / 12.
inline constexpr double kAngleUpperBoundDeg = 217.5;

// Default contact threshold shared by validation and segmentation.
inline constexpr double kDefaultContactThresholdN = 0.1;

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    // No force channel ever reached the contact threshold. A flag, not a
    // failure: such trials are valid recordings but cannot be segmented.
    bool no_contact = false;
    double max_force_n = 0.0;

    bool ok() const { return issues.empty(); }
};

// Structural checks on a recorded trial: consistent channel lengths,
// expected sample count, finite values, monotone time base, forces
// non-negative and angles within [0, kAngleUpperBoundDeg].
ValidationReport validate_trial(const GraspTrial& trial,
                                double f_on_n = kDefaultContactThresholdN);

struct SegmentationConfig {
    // Contact threshold on any single fingertip force.
    double f_on_n = 0.1;
    // Minimum mean angular rate (deg/sample) that counts as reaching.
    double angle_rate_eps_deg = 0.05;
    // Per-channel rolling standard deviation below which forces count as
    // stable (sample std, N-1 divisor).
    double hold_std_n = 0.05;
    // Stability window length in samples; also sets the derived run
    // lengths (approach run = W/4, derivative smoothing = W/8).
    std::size_t stable_window = 40;
};

// Splits a trial into approach / grasp / lift / hold.
//
//   grasp_start    first sample where any force reaches f_on.
//   approach_start first run of W/4 samples before grasp_start whose mean
//                  angle forward-difference stays above angle_rate_eps
//                  while all forces are below f_on; grasp_start if none.
//   lift_start     first sample whose smoothed absolute total-force
//                  derivative re-exceeds the grasp-phase median after the
//                  post-grasp quiescent dip.
//   hold_start     first sample t >= lift_start where every force
//                  channel's std over [t, t + W) is below hold_std.
//   hold_end       trial end.
//
// A manual annotation in the trial metadata overrides detection.
// Throws NoContactError when no force ever reaches f_on and
// UnstableHoldError when no stable window exists.
PhaseAnnotation segment_phases(const GraspTrial& trial,
                               const SegmentationConfig& cfg = {});

}  // namespace graspsyn
