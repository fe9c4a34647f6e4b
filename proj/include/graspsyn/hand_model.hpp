#pragma once

#include "graspsyn/types.hpp"

namespace graspsyn {

// Anatomical flexion limits of the distal joints (non-thumb fingers).
inline constexpr double kPipLimitDeg = 110.0;
inline constexpr double kDipLimitDeg = 90.0;

// Largest total flex angle a non-thumb sensor can report without the
// decomposition violating a joint limit. The DIP share is 8/29 of the
// total, so its 90 deg limit binds first: 90 * 29 / 8 = 326.25 deg.
double max_total_flex_deg();

// Splits one resistive sensor's total flexion into per-joint angles.
//
// Non-thumb fingers: MCP = 12/29 of the total, PIP = 3/4 of MCP and
// DIP = 2/3 of MCP, so the three joints sum back to the total. The
// thumb has two joints: MCP = 2/3 of the total, IP = 1/2 of MCP
// (stored in pip_deg; dip_deg stays 0).
//
// Throws std::domain_error for negative input and RomExceededError when
// a derived PIP/DIP angle exceeds its limit.
JointAngles decompose_flex_angle(FingerId finger, double theta_total_deg);

// Inverse of decompose_flex_angle: sums the joint contributions.
double compose_joint_angles(FingerId finger, const JointAngles& joints);

}  // namespace graspsyn
