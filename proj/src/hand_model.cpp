#include "graspsyn/hand_model.hpp"

#include <stdexcept>

#include "graspsyn/errors.hpp"

namespace graspsyn {

namespace {

// Joint shares of the measured total flexion.
constexpr double kMcpShare = 12.0 / 29.0;
constexpr double kPipOfMcp = 3.0 / 4.0;
constexpr double kDipOfMcp = 2.0 / 3.0;
constexpr double kThumbMcpShare = 2.0 / 3.0;
constexpr double kThumbIpOfMcp = 1.0 / 2.0;

}  // namespace

double max_total_flex_deg() { return kDipLimitDeg / (kDipOfMcp * kMcpShare); }

JointAngles decompose_flex_angle(FingerId finger, double theta_total_deg) {
    if (theta_total_deg < 0.0) {
        throw std::domain_error("total flex angle must be non-negative, got " +
                                std::to_string(theta_total_deg));
    }

    JointAngles joints;
    if (finger == FingerId::Thumb) {
        joints.mcp_deg = kThumbMcpShare * theta_total_deg;
        joints.pip_deg = kThumbIpOfMcp * joints.mcp_deg;
        joints.dip_deg = 0.0;
        return joints;
    }

    joints.mcp_deg = kMcpShare * theta_total_deg;
    joints.pip_deg = kPipOfMcp * joints.mcp_deg;
    joints.dip_deg = kDipOfMcp * joints.mcp_deg;
    if (joints.pip_deg > kPipLimitDeg) {
        throw RomExceededError(static_cast<int>(finger), "PIP", joints.pip_deg,
                               kPipLimitDeg);
    }
    if (joints.dip_deg > kDipLimitDeg) {
        throw RomExceededError(static_cast<int>(finger), "DIP", joints.dip_deg,
                               kDipLimitDeg);
    }
    return joints;
}

double compose_joint_angles(FingerId finger, const JointAngles& joints) {
    if (finger == FingerId::Thumb) return joints.mcp_deg + joints.pip_deg;
    return joints.mcp_deg + joints.pip_deg + joints.dip_deg;
}

}  // namespace graspsyn
