#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graspsyn {

enum class FingerId : int {
    Thumb = 0,
    Index = 1,
    Middle = 2,
    Ring = 3,
    Pinky = 4,
};

inline constexpr std::array<FingerId, 5> kFingers = {
    FingerId::Thumb, FingerId::Index, FingerId::Middle,
    FingerId::Ring, FingerId::Pinky};

std::string_view to_string(FingerId finger);
FingerId finger_from_string(std::string_view name);

// Grasp taxonomy used by the acquisition protocol. Platform and
// IndexPointing are hand configurations without grasp-force semantics.
enum class GraspType : int {
    PulpPinch = 0,
    LateralPinch,
    DiagonalVolarGrip,
    CylindricalGrip,
    ExtensionGrip,
    TripodPinch,
    SphericalGrasp,
    HookGrasp,
    Platform,
    IndexPointing,
};

inline constexpr std::array<GraspType, 10> kAllGraspTypes = {
    GraspType::PulpPinch,      GraspType::LateralPinch,
    GraspType::DiagonalVolarGrip, GraspType::CylindricalGrip,
    GraspType::ExtensionGrip,  GraspType::TripodPinch,
    GraspType::SphericalGrasp, GraspType::HookGrasp,
    GraspType::Platform,       GraspType::IndexPointing};

std::string_view to_string(GraspType type);
std::string_view abbreviation(GraspType type);
GraspType grasp_type_from_string(std::string_view name);

// Whether trials of this type involve fingertip grasp forces at all.
bool is_graspable(GraspType type);
bool is_power_grasp(GraspType type);
bool is_precision_grasp(GraspType type);

// Upper bound of the force sensing range: 2 kg full scale per fingertip.
inline constexpr double kMaxFingertipForceN = 19.6;

struct ObjectSpec {
    std::string name;
    GraspType grasp_type = GraspType::PulpPinch;
    // Absent for objects that are actuated rather than lifted (Switch).
    std::optional<double> mass_g;
};

// One finger's decomposed joint angles, degrees. For the thumb the
// interphalangeal angle is stored in pip_deg and dip_deg is always 0.
struct JointAngles {
    double mcp_deg = 0.0;
    double pip_deg = 0.0;
    double dip_deg = 0.0;
};

struct HandPosture {
    std::array<JointAngles, 5> fingers{};

    JointAngles& operator[](FingerId f) { return fingers[static_cast<int>(f)]; }
    const JointAngles& operator[](FingerId f) const {
        return fingers[static_cast<int>(f)];
    }
};

// Detected or annotated phase boundaries, as sample indices.
// approach_start <= grasp_start <= lift_start <= hold_start < hold_end.
struct PhaseAnnotation {
    std::size_t approach_start = 0;
    std::size_t grasp_start = 0;
    std::size_t lift_start = 0;
    std::size_t hold_start = 0;
    std::size_t hold_end = 0;

    bool ordered() const {
        return approach_start <= grasp_start && grasp_start <= lift_start &&
               lift_start <= hold_start && hold_start < hold_end;
    }
};

struct TrialMeta {
    std::string subject_id;
    ObjectSpec object;
    int trial_index = 1;
    double scan_rate_hz = 40.0;
    double duration_s = 30.0;
    // Manual annotation overrides phase detection when present.
    std::optional<PhaseAnnotation> manual_phases;

    std::size_t expected_samples() const;
};

// Channel-major recording: one vector per fingertip, kFingers order.
struct TrialSeries {
    std::vector<double> t_s;
    std::array<std::vector<double>, 5> force_n{};
    std::array<std::vector<double>, 5> angle_deg{};

    std::size_t samples() const { return t_s.size(); }
};

struct GraspTrial {
    TrialMeta meta;
    TrialSeries series;
};

// Human-readable trial identifier used in warnings, tables and records:
// "S01 Apple (SG) t1".
std::string trial_label(const TrialMeta& meta);

}  // namespace graspsyn
