#pragma once

#include <vector>

#include "graspsyn/types.hpp"

namespace graspsyn {

// Resistive flex sensor read through a voltage divider:
// V_out = V_cc * R / (R + R_flex) with R the fixed pulldown.
struct VoltageDividerConfig {
    double v_cc_v = 5.0;
    double r_pulldown_ohm = 47000.0;
};

// Forward model. Throws std::domain_error for negative flex resistance.
double divider_output_v(const VoltageDividerConfig& cfg, double r_flex_ohm);

// Inverse model. Throws std::domain_error unless 0 < v_out <= v_cc.
double resistance_from_voltage_ohm(const VoltageDividerConfig& cfg,
                                   double v_out_v);

// Optional acquisition stage: quantize a divider output to an n-bit ADC
// grid over [0, v_cc]. Values are snapped to the nearest code.
double quantize_adc(const VoltageDividerConfig& cfg, double v_out_v,
                    int bits = 10);

// Two-point linear map from flex resistance to bend angle.
// Defaults follow the sensor characterisation: 25 kOhm flat,
// 100 kOhm at 90 degrees of bend.
struct FlexCalibration {
    double r_flat_ohm = 25000.0;
    double r_full_ohm = 100000.0;
    double full_angle_deg = 90.0;

    // Datasheet alternative: 10 kOhm flat, 60-110 kOhm over the bend
    // (the top of the band taken as full bend).
    static FlexCalibration datasheet_preset();
};

struct AngleReading {
    double angle_deg = 0.0;
    // True when the raw value fell outside [0, full_angle] and was clamped.
    bool clamped = false;
};

AngleReading resistance_to_angle(const FlexCalibration& cal, double r_ohm);

// Parallel-plate capacitive force sensor: a fingertip force f compresses
// the dielectric spring (stiffness k) and shrinks the gap from d0, so
// C(f) = c0 * d0 / (d0 - f / k).
struct CapacitiveSensorModel {
    double c0_f = 1e-10;
    double d0_m = 1e-3;
    double k_spring_n_per_m = 2e4;

    // Force at which the plates would touch.
    double gap_closure_force_n() const { return k_spring_n_per_m * d0_m; }
};

// Throws std::domain_error for negative force and GapClosureError when
// f would close the gap entirely.
double capacitance_of_force_f(const CapacitiveSensorModel& model,
                              double force_n);

struct CalibrationSample {
    double capacitance_f = 0.0;
    double force_n = 0.0;
};

// Piecewise-linear capacitance -> force curve, knots sorted by capacitance.
struct ForceCalibration {
    std::vector<CalibrationSample> knots;

    double min_capacitance_f() const { return knots.front().capacitance_f; }
    double max_capacitance_f() const { return knots.back().capacitance_f; }
    // Whether the calibration ramp reached the protocol's ~20 N target
    // (at least 15 N of span). Informational, not enforced.
    bool meets_protocol_span() const;
};

// Builds a calibration from measured (capacitance, force) pairs.
// Samples are sorted by capacitance. Throws CalibrationError for fewer
// than two samples, duplicate capacitances, or forces that do not
// increase strictly with capacitance.
ForceCalibration fit_force_calibration(std::vector<CalibrationSample> samples);

struct ForceReading {
    double force_n = 0.0;
    // True when the capacitance fell outside the knot range and the edge
    // segment was extrapolated (tolerated up to 5% of the range).
    bool extrapolated = false;
};

// Inverts the calibration. Extrapolates linearly up to 5% of the
// capacitance range beyond either end; farther throws OutOfRangeError.
ForceReading force_from_capacitance(const ForceCalibration& cal,
                                    double capacitance_f);

// Full per-finger glove calibration state.
struct GloveCalibration {
    VoltageDividerConfig divider;
    std::array<FlexCalibration, 5> flex{};
    std::array<ForceCalibration, 5> force{};
};

}  // namespace graspsyn
