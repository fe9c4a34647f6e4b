#include "graspsyn/sensors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graspsyn/errors.hpp"

namespace graspsyn {

namespace {

constexpr double kExtrapolationFraction = 0.05;
constexpr double kProtocolSpanN = 15.0;

}  // namespace

double divider_output_v(const VoltageDividerConfig& cfg, double r_flex_ohm) {
    if (r_flex_ohm < 0.0) {
        throw std::domain_error("flex resistance must be non-negative, got " +
                                std::to_string(r_flex_ohm));
    }
    return cfg.v_cc_v * cfg.r_pulldown_ohm / (cfg.r_pulldown_ohm + r_flex_ohm);
}

double resistance_from_voltage_ohm(const VoltageDividerConfig& cfg,
                                   double v_out_v) {
    if (v_out_v <= 0.0 || v_out_v > cfg.v_cc_v) {
        throw std::domain_error("divider output must lie in (0, v_cc], got " +
                                std::to_string(v_out_v));
    }
    return cfg.r_pulldown_ohm * (cfg.v_cc_v - v_out_v) / v_out_v;
}

double quantize_adc(const VoltageDividerConfig& cfg, double v_out_v,
                    int bits) {
    if (bits < 1 || bits > 24) {
        throw std::domain_error("ADC resolution must be 1..24 bits");
    }
    if (v_out_v < 0.0 || v_out_v > cfg.v_cc_v) {
        throw std::domain_error("ADC input must lie in [0, v_cc]");
    }
    const double codes = static_cast<double>((1 << bits) - 1);
    const double code = std::round(v_out_v / cfg.v_cc_v * codes);
    return code / codes * cfg.v_cc_v;
}

FlexCalibration FlexCalibration::datasheet_preset() {
    return FlexCalibration{10000.0, 110000.0, 90.0};
}

AngleReading resistance_to_angle(const FlexCalibration& cal, double r_ohm) {
    if (r_ohm < 0.0) {
        throw std::domain_error("flex resistance must be non-negative");
    }
    if (cal.r_full_ohm <= cal.r_flat_ohm) {
        throw std::invalid_argument(
            "flex calibration requires r_full > r_flat");
    }
    const double t =
        (r_ohm - cal.r_flat_ohm) / (cal.r_full_ohm - cal.r_flat_ohm);
    const double raw = t * cal.full_angle_deg;
    AngleReading reading;
    reading.angle_deg = std::clamp(raw, 0.0, cal.full_angle_deg);
    reading.clamped = raw != reading.angle_deg;
    return reading;
}

double capacitance_of_force_f(const CapacitiveSensorModel& model,
                              double force_n) {
    if (force_n < 0.0) {
        throw std::domain_error("fingertip force must be non-negative");
    }
    const double limit = model.gap_closure_force_n();
    if (force_n >= limit) throw GapClosureError(force_n, limit);
    const double gap = model.d0_m - force_n / model.k_spring_n_per_m;
    return model.c0_f * model.d0_m / gap;
}

bool ForceCalibration::meets_protocol_span() const {
    if (knots.size() < 2) return false;
    return knots.back().force_n - knots.front().force_n >= kProtocolSpanN;
}

ForceCalibration fit_force_calibration(
    std::vector<CalibrationSample> samples) {
    if (samples.size() < 2) {
        throw CalibrationError("calibration needs at least two samples, got " +
                               std::to_string(samples.size()));
    }
    std::sort(samples.begin(), samples.end(),
              [](const CalibrationSample& a, const CalibrationSample& b) {
                  return a.capacitance_f < b.capacitance_f;
              });
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].capacitance_f == samples[i - 1].capacitance_f) {
            throw CalibrationError("duplicate capacitance sample at " +
                                   std::to_string(samples[i].capacitance_f));
        }
        if (samples[i].force_n <= samples[i - 1].force_n) {
            throw CalibrationError(
                "forces must increase strictly with capacitance");
        }
    }
    return ForceCalibration{std::move(samples)};
}

ForceReading force_from_capacitance(const ForceCalibration& cal,
                                    double capacitance_f) {
    if (cal.knots.size() < 2) {
        throw CalibrationError("force calibration has fewer than two knots");
    }
    const double lo = cal.min_capacitance_f();
    const double hi = cal.max_capacitance_f();
    const double band = kExtrapolationFraction * (hi - lo);
    if (capacitance_f < lo - band || capacitance_f > hi + band) {
        throw OutOfRangeError(capacitance_f, lo, hi);
    }

    // Pick the segment: interior lookup, or the edge segment when
    // extrapolating inside the tolerated band.
    const auto& knots = cal.knots;
    std::size_t seg = 0;
    if (capacitance_f >= hi) {
        seg = knots.size() - 2;
    } else if (capacitance_f > lo) {
        while (seg + 2 < knots.size() &&
               knots[seg + 1].capacitance_f <= capacitance_f) {
            ++seg;
        }
    }
    const auto& a = knots[seg];
    const auto& b = knots[seg + 1];
    const double slope =
        (b.force_n - a.force_n) / (b.capacitance_f - a.capacitance_f);
    ForceReading reading;
    reading.force_n = a.force_n + slope * (capacitance_f - a.capacitance_f);
    reading.extrapolated = capacitance_f < lo || capacitance_f > hi;
    return reading;
}

}  // namespace graspsyn
