#include "graspsyn/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graspsyn/errors.hpp"

namespace graspsyn {

namespace {

bool all_finite(const std::vector<double>& values) {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

double max_force(const TrialSeries& series, std::size_t t) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& channel : series.force_n) m = std::max(m, channel[t]);
    return m;
}

double median(std::vector<double> values) {
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    double m = values[mid];
    if (values.size() % 2 == 0) {
        std::nth_element(values.begin(), values.begin() + mid - 1,
                         values.begin() + mid);
        m = 0.5 * (m + values[mid - 1]);
    }
    return m;
}

// Sample standard deviation (N-1) of channel[t .. t+len).
double window_std(const std::vector<double>& channel, std::size_t t,
                  std::size_t len) {
    double mean = 0.0;
    for (std::size_t i = t; i < t + len; ++i) mean += channel[i];
    mean /= static_cast<double>(len);
    double ss = 0.0;
    for (std::size_t i = t; i < t + len; ++i) {
        const double d = channel[i] - mean;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(len - 1));
}

}  // namespace

ValidationReport validate_trial(const GraspTrial& trial, double f_on_n) {
    const TrialSeries& s = trial.series;
    ValidationReport report;
    auto fail = [&report](const char* check, std::string detail) {
        report.issues.push_back({check, std::move(detail)});
    };

    const std::size_t n = s.samples();
    bool lengths_ok = true;
    for (FingerId f : kFingers) {
        const int i = static_cast<int>(f);
        if (s.force_n[i].size() != n || s.angle_deg[i].size() != n) {
            lengths_ok = false;
        }
    }
    if (!lengths_ok) {
        fail("channel_lengths", "force/angle channels disagree with time base");
        return report;
    }
    if (n != trial.meta.expected_samples()) {
        fail("sample_count",
             "got " + std::to_string(n) + " samples, expected " +
                 std::to_string(trial.meta.expected_samples()));
    }
    for (std::size_t t = 1; t < n; ++t) {
        if (!(s.t_s[t] > s.t_s[t - 1])) {
            fail("time_base",
                 "t_s not strictly increasing at sample " + std::to_string(t));
            break;
        }
    }
    if (!all_finite(s.t_s)) fail("finite", "non-finite time value");

    double max_f = 0.0;
    for (FingerId f : kFingers) {
        const int i = static_cast<int>(f);
        if (!all_finite(s.force_n[i]) || !all_finite(s.angle_deg[i])) {
            fail("finite",
                 std::string("non-finite value on ") + std::string(to_string(f)));
            continue;
        }
        for (std::size_t t = 0; t < n; ++t) {
            const double force = s.force_n[i][t];
            const double angle = s.angle_deg[i][t];
            if (force < 0.0) {
                fail("force_range", std::string(to_string(f)) + " force " +
                                        std::to_string(force) +
                                        " N negative at sample " +
                                        std::to_string(t));
                break;
            }
            if (angle < 0.0 || angle > kAngleUpperBoundDeg) {
                fail("angle_range", std::string(to_string(f)) + " angle " +
                                        std::to_string(angle) +
                                        " deg outside [0, 217.5] at sample " +
                                        std::to_string(t));
                break;
            }
        }
        for (double force : s.force_n[i]) max_f = std::max(max_f, force);
    }
    report.max_force_n = max_f;
    report.no_contact = max_f < f_on_n;
    return report;
}

PhaseAnnotation segment_phases(const GraspTrial& trial,
                               const SegmentationConfig& cfg) {
    const TrialSeries& s = trial.series;
    const std::size_t n = s.samples();
    const std::size_t window = cfg.stable_window;
    if (window < 2) throw std::invalid_argument("stable_window must be >= 2");
    if (n < window) {
        throw std::invalid_argument("trial shorter than the stability window");
    }
    for (FingerId f : kFingers) {
        const int i = static_cast<int>(f);
        if (s.force_n[i].size() != n || s.angle_deg[i].size() != n) {
            throw std::invalid_argument("channel lengths disagree");
        }
    }

    if (trial.meta.manual_phases) {
        const PhaseAnnotation& manual = *trial.meta.manual_phases;
        if (!manual.ordered() || manual.hold_end > n) {
            throw std::invalid_argument("manual phase annotation is invalid");
        }
        return manual;
    }

    PhaseAnnotation phases;
    phases.hold_end = n;

    // Contact: first sample where any fingertip force reaches f_on.
    std::size_t grasp = n;
    for (std::size_t t = 0; t < n && grasp == n; ++t) {
        if (max_force(s, t) >= cfg.f_on_n) grasp = t;
    }
    if (grasp == n) {
        double max_f = 0.0;
        for (std::size_t t = 0; t < n; ++t)
            max_f = std::max(max_f, max_force(s, t));
        throw NoContactError(max_f);
    }
    phases.grasp_start = grasp;

    // Approach: sustained mean angular motion before contact.
    const std::size_t reach_run = std::max<std::size_t>(1, window / 4);
    std::vector<double> angle_rate(n > 0 ? n - 1 : 0, 0.0);
    for (std::size_t t = 0; t + 1 < n; ++t) {
        double d = 0.0;
        for (const auto& channel : s.angle_deg) d += channel[t + 1] - channel[t];
        angle_rate[t] = d / 5.0;
    }
    phases.approach_start = grasp;
    for (std::size_t t = 0; t + reach_run <= grasp; ++t) {
        bool sustained = true;
        for (std::size_t k = t; k < t + reach_run && sustained; ++k) {
            sustained = angle_rate[k] > cfg.angle_rate_eps_deg &&
                        max_force(s, k) < cfg.f_on_n;
        }
        if (sustained) {
            phases.approach_start = t;
            break;
        }
    }

    // Smoothed total-force forward difference (trailing mean).
    const std::size_t smooth = std::max<std::size_t>(1, window / 8);
    std::vector<double> total(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        for (const auto& channel : s.force_n) total[t] += channel[t];
    }
    std::vector<double> rate(n > 0 ? n - 1 : 0, 0.0);
    for (std::size_t t = 0; t + 1 < n; ++t) {
        const std::size_t from = t + 1 >= smooth ? t + 1 - smooth : 0;
        double sum = 0.0;
        for (std::size_t k = from; k <= t; ++k) sum += total[k + 1] - total[k];
        rate[t] = sum / static_cast<double>(t - from + 1);
    }

    // Lift: quiescent dip after the grasp rise, then the smoothed
    // derivative re-exceeding the grasp-phase median.
    const std::size_t last_rate = rate.size();
    std::size_t lift = grasp;
    std::vector<double> rise_mag;
    rise_mag.reserve(window);
    for (std::size_t t = grasp; t < std::min(grasp + window, last_rate); ++t) {
        rise_mag.push_back(std::abs(rate[t]));
    }
    const double rise_scale = rise_mag.empty() ? 0.0 : median(rise_mag);
    if (rise_scale > 1e-12) {
        const std::size_t dip_run = std::max<std::size_t>(1, window / 8);
        std::vector<double> seen;
        seen.reserve(last_rate - grasp);
        seen.push_back(std::abs(rate[grasp]));
        std::size_t consecutive = 0;
        std::size_t dip = last_rate;
        for (std::size_t t = grasp + 1; t < last_rate; ++t) {
            seen.push_back(std::abs(rate[t]));
            if (std::abs(rate[t]) < 0.25 * median(seen)) {
                if (++consecutive >= dip_run) {
                    dip = t - dip_run + 1;
                    break;
                }
            } else {
                consecutive = 0;
            }
        }
        if (dip < last_rate) {
            std::vector<double> grasp_mag;
            grasp_mag.reserve(dip - grasp);
            for (std::size_t t = grasp; t < dip; ++t) {
                grasp_mag.push_back(std::abs(rate[t]));
            }
            const double grasp_median = median(grasp_mag);
            lift = dip;
            for (std::size_t t = dip; t < last_rate; ++t) {
                if (std::abs(rate[t]) > grasp_median) {
                    lift = t;
                    break;
                }
            }
        }
    }
    phases.lift_start = lift;

    // Hold: first window where every force channel is stable.
    std::size_t best_candidate = lift;
    double best_std = std::numeric_limits<double>::infinity();
    std::size_t hold = n;
    for (std::size_t t = lift; t + window <= n && hold == n; ++t) {
        double worst = 0.0;
        for (const auto& channel : s.force_n) {
            worst = std::max(worst, window_std(channel, t, window));
        }
        if (worst < cfg.hold_std_n) {
            hold = t;
        } else if (worst < best_std) {
            best_std = worst;
            best_candidate = t;
        }
    }
    if (hold == n) throw UnstableHoldError(best_candidate, best_std);
    phases.hold_start = hold;
    return phases;
}

}  // namespace graspsyn
