#include "graspsyn/features.hpp"

#include <stdexcept>

#include "graspsyn/errors.hpp"
#include "graspsyn/hand_model.hpp"

namespace graspsyn {

std::string_view to_string(SignalDomain domain) {
    return domain == SignalDomain::Force ? "force" : "posture";
}

SignalDomain domain_from_string(std::string_view name) {
    if (name == "force") return SignalDomain::Force;
    if (name == "posture") return SignalDomain::Posture;
    throw std::invalid_argument("unknown signal domain: " + std::string(name));
}

HoldFeatures hold_features(const GraspTrial& trial,
                           const PhaseAnnotation& phases) {
    const TrialSeries& s = trial.series;
    if (phases.hold_start >= phases.hold_end ||
        phases.hold_end > s.samples()) {
        throw std::invalid_argument("hold window is empty or out of bounds");
    }
    const double len =
        static_cast<double>(phases.hold_end - phases.hold_start);

    HoldFeatures features;
    for (FingerId f : kFingers) {
        const int i = static_cast<int>(f);
        double force_sum = 0.0;
        double angle_sum = 0.0;
        for (std::size_t t = phases.hold_start; t < phases.hold_end; ++t) {
            force_sum += s.force_n[i][t];
            angle_sum += s.angle_deg[i][t];
        }
        features.mean_force_n[i] = force_sum / len;
        features.mean_angle_deg[i] = angle_sum / len;
        features.mean_posture[f] =
            decompose_flex_angle(f, features.mean_angle_deg[i]);
        features.total_force_n += features.mean_force_n[i];
    }
    return features;
}

std::vector<double> feature_vector(const HoldFeatures& features,
                                   SignalDomain domain,
                                   bool decomposed_posture) {
    std::vector<double> v;
    if (domain == SignalDomain::Force) {
        v.assign(features.mean_force_n.begin(), features.mean_force_n.end());
        return v;
    }
    if (!decomposed_posture) {
        v.assign(features.mean_angle_deg.begin(),
                 features.mean_angle_deg.end());
        return v;
    }
    v.reserve(15);
    for (FingerId f : kFingers) {
        const JointAngles& joints = features.mean_posture[f];
        v.push_back(joints.mcp_deg);
        v.push_back(joints.pip_deg);
        v.push_back(joints.dip_deg);
    }
    return v;
}

namespace {

void extract_one(const GraspTrial& trial, const SegmentationConfig& config,
                 HoldExtraction& out) {
    const TrialMeta& meta = trial.meta;
    const std::string label = trial_label(meta);
    try {
        TrialHold hold;
        hold.meta = meta;
        hold.phases = segment_phases(trial, config);
        hold.features = hold_features(trial, hold.phases);
        out.trials.push_back(std::move(hold));
    } catch (const GraspError& e) {
        out.warnings.push_back(label + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        out.warnings.push_back(label + ": " + e.what());
    }
}

}  // namespace

HoldExtraction extract_hold_features(std::span<const GraspTrial> trials,
                                     const SegmentationConfig& config) {
    HoldExtraction out;
    for (const GraspTrial& trial : trials) extract_one(trial, config, out);
    return out;
}

HoldExtraction extract_hold_features(const Dataset& dataset,
                                     const SegmentationConfig& config) {
    HoldExtraction out;
    for (const TrialRecord& record : dataset.trials) {
        extract_one(GraspTrial{record.meta, record.series}, config, out);
    }
    return out;
}

}  // namespace graspsyn
