#include "graspsyn/force_mass.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "graspsyn/errors.hpp"

namespace graspsyn {

ForceMassModel force_mass_fit(const HoldExtraction& extraction,
                              GraspType grasp_type) {
    struct Accum {
        double force_sum = 0.0;
        int trials = 0;
    };
    std::map<double, Accum> by_mass;
    for (const TrialHold& hold : extraction.trials) {
        const ObjectSpec& object = hold.meta.object;
        if (object.grasp_type != grasp_type || !object.mass_g) continue;
        Accum& acc = by_mass[*object.mass_g];
        acc.force_sum += hold.features.total_force_n;
        ++acc.trials;
    }
    if (by_mass.size() < 2) {
        throw InsufficientDataError(
            std::string(to_string(grasp_type)) + ": need trials at >= 2 " +
            "distinct object masses, have " + std::to_string(by_mass.size()));
    }
    ForceMassModel model;
    model.grasp_type = grasp_type;
    model.samples.reserve(by_mass.size());
    for (const auto& [mass, acc] : by_mass) {
        model.samples.push_back(
            {mass, acc.force_sum / acc.trials, acc.trials});
    }
    return model;
}

ForceMassModel force_mass_fit(std::span<const GraspTrial> trials,
                              GraspType grasp_type,
                              const SegmentationConfig& config) {
    return force_mass_fit(extract_hold_features(trials, config), grasp_type);
}

ForceMassModel force_mass_fit(const Dataset& dataset, GraspType grasp_type,
                              const SegmentationConfig& config) {
    return force_mass_fit(extract_hold_features(dataset, config), grasp_type);
}

ForceMassEval force_mass_eval(const ForceMassModel& model, double mass_g) {
    const std::vector<ForceMassPoint>& pts = model.samples;
    if (pts.size() < 2) {
        throw std::invalid_argument("force-mass model needs >= 2 points");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i].mass_g > pts[i - 1].mass_g)) {
            throw std::invalid_argument(
                "force-mass model masses must be strictly increasing");
        }
    }

    std::size_t seg = 0;  // interpolate over [seg, seg+1]
    if (mass_g >= pts.back().mass_g) {
        seg = pts.size() - 2;
    } else {
        while (seg + 2 < pts.size() && mass_g >= pts[seg + 1].mass_g) ++seg;
    }
    const ForceMassPoint& a = pts[seg];
    const ForceMassPoint& b = pts[seg + 1];
    const double t = (mass_g - a.mass_g) / (b.mass_g - a.mass_g);

    ForceMassEval eval;
    eval.extrapolated = mass_g < pts.front().mass_g || mass_g > pts.back().mass_g;
    // Exact at the knots.
    if (mass_g == a.mass_g) {
        eval.force_n = a.mean_force_n;
    } else if (mass_g == b.mass_g) {
        eval.force_n = b.mean_force_n;
    } else {
        eval.force_n = a.mean_force_n + t * (b.mean_force_n - a.mean_force_n);
    }
    return eval;
}

}  // namespace graspsyn
