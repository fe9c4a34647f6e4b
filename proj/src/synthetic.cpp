#include "graspsyn/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "graspsyn/catalog.hpp"
#include "graspsyn/errors.hpp"
#include "graspsyn/rng.hpp"
#include "graspsyn/trial_csv.hpp"

namespace graspsyn {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.141592653589793238462643383279502884;

double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

// Logistic ramp renormalised to hit 0 and 1 exactly at the ends.
double ramp01(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lo = sigmoid(-3.0);
    const double hi = sigmoid(3.0);
    return (sigmoid(6.0 * x - 3.0) - lo) / (hi - lo);
}

Eigen::VectorXd coords(double c1, double c2, double c3) {
    Eigen::VectorXd v(3);
    v << c1, c2, c3;
    return v;
}

std::string sanitize(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    }
    return out;
}

void check_config(const SyntheticConfig& cfg, const SynergyPlant& plant,
                  std::size_t samples) {
    const PhaseTimings& tm = cfg.timings;
    if (!(tm.approach_onset <= tm.contact && tm.contact <= tm.lift &&
          tm.lift <= tm.hold && tm.hold < samples)) {
        throw std::invalid_argument("phase timings must be ordered and end "
                                    "before the trial does");
    }
    if (cfg.scan_rate_hz <= 0.0 || cfg.duration_s <= 0.0) {
        throw std::invalid_argument("scan rate and duration must be positive");
    }
    if (cfg.trials_per_object < 1) {
        throw std::invalid_argument("trials_per_object must be >= 1");
    }
    if (cfg.swing_period < 2) {
        throw std::invalid_argument("swing_period must be >= 2 samples");
    }
    if (cfg.grasp_level_fraction <= 0.0 || cfg.grasp_level_fraction >= 1.0) {
        throw std::invalid_argument("grasp_level_fraction must be in (0, 1)");
    }
    if (plant.loadings.cols() != 10 || plant.base_profile.size() != 10 ||
        plant.coefficient_sigma.size() != plant.loadings.rows()) {
        throw std::invalid_argument("synergy plant dimensions are inconsistent");
    }
}

// Cholesky factor of a channel correlation matrix.
Eigen::Matrix<double, 5, 5> correlation_factor(
    const Eigen::Matrix<double, 5, 5>& corr, const char* domain) {
    Eigen::LLT<Eigen::Matrix<double, 5, 5>> llt(corr);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument(
            std::string(domain) +
            " noise correlation matrix is not positive definite");
    }
    return llt.matrixL();
}

ordered_json truth_to_json(const TrialGroundTruth& truth) {
    ordered_json row;
    row["subject"] = truth.subject_id;
    row["object"] = truth.object_name;
    row["grasp_type"] = std::string(abbreviation(truth.grasp_type));
    row["trial_index"] = truth.trial_index;
    if (truth.boundaries) {
        row["boundaries"] =
            ordered_json{{"approach_start", truth.boundaries->approach_start},
                         {"grasp_start", truth.boundaries->grasp_start},
                         {"lift_start", truth.boundaries->lift_start},
                         {"hold_start", truth.boundaries->hold_start},
                         {"hold_end", truth.boundaries->hold_end}};
    } else {
        row["boundaries"] = nullptr;
    }
    if (truth.synergy_coefficients) {
        row["synergy_coefficients"] = *truth.synergy_coefficients;
    } else {
        row["synergy_coefficients"] = nullptr;
    }
    row["hold_force_n"] = truth.hold_force_n;
    row["hold_angle_deg"] = truth.hold_angle_deg;
    return row;
}

TrialGroundTruth truth_from_json(const nlohmann::json& row) {
    TrialGroundTruth truth;
    truth.subject_id = row.at("subject").get<std::string>();
    truth.object_name = row.at("object").get<std::string>();
    truth.grasp_type =
        grasp_type_from_string(row.at("grasp_type").get<std::string>());
    truth.trial_index = row.at("trial_index").get<int>();
    if (!row.at("boundaries").is_null()) {
        const auto& b = row.at("boundaries");
        PhaseAnnotation phases;
        phases.approach_start = b.at("approach_start").get<std::size_t>();
        phases.grasp_start = b.at("grasp_start").get<std::size_t>();
        phases.lift_start = b.at("lift_start").get<std::size_t>();
        phases.hold_start = b.at("hold_start").get<std::size_t>();
        phases.hold_end = b.at("hold_end").get<std::size_t>();
        truth.boundaries = phases;
    }
    if (!row.at("synergy_coefficients").is_null()) {
        truth.synergy_coefficients =
            row.at("synergy_coefficients").get<std::vector<double>>();
    }
    for (int i = 0; i < 5; ++i) {
        truth.hold_force_n[i] = row.at("hold_force_n").at(i).get<double>();
        truth.hold_angle_deg[i] = row.at("hold_angle_deg").at(i).get<double>();
    }
    return truth;
}

}  // namespace

SynergyPlant SyntheticConfig::default_synergy() {
    SynergyPlant plant;
    plant.base_profile = Eigen::VectorXd(10);
    // Angles then forces, kFingers order.
    plant.base_profile << 26.0, 44.0, 42.0, 33.0, 28.0,  //
        2.1, 1.7, 1.5, 1.1, 0.95;

    plant.loadings = Eigen::MatrixXd(3, 10);
    // Overall grip intensity; the force block is proportional to the
    // base force profile so negative coordinates shrink every channel
    // uniformly and cannot drive one below zero.
    plant.loadings.row(0) << 2.7, 3.75, 3.6, 2.7, 2.25,  //
        0.63, 0.51, 0.45, 0.33, 0.285;
    // Radial/ulnar contrast (index+middle against ring+pinky).
    plant.loadings.row(1) << 1.5, 3.3, 1.65, -3.0, -3.45,  //
        0.105, 0.187, 0.06, -0.099, -0.114;
    // Thumb opposition against index recruitment.
    plant.loadings.row(2) << 4.5, -2.25, 0.6, 1.2, -1.05,  //
        -0.105, 0.187, -0.12, 0.055, 0.0285;

    plant.coefficient_sigma = Eigen::VectorXd(3);
    plant.coefficient_sigma << 0.45, 0.35, 0.28;
    plant.jitter_bound = 2.0;
    plant.mass_coefficient_per_kg = 1.2;
    plant.reference_mass_kg = 0.15;

    plant.coordinates[GraspType::SphericalGrasp] = coords(1.20, -0.35, 0.55);
    plant.coordinates[GraspType::CylindricalGrip] = coords(0.85, -0.55, 0.0);
    plant.coordinates[GraspType::ExtensionGrip] = coords(0.70, 0.25, -0.45);
    plant.coordinates[GraspType::HookGrasp] = coords(0.55, -0.85, -0.75);
    plant.coordinates[GraspType::DiagonalVolarGrip] =
        coords(-0.55, 0.45, 0.85);
    plant.coordinates[GraspType::TripodPinch] = coords(-0.75, 0.95, 0.60);
    plant.coordinates[GraspType::PulpPinch] = coords(-0.95, 1.10, 0.80);
    plant.coordinates[GraspType::LateralPinch] = coords(-0.85, 0.70, -0.55);

    Eigen::VectorXd platform(5), pointing(5);
    platform << 10.0, 12.0, 12.0, 11.0, 10.0;
    pointing << 25.0, 8.0, 55.0, 52.0, 50.0;
    plant.fixed_postures[GraspType::Platform] = platform;
    plant.fixed_postures[GraspType::IndexPointing] = pointing;
    return plant;
}

std::vector<std::string> SyntheticConfig::default_subjects(int count) {
    std::vector<std::string> subjects;
    subjects.reserve(count);
    for (int i = 1; i <= count; ++i) {
        char buffer[16];
        std::snprintf(buffer, sizeof(buffer), "S%02d", i);
        subjects.emplace_back(buffer);
    }
    return subjects;
}

std::vector<ObjectSpec> SyntheticConfig::default_object_grid() {
    std::vector<ObjectSpec> grid;
    for (const auto& object : builtin_catalog()) {
        const bool seen =
            std::any_of(grid.begin(), grid.end(), [&](const ObjectSpec& o) {
                return o.name == object.name;
            });
        if (!seen) grid.push_back(object);
    }
    return grid;
}

SyntheticTrial synthesize_trial(const SyntheticConfig& cfg,
                                const std::string& subject,
                                const ObjectSpec& object, int trial_index) {
    TrialMeta meta;
    meta.subject_id = subject;
    meta.object = object;
    meta.trial_index = trial_index;
    meta.scan_rate_hz = cfg.scan_rate_hz;
    meta.duration_s = cfg.duration_s;
    const std::size_t n = meta.expected_samples();

    SynergyPlant default_plant;
    if (cfg.synergy.loadings.size() == 0) {
        default_plant = SyntheticConfig::default_synergy();
    }
    const SynergyPlant& plant =
        cfg.synergy.loadings.size() ? cfg.synergy : default_plant;
    check_config(cfg, plant, n);

    SeededRng rng(derive_seed(cfg.seed,
                              {subject, object.name, abbreviation(object.grasp_type)},
                              static_cast<std::uint64_t>(trial_index)));

    // Per-trial hold targets.
    TrialGroundTruth truth;
    truth.subject_id = subject;
    truth.object_name = object.name;
    truth.grasp_type = object.grasp_type;
    truth.trial_index = trial_index;

    Eigen::VectorXd angle_target(5), force_target(5);
    if (is_graspable(object.grasp_type)) {
        auto it = plant.coordinates.find(object.grasp_type);
        if (it == plant.coordinates.end()) {
            throw std::invalid_argument(
                "no synergy coordinates for grasp type " +
                std::string(to_string(object.grasp_type)));
        }
        Eigen::VectorXd coeff = it->second;
        if (coeff.size() != plant.loadings.rows()) {
            throw std::invalid_argument("synergy coordinate rank mismatch");
        }
        if (object.mass_g) {
            coeff(0) += plant.mass_coefficient_per_kg *
                        (*object.mass_g / 1000.0 - plant.reference_mass_kg);
        }
        for (Eigen::Index k = 0; k < coeff.size(); ++k) {
            coeff(k) += plant.coefficient_sigma(k) *
                        rng.truncated_gaussian(plant.jitter_bound);
        }
        const Eigen::VectorXd profile =
            plant.base_profile + plant.loadings.transpose() * coeff;
        angle_target = profile.head(5);
        force_target = profile.tail(5);
        truth.synergy_coefficients =
            std::vector<double>(coeff.data(), coeff.data() + coeff.size());
    } else {
        auto it = plant.fixed_postures.find(object.grasp_type);
        if (it == plant.fixed_postures.end()) {
            throw std::invalid_argument(
                "no fixed posture for grasp type " +
                std::string(to_string(object.grasp_type)));
        }
        angle_target = it->second;
        force_target = Eigen::VectorXd::Zero(5);
    }

    for (int i = 0; i < 5; ++i) {
        angle_target(i) += cfg.angle_target_sigma_deg[i] * rng.gaussian();
    }
    for (int i = 0; i < 5; ++i) {
        force_target(i) += is_graspable(object.grasp_type)
                               ? cfg.force_target_sigma_n[i] * rng.gaussian()
                               : 0.0;
    }
    for (int i = 0; i < 5; ++i) {
        angle_target(i) = std::clamp(angle_target(i), 0.0, kAngleUpperBoundDeg);
        force_target(i) =
            std::clamp(force_target(i), 0.0, kMaxFingertipForceN);
        truth.hold_angle_deg[i] = angle_target(i);
        truth.hold_force_n[i] = force_target(i);
    }

    // Waveforms.
    const PhaseTimings& tm = cfg.timings;
    const std::size_t angle_rise =
        std::min<std::size_t>(cfg.angle_rise_samples, tm.contact - tm.approach_onset);
    const std::size_t force_rise =
        std::min<std::size_t>(cfg.force_rise_samples, tm.lift - tm.contact);

    int strongest = 0;
    for (int i = 1; i < 5; ++i) {
        if (force_target(i) > force_target(strongest)) strongest = i;
    }
    std::array<double, 5> swing_amp{};
    for (int i = 0; i < 5; ++i) {
        swing_amp[i] = cfg.swing_fraction * force_target(i);
        if (i == strongest && force_target(i) > 0.0) {
            swing_amp[i] = std::max(swing_amp[i], cfg.swing_floor_n);
        }
    }

    TrialSeries clean;
    clean.t_s.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        clean.t_s[t] = static_cast<double>(t) / cfg.scan_rate_hz;
    }
    for (int i = 0; i < 5; ++i) {
        clean.angle_deg[i].resize(n);
        clean.force_n[i].resize(n);
        const double a = angle_target(i);
        const double h = force_target(i);
        const double p1 = cfg.grasp_level_fraction * h;
        for (std::size_t t = 0; t < n; ++t) {
            double angle = 0.0;
            if (t >= tm.approach_onset) {
                if (angle_rise > 0 && t < tm.approach_onset + angle_rise) {
                    angle = a * ramp01(static_cast<double>(t - tm.approach_onset) /
                                       static_cast<double>(angle_rise));
                } else {
                    angle = a;
                }
            }
            clean.angle_deg[i][t] = angle;

            double force = 0.0;
            if (t >= tm.hold) {
                force = h;
            } else if (t >= tm.lift) {
                const double glide =
                    p1 + (h - p1) * static_cast<double>(t - tm.lift) /
                             static_cast<double>(tm.hold - tm.lift);
                const double theta =
                    2.0 * kPi *
                    (static_cast<double>(t) - static_cast<double>(tm.hold)) /
                    static_cast<double>(cfg.swing_period);
                force = std::max(0.0, glide + swing_amp[i] * std::cos(theta));
            } else if (t >= tm.contact) {
                if (force_rise > 0 && t < tm.contact + force_rise) {
                    force = p1 * ramp01(static_cast<double>(t - tm.contact) /
                                        static_cast<double>(force_rise));
                } else {
                    force = p1;
                }
            }
            clean.force_n[i][t] = force;
        }
    }

    // Ground-truth boundaries: the detection semantics applied to the
    // noiseless waveform.
    GraspTrial noiseless{meta, clean};
    try {
        truth.boundaries = segment_phases(noiseless, cfg.truth_segmentation);
    } catch (const NoContactError&) {
        truth.boundaries.reset();
    }

    // Measurement noise: correlated across channels, angles everywhere,
    // forces from the contact sample on (and only on loaded channels).
    const Eigen::Matrix<double, 5, 5> angle_chol =
        correlation_factor(cfg.angle_noise_correlation, "angle");
    const Eigen::Matrix<double, 5, 5> force_chol =
        correlation_factor(cfg.force_noise_correlation, "force");

    TrialSeries noisy = clean;
    Eigen::Matrix<double, 5, 1> z;
    for (std::size_t t = 0; t < n; ++t) {
        for (int i = 0; i < 5; ++i) z(i) = rng.gaussian();
        const Eigen::Matrix<double, 5, 1> angle_noise = angle_chol * z;
        for (int i = 0; i < 5; ++i) z(i) = rng.gaussian();
        const Eigen::Matrix<double, 5, 1> force_noise = force_chol * z;
        for (int i = 0; i < 5; ++i) {
            noisy.angle_deg[i][t] = std::clamp(
                noisy.angle_deg[i][t] +
                    cfg.angle_noise_sigma_deg[i] * angle_noise(i),
                0.0, kAngleUpperBoundDeg);
            if (t >= tm.contact && force_target(i) > 0.0) {
                noisy.force_n[i][t] = std::clamp(
                    noisy.force_n[i][t] +
                        cfg.force_noise_sigma_n[i] * force_noise(i),
                    0.0, kMaxFingertipForceN);
            }
        }
    }

    return SyntheticTrial{GraspTrial{std::move(meta), std::move(noisy)},
                          std::move(truth)};
}

SyntheticDataset synthesize_dataset(const SyntheticConfig& cfg) {
    SyntheticConfig resolved = cfg;
    if (resolved.subjects.empty()) {
        resolved.subjects = SyntheticConfig::default_subjects();
    }
    if (resolved.objects.empty()) {
        resolved.objects = SyntheticConfig::default_object_grid();
    }
    if (resolved.synergy.loadings.size() == 0) {
        resolved.synergy = SyntheticConfig::default_synergy();
    }

    SyntheticDataset out;
    out.manifest.subjects = resolved.subjects;
    for (const std::string& subject : resolved.subjects) {
        for (const ObjectSpec& object : resolved.objects) {
            for (int k = 1; k <= resolved.trials_per_object; ++k) {
                SyntheticTrial made =
                    synthesize_trial(resolved, subject, object, k);
                ManifestTrial entry;
                entry.file = subject + "/" +
                             std::string(abbreviation(object.grasp_type)) +
                             "_" + sanitize(object.name) + "_t" +
                             std::to_string(k) + ".csv";
                entry.meta = made.trial.meta;
                out.manifest.trials.push_back(std::move(entry));
                out.trials.push_back(std::move(made.trial));
                out.ground_truth.trials.push_back(std::move(made.truth));
            }
        }
    }
    return out;
}

std::filesystem::path write_synthetic_dataset(
    const SyntheticConfig& cfg, const std::filesystem::path& out_dir) {
    SyntheticDataset dataset = synthesize_dataset(cfg);
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < dataset.trials.size(); ++i) {
        const std::filesystem::path file =
            out_dir / dataset.manifest.trials[i].file;
        std::filesystem::create_directories(file.parent_path());
        write_trial_csv(file, dataset.trials[i].series);
    }
    const std::filesystem::path manifest_path = out_dir / "manifest.json";
    write_manifest(manifest_path, dataset.manifest);
    write_ground_truth(out_dir / "ground_truth.json", dataset.ground_truth);
    return manifest_path;
}

std::string ground_truth_json_string(const GroundTruth& truth) {
    ordered_json root;
    root["version"] = 1;
    ordered_json trials = ordered_json::array();
    for (const auto& trial : truth.trials) trials.push_back(truth_to_json(trial));
    root["trials"] = std::move(trials);
    return root.dump(2) + "\n";
}

void write_ground_truth(const std::filesystem::path& path,
                        const GroundTruth& truth) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraspError("cannot open " + path.string() + " for writing");
    }
    out << ground_truth_json_string(truth);
}

GroundTruth read_ground_truth(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraspError("cannot open " + path.string());
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
        GroundTruth truth;
        for (const auto& row : root.at("trials")) {
            truth.trials.push_back(truth_from_json(row));
        }
        return truth;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string(), 0, e.what());
    }
}

}  // namespace graspsyn
