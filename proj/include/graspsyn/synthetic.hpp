#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graspsyn/dataset.hpp"
#include "graspsyn/segmentation.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

// Phase plan in sample indices. Degenerate (equal) boundaries collapse
// the corresponding segment; all-zero timings give a flat trial whose
// channels sit at their hold targets from sample 0.
struct PhaseTimings {
    std::size_t approach_onset = 120;
    std::size_t contact = 200;
    std::size_t lift = 480;
    std::size_t hold = 600;
};

// Planted synergy model. Channel order of the 10-vectors and of the
// loading matrix columns: 5 flex angles then 5 fingertip forces, both in
// kFingers order. Per-trial hold targets are
//   base_profile + loadings^T (coordinates[type] + jitter) + target noise
// so every graspable trial's noiseless features lie in an affine
// subspace of dimension <= rank(loadings).
struct SynergyPlant {
    Eigen::MatrixXd loadings;        // rank x 10
    Eigen::VectorXd base_profile;    // 10
    Eigen::VectorXd coefficient_sigma;  // rank
    // Jitter is a truncated normal: sigma * z with |z| <= jitter_bound,
    // which bounds coefficient excursions and keeps all channels positive.
    double jitter_bound = 2.0;
    std::map<GraspType, Eigen::VectorXd> coordinates;  // graspable types
    // Heavier objects recruit more grip: the first coordinate is shifted
    // by mass_coefficient_per_kg * (mass_kg - reference_mass_kg).
    double mass_coefficient_per_kg = 1.2;
    double reference_mass_kg = 0.15;
    // Fixed flex-angle profiles for the no-grasp-force configurations.
    std::map<GraspType, Eigen::VectorXd> fixed_postures;
};

struct SyntheticConfig {
    std::uint64_t seed = 42;
    std::vector<std::string> subjects;  // empty -> S01..S10
    std::vector<ObjectSpec> objects;    // empty -> default_object_grid()
    int trials_per_object = 1;
    double scan_rate_hz = 40.0;
    double duration_s = 30.0;
    PhaseTimings timings;

    // Waveform shape.
    std::size_t angle_rise_samples = 60;
    std::size_t force_rise_samples = 24;
    // Pre-lift force plateau as a fraction of the hold target.
    double grasp_level_fraction = 0.8;
    // Transient between lift and hold: a linear glide to the hold target
    // with a cosine swing that ends sharply at the hold sample.
    std::size_t swing_period = 16;
    double swing_fraction = 0.35;
    double swing_floor_n = 0.4;  // applied to the strongest channel

    SynergyPlant synergy;

    // Per-sample measurement noise (drives the waveform and the planted
    // channel correlations).
    std::array<double, 5> angle_noise_sigma_deg{0.1, 0.1, 0.1, 0.1, 0.1};
    std::array<double, 5> force_noise_sigma_n{0.02, 0.02, 0.02, 0.02, 0.02};
    Eigen::Matrix<double, 5, 5> angle_noise_correlation =
        Eigen::Matrix<double, 5, 5>::Identity();
    Eigen::Matrix<double, 5, 5> force_noise_correlation =
        Eigen::Matrix<double, 5, 5>::Identity();

    // Per-trial Gaussian noise added to the hold targets themselves (the
    // off-synergy residual in the explained-variance bound).
    std::array<double, 5> angle_target_sigma_deg{0.25, 0.25, 0.25, 0.25, 0.25};
    std::array<double, 5> force_target_sigma_n{0.03, 0.03, 0.03, 0.03, 0.03};

    // Segmentation semantics used to derive the ground-truth boundaries
    // from the noiseless waveform.
    SegmentationConfig truth_segmentation;

    static SynergyPlant default_synergy();
    static std::vector<std::string> default_subjects(int count = 10);
    // Catalog deduplicated by object name (25 distinct objects).
    static std::vector<ObjectSpec> default_object_grid();
};

struct TrialGroundTruth {
    std::string subject_id;
    std::string object_name;
    GraspType grasp_type = GraspType::PulpPinch;
    int trial_index = 1;
    // Absent when the trial has no contact (Platform / IndexPointing).
    std::optional<PhaseAnnotation> boundaries;
    // Absent for the fixed-posture configurations.
    std::optional<std::vector<double>> synergy_coefficients;
    std::array<double, 5> hold_force_n{};
    std::array<double, 5> hold_angle_deg{};
};

struct GroundTruth {
    std::vector<TrialGroundTruth> trials;
};

std::string ground_truth_json_string(const GroundTruth& truth);
void write_ground_truth(const std::filesystem::path& path,
                        const GroundTruth& truth);
GroundTruth read_ground_truth(const std::filesystem::path& path);

struct SyntheticTrial {
    GraspTrial trial;
    TrialGroundTruth truth;
};

// Deterministic per (seed, subject, object, grasp type, trial index).
SyntheticTrial synthesize_trial(const SyntheticConfig& cfg,
                                const std::string& subject,
                                const ObjectSpec& object, int trial_index);

struct SyntheticDataset {
    DatasetManifest manifest;
    std::vector<GraspTrial> trials;  // same order as manifest.trials
    GroundTruth ground_truth;
};

SyntheticDataset synthesize_dataset(const SyntheticConfig& cfg);

// Writes manifest.json, ground_truth.json and per-subject CSV directories.
// Returns the manifest path.
std::filesystem::path write_synthetic_dataset(
    const SyntheticConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace graspsyn
