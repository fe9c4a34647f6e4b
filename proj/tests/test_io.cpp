#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "graspsyn/calibration_io.hpp"
#include "graspsyn/catalog.hpp"
#include "graspsyn/dataset.hpp"
#include "graspsyn/errors.hpp"
#include "graspsyn/sensors.hpp"
#include "graspsyn/synthetic.hpp"
#include "graspsyn/trial_csv.hpp"
#include "graspsyn/types.hpp"

using namespace graspsyn;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

SyntheticConfig small_config() {
    SyntheticConfig cfg;
    cfg.seed = 99;
    cfg.subjects = {"S01", "S02"};
    cfg.objects = {*find_object("Apple"),
                   *find_object("Chips Can"),
                   *find_object("Plate", GraspType::Platform)};
    return cfg;
}

}  // namespace

TEST_CASE("trial csv header and row count follow the protocol") {
    const SyntheticConfig cfg = small_config();
    const SyntheticTrial trial =
        synthesize_trial(cfg, "S01", *find_object("Apple"), 1);
    const std::string text = trial_csv_string(trial.trial.series);

    const std::string header = text.substr(0, text.find('\n'));
    CHECK(header == kTrialCsvHeader);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1201);
    CHECK(trial.trial.series.samples() == 1200);
}

TEST_CASE("trial csv round-trips within record precision") {
    const SyntheticConfig cfg = small_config();
    const SyntheticTrial trial =
        synthesize_trial(cfg, "S02", *find_object("Chips Can"), 1);
    const TrialSeries& original = trial.trial.series;

    const TrialSeries parsed =
        parse_trial_csv(trial_csv_string(original), "roundtrip");
    REQUIRE(parsed.samples() == original.samples());
    double worst = 0.0;
    for (std::size_t i = 0; i < original.samples(); ++i) {
        worst = std::max(worst, std::abs(parsed.t_s[i] - original.t_s[i]));
        for (int c = 0; c < 5; ++c) {
            worst = std::max(
                worst, std::abs(parsed.force_n[c][i] - original.force_n[c][i]));
            worst = std::max(worst, std::abs(parsed.angle_deg[c][i] -
                                             original.angle_deg[c][i]));
        }
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("trial csv parse errors carry 1-based rows") {
    const std::string header(kTrialCsvHeader);
    try {
        parse_trial_csv("t_s,nope\n", "bad");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row == 1);
        CHECK(e.file == "bad");
    }
    try {
        parse_trial_csv(header + "\n0,1,1,1,1,1,1,1,1,1\n", "short");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row == 2);  // 10 fields instead of 11
    }
    const std::string row = ",1,1,1,1,1,20,20,20,20,20\n";
    try {
        parse_trial_csv(header + "\n0" + row + "0" + row, "flat-time");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row == 3);  // non-monotone time base
    }
    CHECK_THROWS_AS(
        parse_trial_csv(header + "\n0,abc,1,1,1,1,1,1,1,1,1\n", "nan"),
        ParseError);
}

TEST_CASE("record formatting is exact enough and locale-free") {
    CHECK(format_record_value(0.025) == "0.025");
    CHECK(format_record_value(0.0) == "0");
    for (double v : {1.0 / 3.0, 29.975, 217.5, 19.6, 1e-9}) {
        const double back = std::stod(format_exact(v));
        CHECK(back == v);  // shortest-exact representation
    }
}

TEST_CASE("manifest round-trips") {
    const fs::path dir = fresh_dir("graspsyn_test_manifest");
    DatasetManifest manifest;
    manifest.subjects = {"S01", "S02"};
    TrialMeta meta;
    meta.subject_id = "S01";
    meta.object = *find_object("Apple");
    meta.trial_index = 2;
    PhaseAnnotation manual{10, 20, 30, 40, 1200};
    meta.manual_phases = manual;
    manifest.trials.push_back({"S01/SG_Apple_t2.csv", meta});

    write_manifest(dir / "manifest.json", manifest);
    const DatasetManifest back = read_manifest(dir / "manifest.json");
    REQUIRE(back.trials.size() == 1);
    CHECK(back.version == 1);
    CHECK(back.subjects == manifest.subjects);
    CHECK(back.trials[0].file == "S01/SG_Apple_t2.csv");
    CHECK(back.trials[0].meta.subject_id == "S01");
    CHECK(back.trials[0].meta.object.name == "Apple");
    CHECK(back.trials[0].meta.object.grasp_type == GraspType::SphericalGrasp);
    REQUIRE(back.trials[0].meta.manual_phases.has_value());
    CHECK(back.trials[0].meta.manual_phases->hold_start == 40);
}

TEST_CASE("ground truth sidecar round-trips") {
    const fs::path dir = fresh_dir("graspsyn_test_truth");
    const SyntheticConfig cfg = small_config();
    const SyntheticDataset data = synthesize_dataset(cfg);

    write_ground_truth(dir / "ground_truth.json", data.ground_truth);
    const GroundTruth back = read_ground_truth(dir / "ground_truth.json");
    REQUIRE(back.trials.size() == data.ground_truth.trials.size());
    for (std::size_t i = 0; i < back.trials.size(); ++i) {
        const TrialGroundTruth& a = data.ground_truth.trials[i];
        const TrialGroundTruth& b = back.trials[i];
        CHECK(a.subject_id == b.subject_id);
        CHECK(a.object_name == b.object_name);
        CHECK(a.grasp_type == b.grasp_type);
        CHECK(a.boundaries.has_value() == b.boundaries.has_value());
        if (a.boundaries) {
            CHECK(a.boundaries->grasp_start == b.boundaries->grasp_start);
            CHECK(a.boundaries->hold_start == b.boundaries->hold_start);
        }
        CHECK(a.synergy_coefficients.has_value() ==
              b.synergy_coefficients.has_value());
        for (int c = 0; c < 5; ++c) {
            CHECK(a.hold_force_n[c] == b.hold_force_n[c]);
            CHECK(a.hold_angle_deg[c] == b.hold_angle_deg[c]);
        }
    }

    // Fixed-posture trials carry neither boundaries nor coefficients.
    bool saw_platform = false;
    for (const TrialGroundTruth& t : back.trials) {
        if (t.grasp_type != GraspType::Platform) continue;
        saw_platform = true;
        CHECK(!t.boundaries.has_value());
        CHECK(!t.synergy_coefficients.has_value());
    }
    CHECK(saw_platform);
}

TEST_CASE("calibration file round-trips exactly") {
    GloveCalibration cal;
    cal.divider.v_cc_v = 3.3;
    cal.divider.r_pulldown_ohm = 51234.5678;
    for (int f = 0; f < 5; ++f) {
        cal.flex[f] = FlexCalibration{25000.0 + f * 101.3,
                                      100000.0 + f * 977.7, 90.0};
        const CapacitiveSensorModel model;
        std::vector<CalibrationSample> samples;
        for (int k = 0; k < 4 + f; ++k) {
            const double force = 17.0 * k / (3.0 + f);
            samples.push_back({capacitance_of_force_f(model, force), force});
        }
        cal.force[f] = fit_force_calibration(std::move(samples));
    }

    const std::string text = calibration_file_string(cal);
    const GloveCalibration back = parse_calibration_file(text, "cal");
    CHECK(back.divider.v_cc_v == cal.divider.v_cc_v);
    CHECK(back.divider.r_pulldown_ohm == cal.divider.r_pulldown_ohm);
    for (int f = 0; f < 5; ++f) {
        CHECK(back.flex[f].r_flat_ohm == cal.flex[f].r_flat_ohm);
        CHECK(back.flex[f].r_full_ohm == cal.flex[f].r_full_ohm);
        REQUIRE(back.force[f].knots.size() == cal.force[f].knots.size());
        for (std::size_t k = 0; k < cal.force[f].knots.size(); ++k) {
            CHECK(back.force[f].knots[k].capacitance_f ==
                  cal.force[f].knots[k].capacitance_f);
            CHECK(back.force[f].knots[k].force_n ==
                  cal.force[f].knots[k].force_n);
        }
    }

    CHECK_THROWS_AS(parse_calibration_file(text + "bogus.key = 1\n", "cal"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_calibration_file(text + "divider.v_cc_v = 5\n", "cal"),
        ParseError);  // duplicate
    CHECK_THROWS_AS(parse_calibration_file("version = 1\n", "cal"),
                    ParseError);  // missing keys
    CHECK_THROWS_AS(parse_calibration_file("version = 9\n", "cal"),
                    ParseError);
    CHECK_THROWS_AS(parse_calibration_file("no equals sign\n", "cal"),
                    ParseError);
}

TEST_CASE("dataset loads in canonical order regardless of manifest order") {
    const fs::path dir = fresh_dir("graspsyn_test_dataset");
    const SyntheticConfig cfg = small_config();
    const fs::path manifest_path = write_synthetic_dataset(cfg, dir);

    const Dataset first = load_dataset(dir);
    REQUIRE(first.trials.size() == 6);

    DatasetManifest manifest = read_manifest(manifest_path);
    std::shuffle(manifest.trials.begin(), manifest.trials.end(),
                 std::mt19937(7));
    write_manifest(manifest_path, manifest);

    const Dataset second = load_dataset(manifest_path);
    REQUIRE(second.trials.size() == first.trials.size());
    for (std::size_t i = 0; i < first.trials.size(); ++i) {
        CHECK(trial_label(first.trials[i].meta) ==
              trial_label(second.trials[i].meta));
    }
    // Canonical order groups by subject first.
    CHECK(first.trials.front().meta.subject_id == "S01");
    CHECK(first.trials.back().meta.subject_id == "S02");
}

TEST_CASE("lenient loading reports problems, strict loading throws") {
    const fs::path dir = fresh_dir("graspsyn_test_corrupt");
    const SyntheticConfig cfg = small_config();
    write_synthetic_dataset(cfg, dir);

    // Corrupt one file and delete another.
    const Dataset loaded = load_dataset(dir);
    const fs::path victim = loaded.trials[0].source;
    const fs::path missing = loaded.trials[1].source;
    fs::remove(missing);
    std::ofstream(victim, std::ios::binary) << "not,a,trial\n";

    const DatasetLoadResult lenient = load_dataset_lenient(dir);
    CHECK(lenient.dataset.trials.size() == 4);
    CHECK(lenient.problems.size() == 2);

    try {
        load_dataset(dir);
        FAIL("expected DatasetError");
    } catch (const DatasetError& e) {
        CHECK(e.problems.size() == 2);
    }

    CHECK_THROWS_AS(load_dataset(dir / "nonexistent"), GraspError);
}
