#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graspsyn/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

json read_json(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t line_count(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

// One small simulated dataset shared by the whole binary.
const fs::path& shared_dataset() {
    static const fs::path dir = [] {
        const fs::path d = fresh_dir("graspsyn_cli_dataset");
        const int rc = graspsyn::run_cli(
            {"simulate", "--seed", "42", "--subjects", "3", "--out",
             d.string()});
        REQUIRE(rc == 0);
        return d;
    }();
    return dir;
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
    CHECK(graspsyn::run_cli({}) == 2);
    CHECK(graspsyn::run_cli({"frobnicate"}) == 2);
    CHECK(graspsyn::run_cli({"simulate", "--out", "/tmp/x"}) == 2);  // no seed
    CHECK(graspsyn::run_cli({"pca", "--dataset", shared_dataset().string(),
                             "--out", "/tmp/x", "--domain", "sideways"}) == 2);
    CHECK(graspsyn::run_cli({"segment", "--dataset",
                             shared_dataset().string(), "--out", "/tmp/x",
                             "--frobnicate"}) == 2);
}

TEST_CASE("simulate writes a loadable dataset") {
    const fs::path& dir = shared_dataset();
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "ground_truth.json"));
    const json manifest = read_json(dir / "manifest.json");
    CHECK(manifest["trials"].size() == 75);  // 3 subjects x 25 objects
    const json info = read_json(dir / "run_info.json");
    CHECK(info["command"] == "simulate");
    CHECK(info["options"]["seed"] == 42);
}

TEST_CASE("validate summarizes every trial") {
    const fs::path out = fresh_dir("graspsyn_cli_validate");
    REQUIRE(graspsyn::run_cli({"validate", "--dataset",
                               shared_dataset().string(), "--out",
                               out.string()}) == 0);
    const json v = read_json(out / "validation.json");
    CHECK(v["summary"]["trials"] == 75);
    CHECK(v["summary"]["ok"] == 75);
    CHECK(v["summary"]["no_contact"] == 3);
    CHECK(v["problems"].empty());
}

TEST_CASE("segment writes one row per segmentable trial") {
    const fs::path out = fresh_dir("graspsyn_cli_segment");
    REQUIRE(graspsyn::run_cli({"segment", "--dataset",
                               shared_dataset().string(), "--out",
                               out.string()}) == 0);
    const std::string csv = read_text(out / "segments.csv");
    CHECK(csv.rfind("trial,approach_start,grasp_start,lift_start,hold_start,"
                    "hold_end\n", 0) == 0);
    CHECK(line_count(csv) == 73);  // header + 72 graspable trials
    const json record = read_json(out / "segment.json");
    CHECK(record["trials"].size() == 72);
    CHECK(record["warnings"].size() == 3);
}

TEST_CASE("pca records are deterministic and well-formed") {
    const fs::path out1 = fresh_dir("graspsyn_cli_pca1");
    const fs::path out2 = fresh_dir("graspsyn_cli_pca2");
    const std::vector<std::string> base = {
        "pca", "--dataset", shared_dataset().string(), "--domain", "posture"};
    std::vector<std::string> run1 = base;
    run1.insert(run1.end(), {"--out", out1.string()});
    std::vector<std::string> run2 = base;
    run2.insert(run2.end(), {"--out", out2.string()});
    REQUIRE(graspsyn::run_cli(run1) == 0);
    REQUIRE(graspsyn::run_cli(run2) == 0);

    const json record = read_json(out1 / "pca.json");
    CHECK(record["domain"] == "posture");
    CHECK(record["observations"] == 72);
    double total = 0.0;
    for (const auto& v : record["explained"]) total += v.get<double>();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(record["elbow"] == 3);

    CHECK(read_text(out1 / "pca.json") == read_text(out2 / "pca.json"));
    CHECK(read_text(out1 / "pca_scores.csv") ==
          read_text(out2 / "pca_scores.csv"));
}

TEST_CASE("tsne embeds every usable trial") {
    const fs::path out1 = fresh_dir("graspsyn_cli_tsne1");
    const fs::path out2 = fresh_dir("graspsyn_cli_tsne2");
    for (const fs::path* out : {&out1, &out2}) {
        REQUIRE(graspsyn::run_cli({"tsne", "--dataset",
                                   shared_dataset().string(), "--out",
                                   out->string(), "--seed", "7",
                                   "--perplexity", "12", "--iterations",
                                   "400"}) == 0);
    }
    const json record = read_json(out1 / "tsne.json");
    CHECK(record["points"].size() == 72);
    CHECK(record["seed"] == 7);
    CHECK(record["perplexity"] == 12);
    CHECK(std::isfinite(record["final_kl"].get<double>()));
    CHECK(read_text(out1 / "tsne.json") == read_text(out2 / "tsne.json"));
}

TEST_CASE("report refuses a corrupt dataset and names the trial") {
    // Work on a copy so the shared dataset stays intact.
    const fs::path copy = fresh_dir("graspsyn_cli_corrupt");
    fs::copy(shared_dataset(), copy, fs::copy_options::recursive |
                                         fs::copy_options::overwrite_existing);
    fs::remove(copy / "run_info.json");
    // Clobber the first S02 trial file named in the manifest.
    const json manifest = read_json(copy / "manifest.json");
    std::string victim;
    for (const auto& row : manifest["trials"]) {
        const std::string file = row["file"].get<std::string>();
        if (file.rfind("S02/", 0) == 0) {
            victim = file;
            break;
        }
    }
    REQUIRE(!victim.empty());
    std::ofstream(copy / victim, std::ios::binary) << "garbage\n";

    const fs::path out = fresh_dir("graspsyn_cli_report_fail");
    CHECK(graspsyn::run_cli({"report", "--dataset", copy.string(), "--out",
                             out.string(), "--seed", "7"}) == 1);
    const json error = read_json(out / "error.json");
    CHECK(error["command"] == "report");
    CHECK(error["error"]["kind"] == "dataset");
    bool names_subject = false;
    for (const auto& problem : error["error"]["problems"])
        if (problem.get<std::string>().find("S02") != std::string::npos)
            names_subject = true;
    CHECK(names_subject);
    CHECK(!fs::exists(out / "pca_force.json"));
    CHECK(!fs::exists(out / "tsne.json"));
}

TEST_CASE("report emits the full artifact set") {
    const fs::path out = fresh_dir("graspsyn_cli_report");
    REQUIRE(graspsyn::run_cli({"report", "--dataset",
                               shared_dataset().string(), "--out",
                               out.string(), "--seed", "7", "--iterations",
                               "300"}) == 0);
    for (const char* name :
         {"validation.json", "segment.json", "segments.csv", "features.json",
          "features.csv", "correlate.json", "radar.json", "radar_posture.svg",
          "radar_force.svg", "forcemass.json", "forcemass.svg",
          "pca_force.json", "pca_force_scores.csv", "pca_force_scree.svg",
          "pca_posture.json", "pca_posture_scores.csv",
          "pca_posture_scree.svg", "tsne.json", "tsne.svg", "run_info.json"}) {
        CAPTURE(name);
        CHECK(fs::exists(out / name));
    }
    const json correlate = read_json(out / "correlate.json");
    CHECK(correlate["window"] == "full_trial");
    CHECK(correlate["force"]["by_type"].contains("SG"));
    const json info = read_json(out / "run_info.json");
    CHECK(info["command"] == "report");
    CHECK(!info["options"].contains("out"));
}
