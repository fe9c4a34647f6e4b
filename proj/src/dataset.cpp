#include "graspsyn/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "graspsyn/errors.hpp"
#include "graspsyn/trial_csv.hpp"

namespace graspsyn {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json phases_to_json(const PhaseAnnotation& phases) {
    return ordered_json{{"approach_start", phases.approach_start},
                        {"grasp_start", phases.grasp_start},
                        {"lift_start", phases.lift_start},
                        {"hold_start", phases.hold_start},
                        {"hold_end", phases.hold_end}};
}

PhaseAnnotation phases_from_json(const nlohmann::json& j) {
    PhaseAnnotation phases;
    phases.approach_start = j.at("approach_start").get<std::size_t>();
    phases.grasp_start = j.at("grasp_start").get<std::size_t>();
    phases.lift_start = j.at("lift_start").get<std::size_t>();
    phases.hold_start = j.at("hold_start").get<std::size_t>();
    phases.hold_end = j.at("hold_end").get<std::size_t>();
    return phases;
}

}  // namespace

std::string manifest_json_string(const DatasetManifest& manifest) {
    ordered_json root;
    root["version"] = manifest.version;
    root["subjects"] = manifest.subjects;
    ordered_json trials = ordered_json::array();
    for (const auto& trial : manifest.trials) {
        ordered_json object{{"name", trial.meta.object.name},
                            {"grasp_type",
                             std::string(abbreviation(trial.meta.object.grasp_type))}};
        if (trial.meta.object.mass_g) {
            object["mass_g"] = *trial.meta.object.mass_g;
        } else {
            object["mass_g"] = nullptr;
        }
        ordered_json row{{"file", trial.file},
                         {"subject", trial.meta.subject_id},
                         {"object", std::move(object)},
                         {"trial_index", trial.meta.trial_index},
                         {"scan_rate_hz", trial.meta.scan_rate_hz},
                         {"duration_s", trial.meta.duration_s}};
        if (trial.meta.manual_phases) {
            row["phases"] = phases_to_json(*trial.meta.manual_phases);
        }
        trials.push_back(std::move(row));
    }
    root["trials"] = std::move(trials);
    return root.dump(2) + "\n";
}

void write_manifest(const std::filesystem::path& path,
                    const DatasetManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraspError("cannot open " + path.string() + " for writing");
    }
    out << manifest_json_string(manifest);
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraspError("cannot open " + path.string());
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string(), 0, e.what());
    }
    DatasetManifest manifest;
    try {
        manifest.version = root.at("version").get<int>();
        if (manifest.version != 1) {
            throw ParseError(path.string(), 0,
                             "unsupported manifest version " +
                                 std::to_string(manifest.version));
        }
        if (root.contains("subjects")) {
            manifest.subjects =
                root.at("subjects").get<std::vector<std::string>>();
        }
        for (const auto& row : root.at("trials")) {
            ManifestTrial trial;
            trial.file = row.at("file").get<std::string>();
            trial.meta.subject_id = row.at("subject").get<std::string>();
            const auto& object = row.at("object");
            trial.meta.object.name = object.at("name").get<std::string>();
            trial.meta.object.grasp_type = grasp_type_from_string(
                object.at("grasp_type").get<std::string>());
            if (object.contains("mass_g") && !object.at("mass_g").is_null()) {
                trial.meta.object.mass_g = object.at("mass_g").get<double>();
            }
            trial.meta.trial_index = row.at("trial_index").get<int>();
            trial.meta.scan_rate_hz = row.at("scan_rate_hz").get<double>();
            trial.meta.duration_s = row.at("duration_s").get<double>();
            if (row.contains("phases")) {
                trial.meta.manual_phases = phases_from_json(row.at("phases"));
            }
            manifest.trials.push_back(std::move(trial));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string(), 0, e.what());
    }
    return manifest;
}

DatasetLoadResult load_dataset_lenient(const std::filesystem::path& path) {
    std::filesystem::path manifest_path = path;
    if (std::filesystem::is_directory(manifest_path)) {
        manifest_path /= "manifest.json";
    }

    DatasetLoadResult result;
    result.dataset.root = manifest_path.parent_path();
    const DatasetManifest manifest = read_manifest(manifest_path);

    std::set<std::tuple<std::string, std::string, int, int>> keys;
    for (const auto& entry : manifest.trials) {
        const auto key = std::make_tuple(
            entry.meta.subject_id, entry.meta.object.name,
            static_cast<int>(entry.meta.object.grasp_type),
            entry.meta.trial_index);
        if (!keys.insert(key).second) {
            result.problems.push_back("duplicate trial key " +
                                      trial_label(entry.meta));
            continue;
        }
        if (entry.meta.object.mass_g && *entry.meta.object.mass_g >= 1500.0) {
            result.problems.push_back(
                trial_label(entry.meta) + ": object mass " +
                std::to_string(*entry.meta.object.mass_g) +
                " g exceeds the 1.5 kg protocol limit");
        }

        TrialRecord record;
        record.meta = entry.meta;
        record.source = result.dataset.root / entry.file;
        if (!std::filesystem::exists(record.source)) {
            result.problems.push_back(trial_label(entry.meta) +
                                      ": missing file " +
                                      record.source.string());
            continue;
        }
        try {
            record.series = read_trial_csv(record.source);
        } catch (const ParseError& e) {
            result.problems.push_back(trial_label(entry.meta) + ": " +
                                      e.what());
            continue;
        }
        GraspTrial trial{record.meta, record.series};
        record.validation = validate_trial(trial);
        if (!record.validation.ok()) {
            for (const auto& issue : record.validation.issues) {
                result.problems.push_back(trial_label(entry.meta) +
                                          ": validation failed [" +
                                          issue.check + "] " + issue.detail);
            }
        }
        result.dataset.trials.push_back(std::move(record));
    }

    std::sort(result.dataset.trials.begin(), result.dataset.trials.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return std::make_tuple(
                             a.meta.subject_id,
                             static_cast<int>(a.meta.object.grasp_type),
                             a.meta.object.name, a.meta.trial_index) <
                         std::make_tuple(
                             b.meta.subject_id,
                             static_cast<int>(b.meta.object.grasp_type),
                             b.meta.object.name, b.meta.trial_index);
              });
    return result;
}

Dataset load_dataset(const std::filesystem::path& path) {
    DatasetLoadResult result = load_dataset_lenient(path);
    if (!result.problems.empty()) throw DatasetError(result.problems);
    return std::move(result.dataset);
}

}  // namespace graspsyn
