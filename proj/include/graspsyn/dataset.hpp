#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "graspsyn/segmentation.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

// One manifest row; file is relative to the manifest's directory.
struct ManifestTrial {
    std::string file;
    TrialMeta meta;
};

struct DatasetManifest {
    int version = 1;
    std::vector<std::string> subjects;
    std::vector<ManifestTrial> trials;
};

std::string manifest_json_string(const DatasetManifest& manifest);
void write_manifest(const std::filesystem::path& path,
                    const DatasetManifest& manifest);
DatasetManifest read_manifest(const std::filesystem::path& path);

struct TrialRecord {
    TrialMeta meta;
    TrialSeries series;
    std::filesystem::path source;
    ValidationReport validation;
};

// Loaded trials in canonical order (subject, grasp type, object name,
// trial index), independent of manifest order.
struct Dataset {
    std::filesystem::path root;
    std::vector<TrialRecord> trials;
};

struct DatasetLoadResult {
    Dataset dataset;
    // Missing files, parse failures, duplicate keys, validation failures.
    std::vector<std::string> problems;
};

// Accepts either the manifest file itself or a directory containing
// manifest.json. Keeps parseable trials and reports problems.
DatasetLoadResult load_dataset_lenient(const std::filesystem::path& path);

// Same, but throws DatasetError when any problem was found.
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace graspsyn
