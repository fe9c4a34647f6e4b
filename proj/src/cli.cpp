#include "graspsyn/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <json.hpp>

#include "graspsyn/dataset.hpp"
#include "graspsyn/errors.hpp"
#include "graspsyn/features.hpp"
#include "graspsyn/force_mass.hpp"
#include "graspsyn/pca.hpp"
#include "graspsyn/radar.hpp"
#include "graspsyn/segmentation.hpp"
#include "graspsyn/stats.hpp"
#include "graspsyn/svg.hpp"
#include "graspsyn/synthetic.hpp"
#include "graspsyn/tsne.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct CliOptions {
    std::string dataset;
    std::string out;
    std::string domain = "force";
    std::uint64_t seed = 0;
    double perplexity = 30.0;
    int iterations = 1000;
    double f_on = kDefaultContactThresholdN;
    double hold_std = 0.05;
    bool decomposed = false;
    bool zscore = false;
    int subjects = 10;
    int trials_per_object = 1;
};

std::string format_g9(double value) {
    std::array<char, 40> buffer;
    const auto result =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                      std::chars_format::general, 9);
    return std::string(buffer.data(), result.ptr);
}

void write_text_file(const fs::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw GraspError("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw GraspError("write failed: " + path.string());
    }
}

void note(const fs::path& path) {
    std::cout << "wrote " << path.generic_string() << "\n";
}

void write_json_file(const fs::path& path, const ordered_json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
    note(path);
}

void write_run_info(const fs::path& out_dir, const std::string& command,
                    const ordered_json& options) {
    ordered_json info;
    info["tool"] = "graspsyn";
    info["command"] = command;
    info["options"] = options;
    write_json_file(out_dir / "run_info.json", info);
}

int fail(const fs::path& out_dir, const std::string& command,
         const std::string& kind, const std::string& message,
         const std::vector<std::string>& problems) {
    ordered_json error;
    error["kind"] = kind;
    error["message"] = message;
    if (!problems.empty()) {
        error["problems"] = problems;
    }
    ordered_json record;
    record["command"] = command;
    record["error"] = error;
    try {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        write_text_file(out_dir / "error.json", record.dump(2) + "\n");
    } catch (const std::exception&) {
        // The record still reaches stderr below.
    }
    std::cerr << "graspsyn " << command << ": " << message << "\n";
    return 1;
}

template <typename Body>
int guarded(const fs::path& out_dir, const std::string& command, Body&& body) {
    try {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) {
            throw GraspError("cannot create output directory " +
                             out_dir.string() + ": " + ec.message());
        }
        body();
        return 0;
    } catch (const DatasetError& e) {
        return fail(out_dir, command, "dataset", e.what(), e.problems);
    } catch (const GraspError& e) {
        return fail(out_dir, command, "analysis", e.what(), {});
    } catch (const std::invalid_argument& e) {
        return fail(out_dir, command, "analysis", e.what(), {});
    } catch (const std::exception& e) {
        return fail(out_dir, command, "internal", e.what(), {});
    }
}

SegmentationConfig segmentation_config(const CliOptions& opts) {
    SegmentationConfig cfg;
    cfg.f_on_n = opts.f_on;
    cfg.hold_std_n = opts.hold_std;
    return cfg;
}

// Load problems are diagnostics; sorted so record content does not
// depend on manifest row order.
Dataset load_lenient(const CliOptions& opts,
                     std::vector<std::string>& problems) {
    DatasetLoadResult loaded = load_dataset_lenient(opts.dataset);
    problems = std::move(loaded.problems);
    std::sort(problems.begin(), problems.end());
    return std::move(loaded.dataset);
}

std::vector<std::string> feature_names(SignalDomain domain, bool decomposed) {
    std::vector<std::string> names;
    if (domain == SignalDomain::Force) {
        for (FingerId f : kFingers) {
            names.push_back("f_" + std::string(to_string(f)));
        }
        return names;
    }
    if (!decomposed) {
        for (FingerId f : kFingers) {
            names.push_back("a_" + std::string(to_string(f)));
        }
        return names;
    }
    for (FingerId f : kFingers) {
        const std::string finger(to_string(f));
        names.push_back(finger + "_mcp");
        names.push_back(finger + (f == FingerId::Thumb ? "_ip" : "_pip"));
        names.push_back(finger + "_dip");
    }
    return names;
}

struct FeatureTable {
    std::vector<std::string> labels;
    std::vector<GraspType> types;
    std::vector<std::string> names;
    Eigen::MatrixXd x;
};

FeatureTable feature_table(const HoldExtraction& extraction,
                           SignalDomain domain, bool decomposed) {
    if (extraction.trials.empty()) {
        throw InsufficientDataError("no usable trials in the dataset");
    }
    FeatureTable table;
    std::vector<std::vector<double>> rows;
    rows.reserve(extraction.trials.size());
    for (const TrialHold& hold : extraction.trials) {
        rows.push_back(feature_vector(hold.features, domain, decomposed));
        table.labels.push_back(trial_label(hold.meta));
        table.types.push_back(hold.meta.object.grasp_type);
    }
    table.names = feature_names(domain, decomposed);
    table.x = to_matrix(rows);
    return table;
}

Eigen::MatrixXd standardized(const Eigen::MatrixXd& x) {
    const double n = static_cast<double>(x.rows());
    const Eigen::RowVectorXd mean = x.colwise().mean();
    Eigen::MatrixXd centered = x.rowwise() - mean;
    Eigen::RowVectorXd sd =
        (centered.array().square().colwise().sum() / (n - 1.0)).sqrt();
    for (Eigen::Index j = 0; j < sd.size(); ++j) {
        if (!(sd(j) > 0.0)) sd(j) = 1.0;  // constant column: leave centered
    }
    return centered.array().rowwise() / sd.array();
}

ordered_json phases_json(const PhaseAnnotation& phases) {
    return ordered_json{{"approach_start", phases.approach_start},
                        {"grasp_start", phases.grasp_start},
                        {"lift_start", phases.lift_start},
                        {"hold_start", phases.hold_start},
                        {"hold_end", phases.hold_end}};
}

ordered_json matrix_json(const CorrelationMatrix& matrix) {
    ordered_json fingers = ordered_json::array();
    for (FingerId f : matrix.labels) {
        fingers.push_back(std::string(to_string(f)));
    }
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 5; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 5; ++j) {
            if (matrix.r[i][j].has_value()) {
                row.push_back(*matrix.r[i][j]);
            } else {
                row.push_back(nullptr);
            }
        }
        rows.push_back(std::move(row));
    }
    return ordered_json{{"fingers", fingers},
                        {"r", rows},
                        {"has_undefined", matrix.has_undefined}};
}

ordered_json correlations_json(const TypeCorrelations& correlations) {
    ordered_json by_type = ordered_json::object();
    for (const auto& [type, matrix] : correlations.by_type) {
        by_type[std::string(abbreviation(type))] = matrix_json(matrix);
    }
    return ordered_json{{"by_type", by_type},
                        {"warnings", correlations.warnings}};
}

ordered_json extrema_json(const std::vector<PairExtremum>& pairs) {
    ordered_json out = ordered_json::array();
    for (const PairExtremum& pair : pairs) {
        out.push_back(ordered_json{
            {"pair", std::string(to_string(pair.first)) + "-" +
                         std::string(to_string(pair.second))},
            {"max_r", pair.max_r},
            {"max_type", std::string(abbreviation(pair.max_type))},
            {"min_r", pair.min_r},
            {"min_type", std::string(abbreviation(pair.min_type))}});
    }
    return out;
}

void emit_validation(const Dataset& dataset,
                     const std::vector<std::string>& problems, double f_on,
                     const fs::path& out_dir) {
    ordered_json trials = ordered_json::array();
    std::size_t ok_count = 0;
    std::size_t no_contact = 0;
    for (const TrialRecord& record : dataset.trials) {
        const ValidationReport report =
            validate_trial(GraspTrial{record.meta, record.series}, f_on);
        ordered_json issues = ordered_json::array();
        for (const ValidationIssue& issue : report.issues) {
            issues.push_back(
                ordered_json{{"check", issue.check}, {"detail", issue.detail}});
        }
        ok_count += report.ok() ? 1 : 0;
        no_contact += report.no_contact ? 1 : 0;
        trials.push_back(ordered_json{
            {"trial", trial_label(record.meta)},
            {"file",
             record.source.lexically_relative(dataset.root).generic_string()},
            {"samples", record.series.samples()},
            {"ok", report.ok()},
            {"no_contact", report.no_contact},
            {"max_force_n", report.max_force_n},
            {"issues", issues}});
    }
    ordered_json doc;
    doc["trials"] = trials;
    doc["problems"] = problems;
    doc["summary"] = ordered_json{{"trials", dataset.trials.size()},
                                  {"ok", ok_count},
                                  {"no_contact", no_contact},
                                  {"problems", problems.size()}};
    write_json_file(out_dir / "validation.json", doc);
}

void emit_segments(const HoldExtraction& extraction,
                   const std::vector<std::string>& problems,
                   const fs::path& out_dir) {
    std::string csv =
        "trial,approach_start,grasp_start,lift_start,hold_start,hold_end\n";
    ordered_json rows = ordered_json::array();
    for (const TrialHold& hold : extraction.trials) {
        const PhaseAnnotation& p = hold.phases;
        const std::string label = trial_label(hold.meta);
        csv += label + "," + std::to_string(p.approach_start) + "," +
               std::to_string(p.grasp_start) + "," +
               std::to_string(p.lift_start) + "," +
               std::to_string(p.hold_start) + "," +
               std::to_string(p.hold_end) + "\n";
        rows.push_back(
            ordered_json{{"trial", label}, {"phases", phases_json(p)}});
    }
    write_text_file(out_dir / "segments.csv", csv);
    note(out_dir / "segments.csv");
    ordered_json doc;
    doc["trials"] = rows;
    doc["warnings"] = extraction.warnings;
    doc["problems"] = problems;
    write_json_file(out_dir / "segment.json", doc);
}

void emit_features(const HoldExtraction& extraction,
                   const std::vector<std::string>& problems, bool decomposed,
                   const fs::path& out_dir) {
    std::string csv = "trial,grasp_type,object,mass_g";
    for (FingerId f : kFingers) csv += ",f_" + std::string(to_string(f));
    csv += ",total_force_n";
    for (FingerId f : kFingers) csv += ",a_" + std::string(to_string(f));
    if (decomposed) {
        for (const std::string& name :
             feature_names(SignalDomain::Posture, true)) {
            csv += "," + name;
        }
    }
    csv += "\n";

    ordered_json rows = ordered_json::array();
    for (const TrialHold& hold : extraction.trials) {
        const std::string label = trial_label(hold.meta);
        const std::string abbrev(abbreviation(hold.meta.object.grasp_type));
        csv += label + "," + abbrev + "," + hold.meta.object.name + ",";
        if (hold.meta.object.mass_g.has_value()) {
            csv += format_g9(*hold.meta.object.mass_g);
        }
        for (double f : hold.features.mean_force_n) csv += "," + format_g9(f);
        csv += "," + format_g9(hold.features.total_force_n);
        for (double a : hold.features.mean_angle_deg) csv += "," + format_g9(a);
        std::vector<double> joints;
        if (decomposed) {
            joints =
                feature_vector(hold.features, SignalDomain::Posture, true);
            for (double j : joints) csv += "," + format_g9(j);
        }
        csv += "\n";

        ordered_json row;
        row["trial"] = label;
        row["grasp_type"] = abbrev;
        row["object"] = hold.meta.object.name;
        if (hold.meta.object.mass_g.has_value()) {
            row["mass_g"] = *hold.meta.object.mass_g;
        } else {
            row["mass_g"] = nullptr;
        }
        row["phases"] = phases_json(hold.phases);
        row["mean_force_n"] = hold.features.mean_force_n;
        row["total_force_n"] = hold.features.total_force_n;
        row["mean_angle_deg"] = hold.features.mean_angle_deg;
        if (decomposed) {
            row["posture_joint_deg"] = joints;
        }
        rows.push_back(std::move(row));
    }
    write_text_file(out_dir / "features.csv", csv);
    note(out_dir / "features.csv");
    ordered_json doc;
    doc["trials"] = rows;
    doc["warnings"] = extraction.warnings;
    doc["problems"] = problems;
    write_json_file(out_dir / "features.json", doc);
}

void emit_correlate(const Dataset& dataset,
                    const std::vector<std::string>& problems,
                    const CliOptions& opts, const fs::path& out_dir) {
    CorrelationOptions copt;
    copt.window = CorrelationWindow::FullTrial;
    copt.mode = CorrelationMode::WithinDomain;
    copt.f_on_n = opts.f_on;
    copt.segmentation = segmentation_config(opts);

    copt.domain = SignalDomain::Force;
    const TypeCorrelations force = grasp_type_correlations(dataset, copt);
    copt.domain = SignalDomain::Posture;
    const TypeCorrelations posture = grasp_type_correlations(dataset, copt);
    const CorrelationExtrema extrema =
        correlation_extrema(force.by_type, posture.by_type);

    ordered_json doc;
    doc["window"] = "full_trial";
    doc["force"] = correlations_json(force);
    doc["posture"] = correlations_json(posture);
    doc["extrema"] = ordered_json{{"force", extrema_json(extrema.force)},
                                  {"posture", extrema_json(extrema.posture)}};
    doc["problems"] = problems;
    write_json_file(out_dir / "correlate.json", doc);
}

ordered_json spokes_json(const RadarProfile& profile) {
    ordered_json spokes = ordered_json::array();
    for (const RadarSpoke& spoke : profile.spokes) {
        spokes.push_back(
            ordered_json{{"label", spoke.label}, {"radius", spoke.radius}});
    }
    return spokes;
}

void emit_radar(const HoldExtraction& extraction,
                const std::vector<std::string>& problems,
                const fs::path& out_dir) {
    const RadarProfiles profiles = radar_profiles(extraction);
    ordered_json posture = ordered_json::object();
    for (const auto& [type, profile] : profiles.posture) {
        posture[std::string(abbreviation(type))] = spokes_json(profile);
    }
    ordered_json force = ordered_json::object();
    ordered_json areas = ordered_json::object();
    for (const auto& [type, profile] : profiles.force) {
        force[std::string(abbreviation(type))] = spokes_json(profile);
        areas[std::string(abbreviation(type))] = radar_area(profile);
    }
    ordered_json doc;
    doc["posture"] = posture;
    doc["force"] = force;
    doc["force_pentagon_area"] = areas;
    doc["warnings"] = profiles.warnings;
    doc["problems"] = problems;
    write_json_file(out_dir / "radar.json", doc);

    if (!profiles.posture.empty()) {
        write_text_file(out_dir / "radar_posture.svg",
                        radar_chart_svg(profiles.posture,
                                        "Hold posture profiles (deg)"));
        note(out_dir / "radar_posture.svg");
    }
    if (!profiles.force.empty()) {
        write_text_file(
            out_dir / "radar_force.svg",
            radar_chart_svg(profiles.force, "Hold force profiles (N)"));
        note(out_dir / "radar_force.svg");
    }
}

void emit_forcemass(const HoldExtraction& extraction,
                    const std::vector<std::string>& problems,
                    const fs::path& out_dir) {
    std::vector<ForceMassModel> models;
    std::vector<std::string> warnings;
    for (GraspType type : kAllGraspTypes) {
        if (!is_graspable(type)) continue;
        try {
            models.push_back(force_mass_fit(extraction, type));
        } catch (const InsufficientDataError& e) {
            warnings.push_back(std::string(abbreviation(type)) + ": " +
                               e.what());
        }
    }
    ordered_json rows = ordered_json::array();
    for (const ForceMassModel& model : models) {
        ordered_json samples = ordered_json::array();
        for (const ForceMassPoint& point : model.samples) {
            samples.push_back(ordered_json{{"mass_g", point.mass_g},
                                           {"mean_force_n", point.mean_force_n},
                                           {"trials", point.trials}});
        }
        rows.push_back(ordered_json{
            {"grasp_type", std::string(abbreviation(model.grasp_type))},
            {"samples", samples}});
    }
    ordered_json doc;
    doc["models"] = rows;
    doc["warnings"] = warnings;
    doc["problems"] = problems;
    write_json_file(out_dir / "forcemass.json", doc);

    if (!models.empty()) {
        write_text_file(
            out_dir / "forcemass.svg",
            force_mass_chart_svg(models, "Hold force vs object mass"));
        note(out_dir / "forcemass.svg");
    }
}

void emit_pca(const HoldExtraction& extraction, SignalDomain domain,
              const CliOptions& opts, const fs::path& out_dir,
              const std::string& json_name, const std::string& scores_name,
              const std::string& scree_name,
              const std::vector<std::string>& problems) {
    const bool decomposed =
        domain == SignalDomain::Posture && opts.decomposed;
    const FeatureTable table = feature_table(extraction, domain, decomposed);
    PcaOptions popt;
    popt.zscore = opts.zscore;
    const PcaModel model = pca_fit(table.x, popt);
    const std::size_t elbow = elbow_select(model.explained);

    std::vector<double> explained(model.explained.data(),
                                  model.explained.data() +
                                      model.explained.size());
    std::vector<double> cumulative(explained.size());
    std::partial_sum(explained.begin(), explained.end(), cumulative.begin());

    ordered_json doc;
    doc["domain"] = std::string(to_string(domain));
    doc["zscore"] = opts.zscore;
    doc["decomposed"] = decomposed;
    doc["observations"] = table.x.rows();
    doc["features"] = table.names;
    doc["explained"] = explained;
    doc["cumulative"] = cumulative;
    doc["elbow"] = elbow;
    doc["mean"] = std::vector<double>(model.mean.data(),
                                      model.mean.data() + model.mean.size());
    doc["scale"] = std::vector<double>(model.scale.data(),
                                       model.scale.data() + model.scale.size());
    ordered_json components = ordered_json::array();
    for (Eigen::Index i = 0; i < model.components.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < model.components.cols(); ++j) {
            row.push_back(model.components(i, j));
        }
        components.push_back(std::move(row));
    }
    doc["components"] = components;
    doc["problems"] = problems;
    write_json_file(out_dir / json_name, doc);

    std::string csv = "trial,grasp_type";
    for (std::size_t c = 1; c <= explained.size(); ++c) {
        csv += ",pc" + std::to_string(c);
    }
    csv += "\n";
    for (Eigen::Index i = 0; i < table.x.rows(); ++i) {
        const Eigen::VectorXd scores =
            pca_project(model, table.x.row(i).transpose());
        csv += table.labels[static_cast<std::size_t>(i)] + "," +
               std::string(abbreviation(table.types[static_cast<std::size_t>(i)]));
        for (Eigen::Index c = 0; c < scores.size(); ++c) {
            csv += "," + format_g9(scores(c));
        }
        csv += "\n";
    }
    write_text_file(out_dir / scores_name, csv);
    note(out_dir / scores_name);

    const std::string title =
        "Explained variance (" + std::string(to_string(domain)) + ")";
    write_text_file(out_dir / scree_name,
                    scree_chart_svg(explained, elbow, title));
    note(out_dir / scree_name);
}

void emit_tsne(const HoldExtraction& extraction, const CliOptions& opts,
               const fs::path& out_dir,
               const std::vector<std::string>& problems) {
    const SignalDomain domain = domain_from_string(opts.domain);
    const FeatureTable table = feature_table(
        extraction, domain, domain == SignalDomain::Posture && opts.decomposed);
    const Eigen::MatrixXd x =
        opts.zscore ? standardized(table.x) : table.x;

    TsneOptions topt;
    topt.perplexity = opts.perplexity;
    topt.seed = opts.seed;
    topt.iterations = opts.iterations;
    const Embedding embedding = tsne_embed(x, topt);

    ordered_json points = ordered_json::array();
    for (Eigen::Index i = 0; i < embedding.points.rows(); ++i) {
        const auto row = static_cast<std::size_t>(i);
        points.push_back(ordered_json{
            {"trial", table.labels[row]},
            {"grasp_type", std::string(abbreviation(table.types[row]))},
            {"x", embedding.points(i, 0)},
            {"y", embedding.points(i, 1)}});
    }
    ordered_json doc;
    doc["domain"] = std::string(to_string(domain));
    doc["zscore"] = opts.zscore;
    doc["seed"] = embedding.seed;
    doc["perplexity"] = opts.perplexity;
    doc["iterations"] = opts.iterations;
    doc["observations"] = embedding.points.rows();
    doc["final_kl"] = embedding.final_kl;
    doc["points"] = points;
    doc["problems"] = problems;
    write_json_file(out_dir / "tsne.json", doc);

    const std::string title =
        "t-SNE embedding (" + std::string(to_string(domain)) + ")";
    write_text_file(out_dir / "tsne.svg",
                    scatter_chart_svg(embedding, table.types, title));
    note(out_dir / "tsne.svg");
}

// The output directory is where run_info.json itself lives, so it is
// omitted: recorded options are exactly the ones that shape content,
// and equal invocations produce byte-identical output directories.
ordered_json analysis_options_json(const CliOptions& opts) {
    return ordered_json{{"dataset", opts.dataset},
                        {"f_on_n", opts.f_on},
                        {"hold_std_n", opts.hold_std}};
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CliOptions opts;
    CLI::App app{
        "grasp-synergy analysis toolkit: synthesizes instrumented data-glove "
        "trials, segments grasp phases and extracts correlation / PCA / "
        "t-SNE synergies"};
    app.name("graspsyn");
    app.require_subcommand(1);

    const auto add_dataset = [&opts](CLI::App* cmd) {
        cmd->add_option("--dataset", opts.dataset,
                        "dataset directory or manifest.json")
            ->required();
    };
    const auto add_out = [&opts](CLI::App* cmd) {
        cmd->add_option("--out", opts.out,
                        "output directory (created if absent)")
            ->required();
    };
    const auto add_segmentation = [&opts](CLI::App* cmd) {
        cmd->add_option("--f-on", opts.f_on, "contact threshold in newtons")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--hold-std", opts.hold_std,
                        "hold stability threshold in newtons")
            ->check(CLI::PositiveNumber);
    };
    const auto add_domain = [&opts](CLI::App* cmd) {
        cmd->add_option("--domain", opts.domain,
                        "feature domain (default force)")
            ->check(CLI::IsMember({"force", "posture"}));
    };
    const auto add_decomposed = [&opts](CLI::App* cmd) {
        cmd->add_flag("--decomposed", opts.decomposed,
                      "use the 15 decomposed joint angles for posture");
    };
    const auto add_zscore = [&opts](CLI::App* cmd) {
        cmd->add_flag("--zscore", opts.zscore,
                      "standardize feature columns before the analysis");
    };

    CLI::App* simulate =
        app.add_subcommand("simulate", "write a seeded synthetic dataset");
    simulate->add_option("--seed", opts.seed, "generator seed")->required();
    simulate
        ->add_option("--subjects", opts.subjects,
                     "number of subjects (default 10)")
        ->check(CLI::PositiveNumber);
    simulate
        ->add_option("--trials-per-object", opts.trials_per_object,
                     "repetitions per subject and object (default 1)")
        ->check(CLI::PositiveNumber);
    add_out(simulate);

    CLI::App* validate =
        app.add_subcommand("validate", "per-trial structural checks");
    add_dataset(validate);
    add_out(validate);
    validate->add_option("--f-on", opts.f_on, "contact threshold in newtons")
        ->check(CLI::NonNegativeNumber);

    CLI::App* segment =
        app.add_subcommand("segment", "phase boundaries per trial");
    add_dataset(segment);
    add_out(segment);
    add_segmentation(segment);

    CLI::App* features =
        app.add_subcommand("features", "hold-phase feature table");
    add_dataset(features);
    add_out(features);
    add_segmentation(features);
    add_decomposed(features);

    CLI::App* correlate = app.add_subcommand(
        "correlate", "per-type finger correlation matrices and extrema");
    add_dataset(correlate);
    add_out(correlate);
    add_segmentation(correlate);

    CLI::App* radar = app.add_subcommand(
        "radar", "per-type hold profiles, pentagon areas and radar charts");
    add_dataset(radar);
    add_out(radar);
    add_segmentation(radar);

    CLI::App* forcemass = app.add_subcommand(
        "forcemass", "grip force vs object mass interpolation");
    add_dataset(forcemass);
    add_out(forcemass);
    add_segmentation(forcemass);

    CLI::App* pca = app.add_subcommand(
        "pca", "principal components of the hold features");
    add_dataset(pca);
    add_out(pca);
    add_domain(pca);
    add_zscore(pca);
    add_decomposed(pca);
    add_segmentation(pca);

    CLI::App* tsne =
        app.add_subcommand("tsne", "2-D t-SNE embedding of the hold features");
    add_dataset(tsne);
    add_out(tsne);
    add_domain(tsne);
    tsne->add_option("--seed", opts.seed, "embedding initialization seed")
        ->required();
    tsne->add_option("--perplexity", opts.perplexity, "t-SNE perplexity")
        ->check(CLI::PositiveNumber);
    tsne->add_option("--iterations", opts.iterations,
                     "gradient-descent iterations")
        ->check(CLI::PositiveNumber);
    add_zscore(tsne);
    add_decomposed(tsne);
    add_segmentation(tsne);

    CLI::App* report = app.add_subcommand(
        "report", "full analysis report into one directory");
    add_dataset(report);
    add_out(report);
    report->add_option("--seed", opts.seed, "embedding initialization seed")
        ->required();
    add_domain(report);
    report->add_option("--perplexity", opts.perplexity, "t-SNE perplexity")
        ->check(CLI::PositiveNumber);
    report->add_option("--iterations", opts.iterations,
                       "gradient-descent iterations")
        ->check(CLI::PositiveNumber);
    add_zscore(report);
    add_decomposed(report);
    add_segmentation(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const fs::path out_dir = opts.out;

    if (app.got_subcommand(simulate)) {
        return guarded(out_dir, "simulate", [&] {
            SyntheticConfig cfg;
            cfg.seed = opts.seed;
            cfg.subjects = SyntheticConfig::default_subjects(opts.subjects);
            cfg.trials_per_object = opts.trials_per_object;
            const fs::path manifest = write_synthetic_dataset(cfg, out_dir);
            const DatasetManifest written = read_manifest(manifest);
            std::cout << "simulated " << written.trials.size() << " trials\n";
            note(manifest);
            write_run_info(out_dir, "simulate",
                           ordered_json{{"seed", opts.seed},
                                        {"subjects", opts.subjects},
                                        {"trials_per_object",
                                         opts.trials_per_object}});
        });
    }
    if (app.got_subcommand(validate)) {
        return guarded(out_dir, "validate", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            emit_validation(dataset, problems, opts.f_on, out_dir);
            write_run_info(out_dir, "validate",
                           ordered_json{{"dataset", opts.dataset},
                                        {"f_on_n", opts.f_on}});
        });
    }
    if (app.got_subcommand(segment)) {
        return guarded(out_dir, "segment", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_segments(extraction, problems, out_dir);
            write_run_info(out_dir, "segment", analysis_options_json(opts));
        });
    }
    if (app.got_subcommand(features)) {
        return guarded(out_dir, "features", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_features(extraction, problems, opts.decomposed, out_dir);
            ordered_json info = analysis_options_json(opts);
            info["decomposed"] = opts.decomposed;
            write_run_info(out_dir, "features", info);
        });
    }
    if (app.got_subcommand(correlate)) {
        return guarded(out_dir, "correlate", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            emit_correlate(dataset, problems, opts, out_dir);
            write_run_info(out_dir, "correlate", analysis_options_json(opts));
        });
    }
    if (app.got_subcommand(radar)) {
        return guarded(out_dir, "radar", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_radar(extraction, problems, out_dir);
            write_run_info(out_dir, "radar", analysis_options_json(opts));
        });
    }
    if (app.got_subcommand(forcemass)) {
        return guarded(out_dir, "forcemass", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_forcemass(extraction, problems, out_dir);
            write_run_info(out_dir, "forcemass", analysis_options_json(opts));
        });
    }
    if (app.got_subcommand(pca)) {
        return guarded(out_dir, "pca", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_pca(extraction, domain_from_string(opts.domain), opts,
                     out_dir, "pca.json", "pca_scores.csv", "pca_scree.svg",
                     problems);
            ordered_json info = analysis_options_json(opts);
            info["domain"] = opts.domain;
            info["zscore"] = opts.zscore;
            info["decomposed"] = opts.decomposed;
            write_run_info(out_dir, "pca", info);
        });
    }
    if (app.got_subcommand(tsne)) {
        return guarded(out_dir, "tsne", [&] {
            std::vector<std::string> problems;
            const Dataset dataset = load_lenient(opts, problems);
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_tsne(extraction, opts, out_dir, problems);
            ordered_json info = analysis_options_json(opts);
            info["domain"] = opts.domain;
            info["seed"] = opts.seed;
            info["perplexity"] = opts.perplexity;
            info["iterations"] = opts.iterations;
            info["zscore"] = opts.zscore;
            info["decomposed"] = opts.decomposed;
            write_run_info(out_dir, "tsne", info);
        });
    }
    if (app.got_subcommand(report)) {
        return guarded(out_dir, "report", [&] {
            DatasetLoadResult loaded = load_dataset_lenient(opts.dataset);
            if (!loaded.problems.empty()) {
                throw DatasetError(std::move(loaded.problems));
            }
            const Dataset& dataset = loaded.dataset;
            const std::vector<std::string> problems;
            const HoldExtraction extraction =
                extract_hold_features(dataset, segmentation_config(opts));
            emit_validation(dataset, problems, opts.f_on, out_dir);
            emit_segments(extraction, problems, out_dir);
            emit_features(extraction, problems, opts.decomposed, out_dir);
            emit_correlate(dataset, problems, opts, out_dir);
            emit_radar(extraction, problems, out_dir);
            emit_forcemass(extraction, problems, out_dir);
            emit_pca(extraction, SignalDomain::Force, opts, out_dir,
                     "pca_force.json", "pca_force_scores.csv",
                     "pca_force_scree.svg", problems);
            emit_pca(extraction, SignalDomain::Posture, opts, out_dir,
                     "pca_posture.json", "pca_posture_scores.csv",
                     "pca_posture_scree.svg", problems);
            emit_tsne(extraction, opts, out_dir, problems);
            ordered_json info = analysis_options_json(opts);
            info["seed"] = opts.seed;
            info["domain"] = opts.domain;
            info["perplexity"] = opts.perplexity;
            info["iterations"] = opts.iterations;
            info["zscore"] = opts.zscore;
            info["decomposed"] = opts.decomposed;
            write_run_info(out_dir, "report", info);
        });
    }
    std::cerr << "graspsyn: no subcommand selected\n";
    return 2;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("graspsyn");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace graspsyn
