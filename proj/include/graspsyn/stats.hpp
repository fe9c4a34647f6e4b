#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graspsyn/dataset.hpp"
#include "graspsyn/features.hpp"
#include "graspsyn/segmentation.hpp"
#include "graspsyn/types.hpp"

namespace graspsyn {

// Product-moment correlation coefficient. Lengths must match and be >= 2;
// a series whose relative spread is below numerical noise is treated as
// constant and raises UndefinedCorrelationError.
double pearson(std::span<const double> x, std::span<const double> y);

// Which samples of each trial enter the per-type correlations.
enum class CorrelationWindow { FullTrial, HoldOnly };

// WithinDomain correlates finger pairs inside the chosen domain (the
// matrix is symmetric with unit diagonal). CrossDomain correlates
// force channel (row) against flex-angle channel (column) and has no
// symmetry guarantees.
enum class CorrelationMode { WithinDomain, CrossDomain };

struct CorrelationOptions {
    SignalDomain domain = SignalDomain::Force;
    CorrelationWindow window = CorrelationWindow::FullTrial;
    CorrelationMode mode = CorrelationMode::WithinDomain;
    // Trials whose peak force stays below f_on_n carry no grasp signal
    // and are excluded. HoldOnly windows come from this segmentation.
    double f_on_n = kDefaultContactThresholdN;
    SegmentationConfig segmentation;
};

struct CorrelationMatrix {
    std::array<FingerId, 5> labels{FingerId::Thumb, FingerId::Index,
                                   FingerId::Middle, FingerId::Ring,
                                   FingerId::Pinky};
    // r[i][j] absent when the underlying correlation is undefined
    // (a constant channel); has_undefined mirrors that.
    std::array<std::array<std::optional<double>, 5>, 5> r{};
    bool has_undefined = false;
};

struct TypeCorrelations {
    std::map<GraspType, CorrelationMatrix> by_type;
    std::vector<std::string> warnings;  // skipped trials and types
};

TypeCorrelations grasp_type_correlations(std::span<const GraspTrial> trials,
                                         const CorrelationOptions& options);
TypeCorrelations grasp_type_correlations(const Dataset& dataset,
                                         const CorrelationOptions& options);
TypeCorrelations grasp_type_correlations(const Dataset& dataset,
                                         SignalDomain domain);

// Per finger pair: the grasp types attaining the largest and smallest
// defined correlation.
struct PairExtremum {
    FingerId first = FingerId::Thumb;
    FingerId second = FingerId::Index;
    double max_r = 0.0;
    GraspType max_type = GraspType::PulpPinch;
    double min_r = 0.0;
    GraspType min_type = GraspType::PulpPinch;
};

struct CorrelationExtrema {
    std::vector<PairExtremum> force;    // pairs with at least one defined r
    std::vector<PairExtremum> posture;
};

CorrelationExtrema correlation_extrema(
    const std::map<GraspType, CorrelationMatrix>& force_by_type,
    const std::map<GraspType, CorrelationMatrix>& posture_by_type);

}  // namespace graspsyn
