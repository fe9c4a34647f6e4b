#include "graspsyn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graspsyn/errors.hpp"

namespace graspsyn {

namespace {

// Relative spread below which a series counts as constant.
constexpr double kConstantTolerance = 1e-12;

double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

// Samples of one trial entering the correlation, per domain/window.
struct ChannelSlice {
    const std::vector<double>* channel = nullptr;
    std::size_t begin = 0;
    std::size_t end = 0;
};

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("pearson: series lengths differ");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("pearson: need at least two samples");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    const double x_scale = std::max(1.0, max_abs(x));
    const double y_scale = std::max(1.0, max_abs(y));
    if (sxx <= n * (kConstantTolerance * x_scale) * (kConstantTolerance * x_scale) ||
        syy <= n * (kConstantTolerance * y_scale) * (kConstantTolerance * y_scale)) {
        throw UndefinedCorrelationError(
            "correlation undefined for a constant series");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace {

TypeCorrelations correlate_trials(
    const std::vector<std::pair<const TrialMeta*, const TrialSeries*>>& trials,
    const CorrelationOptions& options) {
    TypeCorrelations result;

    // Concatenated per-channel samples for each grasp type. Rows are the
    // correlation matrix's row channels, cols its column channels.
    struct Pool {
        std::array<std::vector<double>, 5> rows;
        std::array<std::vector<double>, 5> cols;
        int trials = 0;
    };
    const bool cross = options.mode == CorrelationMode::CrossDomain;
    std::map<GraspType, Pool> pools;

    for (const auto& [meta, series] : trials) {
        double max_f = 0.0;
        for (const auto& channel : series->force_n) {
            for (double v : channel) max_f = std::max(max_f, v);
        }
        if (max_f < options.f_on_n) {
            result.warnings.push_back(trial_label(*meta) +
                                      ": no contact, excluded");
            continue;
        }
        std::size_t begin = 0;
        std::size_t end = series->samples();
        if (options.window == CorrelationWindow::HoldOnly) {
            try {
                const PhaseAnnotation phases = segment_phases(
                    GraspTrial{*meta, *series}, options.segmentation);
                begin = phases.hold_start;
                end = phases.hold_end;
            } catch (const GraspError& e) {
                result.warnings.push_back(trial_label(*meta) + ": " + e.what());
                continue;
            }
        }
        Pool& pool = pools[meta->object.grasp_type];
        ++pool.trials;
        for (int i = 0; i < 5; ++i) {
            const std::vector<double>& row_src =
                cross || options.domain == SignalDomain::Force
                    ? series->force_n[i]
                    : series->angle_deg[i];
            const std::vector<double>& col_src =
                cross || options.domain == SignalDomain::Posture
                    ? series->angle_deg[i]
                    : series->force_n[i];
            pool.rows[i].insert(pool.rows[i].end(), row_src.begin() + begin,
                                row_src.begin() + end);
            pool.cols[i].insert(pool.cols[i].end(), col_src.begin() + begin,
                                col_src.begin() + end);
        }
    }

    for (auto& [type, pool] : pools) {
        CorrelationMatrix matrix;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                if (!cross && j < i) {
                    matrix.r[i][j] = matrix.r[j][i];
                    continue;
                }
                try {
                    matrix.r[i][j] = pearson(pool.rows[i], pool.cols[j]);
                } catch (const UndefinedCorrelationError&) {
                    matrix.r[i][j].reset();
                    matrix.has_undefined = true;
                }
            }
        }
        result.by_type.emplace(type, std::move(matrix));
    }
    return result;
}

}  // namespace

TypeCorrelations grasp_type_correlations(std::span<const GraspTrial> trials,
                                         const CorrelationOptions& options) {
    std::vector<std::pair<const TrialMeta*, const TrialSeries*>> view;
    view.reserve(trials.size());
    for (const GraspTrial& trial : trials) {
        view.emplace_back(&trial.meta, &trial.series);
    }
    return correlate_trials(view, options);
}

TypeCorrelations grasp_type_correlations(const Dataset& dataset,
                                         const CorrelationOptions& options) {
    std::vector<std::pair<const TrialMeta*, const TrialSeries*>> view;
    view.reserve(dataset.trials.size());
    for (const TrialRecord& record : dataset.trials) {
        view.emplace_back(&record.meta, &record.series);
    }
    return correlate_trials(view, options);
}

TypeCorrelations grasp_type_correlations(const Dataset& dataset,
                                         SignalDomain domain) {
    CorrelationOptions options;
    options.domain = domain;
    return grasp_type_correlations(dataset, options);
}

CorrelationExtrema correlation_extrema(
    const std::map<GraspType, CorrelationMatrix>& force_by_type,
    const std::map<GraspType, CorrelationMatrix>& posture_by_type) {
    CorrelationExtrema extrema;
    auto scan = [](const std::map<GraspType, CorrelationMatrix>& by_type,
                   std::vector<PairExtremum>& out) {
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                PairExtremum pair;
                pair.first = static_cast<FingerId>(i);
                pair.second = static_cast<FingerId>(j);
                bool any = false;
                for (const auto& [type, matrix] : by_type) {
                    const std::optional<double>& r = matrix.r[i][j];
                    if (!r) continue;
                    if (!any || *r > pair.max_r) {
                        pair.max_r = *r;
                        pair.max_type = type;
                    }
                    if (!any || *r < pair.min_r) {
                        pair.min_r = *r;
                        pair.min_type = type;
                    }
                    any = true;
                }
                if (any) out.push_back(pair);
            }
        }
    };
    scan(force_by_type, extrema.force);
    scan(posture_by_type, extrema.posture);
    return extrema;
}

}  // namespace graspsyn
