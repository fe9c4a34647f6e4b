#include "graspsyn/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graspsyn/errors.hpp"

namespace graspsyn {

namespace {

constexpr double kDegenerateTolerance = 1e-12;

}  // namespace

PcaModel pca_fit(const Eigen::MatrixXd& x, const PcaOptions& options) {
    const Eigen::Index n = x.rows();
    const Eigen::Index d = x.cols();
    if (n < 2) throw std::invalid_argument("pca_fit needs >= 2 observations");
    if (d < 1) throw std::invalid_argument("pca_fit needs >= 1 feature");
    if (!x.allFinite()) {
        throw std::invalid_argument("pca_fit input has non-finite entries");
    }

    PcaModel model;
    model.mean = x.colwise().mean();
    Eigen::MatrixXd centered = x.rowwise() - model.mean.transpose();

    const double data_scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    if (centered.cwiseAbs().maxCoeff() <= kDegenerateTolerance * data_scale) {
        throw DegenerateDataError("all observations are identical");
    }

    model.scale = Eigen::VectorXd::Ones(d);
    if (options.zscore) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const double sd = std::sqrt(centered.col(j).squaredNorm() /
                                        static_cast<double>(n - 1));
            const double col_scale =
                std::max(1.0, x.col(j).cwiseAbs().maxCoeff());
            if (sd <= kDegenerateTolerance * col_scale) {
                throw DegenerateDataError(
                    "column " + std::to_string(j) +
                    " has zero variance and cannot be standardized");
            }
            model.scale(j) = sd;
        }
        centered.array().rowwise() /= model.scale.transpose().array();
    }

    const Eigen::MatrixXd covariance =
        centered.transpose() * centered / static_cast<double>(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }

    // Eigen returns ascending eigenvalues; flip to descending.
    Eigen::VectorXd values = solver.eigenvalues().reverse();
    Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();

    model.components = Eigen::MatrixXd(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        Eigen::VectorXd component = vectors.col(k);
        Eigen::Index largest = 0;
        component.cwiseAbs().maxCoeff(&largest);
        if (component(largest) < 0.0) component = -component;
        model.components.row(k) = component.transpose();
    }

    values = values.cwiseMax(0.0);
    const double total = values.sum();
    if (total <= 0.0) throw DegenerateDataError("zero total variance");
    model.explained = values / total;
    return model;
}

Eigen::VectorXd pca_project(const PcaModel& model,
                            const Eigen::VectorXd& observation) {
    if (observation.size() != model.mean.size()) {
        throw std::invalid_argument(
            "observation dimension does not match the model");
    }
    const Eigen::VectorXd standardized =
        (observation - model.mean).cwiseQuotient(model.scale);
    return model.components * standardized;
}

std::size_t elbow_select(std::span<const double> explained) {
    if (explained.empty()) {
        throw std::invalid_argument("empty explained-variance spectrum");
    }
    std::size_t d = explained.size();
    while (d > 1 && explained[d - 1] <= 0.0) --d;
    if (d <= 1) return 1;

    std::vector<double> cumulative(d);
    std::partial_sum(explained.begin(), explained.begin() + d,
                     cumulative.begin());

    // Chord from (1, cum_1) to (d, cum_d); the elbow maximizes the
    // vertical distance above it.
    const double slope =
        (cumulative[d - 1] - cumulative[0]) / static_cast<double>(d - 1);
    std::size_t best_k = 1;
    double best_distance = 0.0;
    for (std::size_t k = 1; k <= d; ++k) {
        const double chord = cumulative[0] + slope * static_cast<double>(k - 1);
        const double distance = cumulative[k - 1] - chord;
        if (distance > best_distance) {
            best_distance = distance;
            best_k = k;
        }
    }
    return best_k;
}

std::size_t elbow_select(const Eigen::VectorXd& explained) {
    return elbow_select(
        std::span<const double>(explained.data(),
                                static_cast<std::size_t>(explained.size())));
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("no feature rows");
    const std::size_t width = rows.front().size();
    if (width == 0) throw std::invalid_argument("empty feature rows");
    Eigen::MatrixXd x(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw std::invalid_argument("ragged feature rows");
        }
        for (std::size_t j = 0; j < width; ++j) x(i, j) = rows[i][j];
    }
    return x;
}

}  // namespace graspsyn
