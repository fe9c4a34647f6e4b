#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace graspsyn {

struct PcaOptions {
    // Standardize columns to unit variance before the decomposition.
    // A zero-variance column cannot be standardized and raises
    // DegenerateDataError.
    bool zscore = false;
};

struct PcaModel {
    Eigen::VectorXd mean;        // column means (D)
    Eigen::VectorXd scale;       // per-column divisor; all ones unless z-scored
    Eigen::MatrixXd components;  // D x D, rows orthonormal, descending variance
    Eigen::VectorXd explained;   // variance fractions, sums to 1
};

// Mean-centered sample-covariance eigendecomposition (divisor N-1).
// Rows of X are observations. Components are signed so each one's
// largest-magnitude loading is positive. Rank-0 input (all rows equal)
// raises DegenerateDataError.
PcaModel pca_fit(const Eigen::MatrixXd& x, const PcaOptions& options = {});

// Scores of one observation: components * ((obs - mean) / scale).
Eigen::VectorXd pca_project(const PcaModel& model,
                            const Eigen::VectorXd& observation);

// Knee of the cumulative explained-variance curve: the component count
// k in 1..D with the largest vertical distance above the chord from
// (1, cum_1) to (D, 1). Trailing zero-variance entries are ignored, so
// padding a spectrum with zeros does not move the elbow. A linear curve
// (all distances <= 0) gives k = 1.
std::size_t elbow_select(std::span<const double> explained);
std::size_t elbow_select(const Eigen::VectorXd& explained);

// Row-major assembly of a feature matrix; all rows must have equal,
// nonzero width.
Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows);

}  // namespace graspsyn
