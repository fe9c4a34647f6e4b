#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace graspsyn {

struct TsneOptions {
    double perplexity = 30.0;
    std::uint64_t seed = 0;
    int iterations = 1000;
    // Early exaggeration: P scaled by `exaggeration` for the first
    // `exaggeration_iters` iterations.
    double exaggeration = 12.0;
    int exaggeration_iters = 250;
    double learning_rate = 200.0;
    double initial_momentum = 0.5;
    double final_momentum = 0.8;
    int momentum_switch_iter = 250;
};

struct Embedding {
    Eigen::MatrixXd points;  // N x 2
    double final_kl = 0.0;
    std::uint64_t seed = 0;
};

// Dense pairwise squared Euclidean distances; diagonal is zero.
Eigen::MatrixXd pairwise_squared_distances(const Eigen::MatrixXd& x);

// Row-stochastic conditional affinities P(j|i). Each row's Gaussian
// bandwidth is bisected until the distribution's Shannon entropy
// matches log(perplexity) within tol (or the bisection budget runs
// out, e.g. for exactly equidistant neighbours, where the entropy is
// independent of the bandwidth).
Eigen::MatrixXd conditional_affinities(const Eigen::MatrixXd& squared_distances,
                                       double perplexity, double tol = 1e-7);

// Symmetrized joint distribution: (C + C^T) normalized to sum 1, floored
// at 1e-12 off the diagonal.
Eigen::MatrixXd joint_affinities(const Eigen::MatrixXd& conditional);

// KL(P || Q) where Q is the Student-t (1 d.o.f.) kernel over the 2-D
// embedding y (N x 2).
double tsne_kl(const Eigen::MatrixXd& joint_p, const Eigen::MatrixXd& y);

// Analytic gradient of tsne_kl with respect to y:
// dC/dy_i = 4 * sum_j (p_ij - q_ij) * w_ij * (y_i - y_j).
Eigen::MatrixXd tsne_kl_gradient(const Eigen::MatrixXd& joint_p,
                                 const Eigen::MatrixXd& y);

// Exact t-SNE to two dimensions. Requires N >= 4 finite observations and
// perplexity in (0, N-1); the effective perplexity is additionally
// capped at (N-1)/3 for small inputs. Deterministic for a fixed seed.
Embedding tsne_embed(const Eigen::MatrixXd& x, const TsneOptions& options);
Embedding tsne_embed(const Eigen::MatrixXd& x, double perplexity,
                     std::uint64_t seed, int iterations = 1000);

}  // namespace graspsyn
