#include "graspsyn/tsne.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graspsyn/rng.hpp"

namespace graspsyn {

namespace {

constexpr double kTinyP = 1e-12;
constexpr int kBisectionBudget = 200;

// Entropy (nats) and probabilities of row i for bandwidth beta.
double row_entropy(const Eigen::MatrixXd& d2, Eigen::Index i, double beta,
                   Eigen::VectorXd& p) {
    const Eigen::Index n = d2.rows();
    double sum = 0.0;
    double weighted = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) {
            p(j) = 0.0;
            continue;
        }
        const double w = std::exp(-beta * d2(i, j));
        p(j) = w;
        sum += w;
        weighted += w * d2(i, j);
    }
    if (sum <= 0.0 || !std::isfinite(sum)) {
        // Bandwidth pushed every neighbour's weight to zero. The limit of
        // the row as beta grows is uniform over the nearest neighbours, so
        // split the mass across the minimal-distance ties.
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j != i) best = std::min(best, d2(i, j));
        }
        Eigen::Index ties = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j != i && d2(i, j) == best) ++ties;
        }
        p.setZero();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j != i && d2(i, j) == best) {
                p(j) = 1.0 / static_cast<double>(ties);
            }
        }
        return std::log(static_cast<double>(ties));
    }
    p /= sum;
    // H = log(sum) + beta * E[d2].
    return std::log(sum) + beta * weighted / sum;
}

}  // namespace

Eigen::MatrixXd pairwise_squared_distances(const Eigen::MatrixXd& x) {
    const Eigen::VectorXd norms = x.rowwise().squaredNorm();
    Eigen::MatrixXd d2 = -2.0 * x * x.transpose();
    d2.colwise() += norms;
    d2.rowwise() += norms.transpose();
    d2 = d2.cwiseMax(0.0);
    d2.diagonal().setZero();
    return d2;
}

Eigen::MatrixXd conditional_affinities(const Eigen::MatrixXd& squared_distances,
                                       double perplexity, double tol) {
    const Eigen::Index n = squared_distances.rows();
    if (squared_distances.cols() != n) {
        throw std::invalid_argument("distance matrix must be square");
    }
    if (n < 2) throw std::invalid_argument("need at least two points");
    if (!(perplexity > 0.0) ||
        perplexity >= static_cast<double>(n - 1) + 1e-12) {
        throw std::invalid_argument(
            "perplexity must be in (0, N-1) for N points");
    }
    const double target_entropy = std::log(perplexity);

    Eigen::MatrixXd conditional(n, n);
    Eigen::VectorXd p(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double beta = 1.0;
        double beta_lo = -std::numeric_limits<double>::infinity();
        double beta_hi = std::numeric_limits<double>::infinity();
        double entropy = row_entropy(squared_distances, i, beta, p);
        for (int step = 0;
             step < kBisectionBudget && std::abs(entropy - target_entropy) > tol;
             ++step) {
            if (entropy > target_entropy) {
                beta_lo = beta;
                beta = std::isfinite(beta_hi) ? 0.5 * (beta + beta_hi)
                                              : beta * 2.0;
            } else {
                beta_hi = beta;
                beta = std::isfinite(beta_lo) ? 0.5 * (beta + beta_lo)
                                              : beta * 0.5;
            }
            entropy = row_entropy(squared_distances, i, beta, p);
        }
        conditional.row(i) = p.transpose();
    }
    return conditional;
}

Eigen::MatrixXd joint_affinities(const Eigen::MatrixXd& conditional) {
    const Eigen::Index n = conditional.rows();
    Eigen::MatrixXd joint = conditional + conditional.transpose();
    joint /= joint.sum();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j) joint(i, j) = std::max(joint(i, j), kTinyP);
        }
    }
    joint.diagonal().setZero();
    return joint;
}

namespace {

// Student-t numerators w_ij = 1/(1+|y_i-y_j|^2) and their total sum.
Eigen::MatrixXd student_weights(const Eigen::MatrixXd& y, double& total) {
    const Eigen::Index n = y.rows();
    Eigen::MatrixXd w = pairwise_squared_distances(y);
    total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) {
                w(i, j) = 0.0;
            } else {
                w(i, j) = 1.0 / (1.0 + w(i, j));
                total += w(i, j);
            }
        }
    }
    return w;
}

}  // namespace

double tsne_kl(const Eigen::MatrixXd& joint_p, const Eigen::MatrixXd& y) {
    const Eigen::Index n = joint_p.rows();
    double total = 0.0;
    const Eigen::MatrixXd w = student_weights(y, total);
    double kl = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = std::max(joint_p(i, j), kTinyP);
            const double q = std::max(w(i, j) / total, kTinyP);
            kl += p * std::log(p / q);
        }
    }
    return kl;
}

Eigen::MatrixXd tsne_kl_gradient(const Eigen::MatrixXd& joint_p,
                                 const Eigen::MatrixXd& y) {
    const Eigen::Index n = joint_p.rows();
    double total = 0.0;
    const Eigen::MatrixXd w = student_weights(y, total);
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = std::max(joint_p(i, j), kTinyP);
            const double q = std::max(w(i, j) / total, kTinyP);
            const double mult = 4.0 * (p - q) * w(i, j);
            grad.row(i) += mult * (y.row(i) - y.row(j));
        }
    }
    return grad;
}

Embedding tsne_embed(const Eigen::MatrixXd& x, const TsneOptions& options) {
    const Eigen::Index n = x.rows();
    if (n < 4) throw std::invalid_argument("tsne_embed needs at least 4 points");
    if (!x.allFinite()) {
        throw std::invalid_argument("tsne_embed input has non-finite entries");
    }
    if (!(options.perplexity > 0.0) ||
        options.perplexity >= static_cast<double>(n - 1)) {
        throw std::invalid_argument(
            "perplexity must be in (0, N-1) for N points");
    }
    if (options.iterations < 1) {
        throw std::invalid_argument("iterations must be positive");
    }

    const double effective_perplexity =
        std::min(options.perplexity, static_cast<double>(n - 1) / 3.0);
    const Eigen::MatrixXd joint_p = joint_affinities(conditional_affinities(
        pairwise_squared_distances(x), effective_perplexity));

    SeededRng rng(options.seed);
    Eigen::MatrixXd y(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < 2; ++k) y(i, k) = 1e-4 * rng.gaussian();
    }

    Eigen::MatrixXd velocity = Eigen::MatrixXd::Zero(n, 2);
    Eigen::MatrixXd gains = Eigen::MatrixXd::Ones(n, 2);

    for (int iter = 0; iter < options.iterations; ++iter) {
        const bool exaggerated = iter < options.exaggeration_iters;
        const Eigen::MatrixXd grad = tsne_kl_gradient(
            exaggerated ? (options.exaggeration * joint_p).eval() : joint_p, y);
        const double momentum = iter < options.momentum_switch_iter
                                    ? options.initial_momentum
                                    : options.final_momentum;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index k = 0; k < 2; ++k) {
                const bool same_direction =
                    (grad(i, k) > 0.0) == (velocity(i, k) > 0.0);
                gains(i, k) = same_direction ? gains(i, k) * 0.8
                                             : gains(i, k) + 0.2;
                gains(i, k) = std::max(gains(i, k), 0.01);
                velocity(i, k) = momentum * velocity(i, k) -
                                 options.learning_rate * gains(i, k) *
                                     grad(i, k);
            }
        }
        y += velocity;
        y.rowwise() -= y.colwise().mean();
    }

    Embedding embedding;
    embedding.points = std::move(y);
    embedding.final_kl = tsne_kl(joint_p, embedding.points);
    embedding.seed = options.seed;
    return embedding;
}

Embedding tsne_embed(const Eigen::MatrixXd& x, double perplexity,
                     std::uint64_t seed, int iterations) {
    TsneOptions options;
    options.perplexity = perplexity;
    options.seed = seed;
    options.iterations = iterations;
    return tsne_embed(x, options);
}

}  // namespace graspsyn
