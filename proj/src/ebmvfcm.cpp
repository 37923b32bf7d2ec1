#include "mvfcm/ebmvfcm.hpp"

#include <cmath>
#include <limits>

#include "mvfcm/emvfcm.hpp"
#include "mvfcm/errors.hpp"
#include "mvfcm/restarts.hpp"
#include "mvfcm/simplex.hpp"

namespace mvfcm {

namespace {

void check_weights(const FeatureDistances& distances, const FeatureWeights& w) {
    if (w.size() != distances.size()) {
        throw ValidationError("feature weight view count does not match view count");
    }
    for (std::size_t h = 0; h < w.size(); ++h) {
        if (static_cast<std::size_t>(w[h].size()) != distances[h].size()) {
            throw ValidationError("feature weight length does not match d_h in view " + std::to_string(h));
        }
    }
}

}  // namespace

Matrix membership_costs_eb(const FeatureDistances& distances, const ViewWeights& view_weights,
                           const FeatureWeights& feature_weights, double alpha, double beta) {
    if (distances.empty() || static_cast<std::size_t>(view_weights.size()) != distances.size()) {
        throw ValidationError("view weight count does not match view count");
    }
    check_weights(distances, feature_weights);
    const auto& first = distances.front().front();
    Matrix costs = Matrix::Zero(first.rows(), first.cols());
    for (std::size_t h = 0; h < distances.size(); ++h) {
        const double vh = std::pow(view_weights(static_cast<Eigen::Index>(h)), alpha);
        for (std::size_t j = 0; j < distances[h].size(); ++j) {
            costs += vh * std::pow(feature_weights[h](static_cast<Eigen::Index>(j)), beta) * distances[h][j];
        }
    }
    return costs;
}

MembershipMatrix update_memberships_eb(const Matrix& costs, double m) {
    return update_memberships(costs, m);
}

Vector view_costs_eb(const FeatureDistances& distances, const MembershipMatrix& memberships,
                     const FeatureWeights& feature_weights, double m, double beta) {
    check_weights(distances, feature_weights);
    const Matrix um = memberships.array().pow(m).matrix();
    Vector e(static_cast<Eigen::Index>(distances.size()));
    for (std::size_t h = 0; h < distances.size(); ++h) {
        double total = 0.0;
        for (std::size_t j = 0; j < distances[h].size(); ++j) {
            total += std::pow(feature_weights[h](static_cast<Eigen::Index>(j)), beta) *
                     um.cwiseProduct(distances[h][j]).sum();
        }
        e(static_cast<Eigen::Index>(h)) = total;
    }
    return e;
}

ViewWeights update_view_weights_eb(const Vector& view_costs, double alpha) {
    return inverse_power_weights(view_costs, alpha);
}

std::vector<Vector> feature_costs(const FeatureDistances& distances, const MembershipMatrix& memberships,
                                  const ViewWeights& view_weights, double m, double alpha) {
    if (static_cast<std::size_t>(view_weights.size()) != distances.size()) {
        throw ValidationError("view weight count does not match view count");
    }
    const Matrix um = memberships.array().pow(m).matrix();
    std::vector<Vector> f;
    f.reserve(distances.size());
    for (std::size_t h = 0; h < distances.size(); ++h) {
        const double vh = std::pow(view_weights(static_cast<Eigen::Index>(h)), alpha);
        Vector fh(static_cast<Eigen::Index>(distances[h].size()));
        for (std::size_t j = 0; j < distances[h].size(); ++j) {
            fh(static_cast<Eigen::Index>(j)) = vh * um.cwiseProduct(distances[h][j]).sum();
        }
        f.push_back(std::move(fh));
    }
    return f;
}

FeatureWeights update_feature_weights(const std::vector<Vector>& feature_costs, double beta) {
    FeatureWeights w;
    w.reserve(feature_costs.size());
    for (const auto& fh : feature_costs) w.push_back(inverse_power_weights(fh, beta));
    return w;
}

CentroidSet update_centroids_eb(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                                const MembershipMatrix& memberships, const CentroidSet& previous,
                                double m, std::mt19937_64& rng) {
    const Matrix um = memberships.array().pow(m).matrix();
    const auto n = static_cast<Eigen::Index>(dataset.samples());
    CentroidSet next = previous;
    for (std::size_t h = 0; h < dataset.view_count(); ++h) {
        const auto& x = dataset.view(h).data;
        const auto& dl = delta[h];
        const auto& prev = previous[h];
        for (Eigen::Index k = 0; k < prev.rows(); ++k) {
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                double num = 0.0;
                double den = 0.0;
                double mass = 0.0;
                double plain = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double diff = x(i, j) - prev(k, j);
                    const double g = um(i, k) * std::exp(-dl(i, j) * diff * diff);
                    num += g * dl(i, j) * x(i, j);
                    den += g * dl(i, j);
                    mass += g;
                    plain += g * x(i, j);
                }
                if (!(mass > 0.0)) {
                    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
                    next[h](k, j) = x(pick(rng), j);
                } else {
                    next[h](k, j) = den > 0.0 ? num / den : plain / mass;
                }
            }
        }
    }
    return next;
}

double objective_ebmvfcm(const FeatureDistances& distances, const MembershipMatrix& memberships,
                         const ViewWeights& view_weights, const FeatureWeights& feature_weights,
                         double m, double alpha, double beta) {
    if (static_cast<std::size_t>(view_weights.size()) != distances.size()) {
        throw ValidationError("view weight count does not match view count");
    }
    for (const auto& view : distances) {
        for (const auto& d : view) {
            if (d.rows() != memberships.rows() || d.cols() != memberships.cols()) {
                throw ValidationError("membership shape does not match distance shape");
            }
        }
    }
    const Vector e = view_costs_eb(distances, memberships, feature_weights, m, beta);
    double j = 0.0;
    for (Eigen::Index h = 0; h < e.size(); ++h) j += std::pow(view_weights(h), alpha) * e(h);
    return j;
}

double objective_ebmvfcm(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                         const MembershipMatrix& memberships, const ViewWeights& view_weights,
                         const FeatureWeights& feature_weights, const CentroidSet& centroids,
                         const BiLevelConfig& config) {
    return objective_ebmvfcm(feature_distances(dataset, delta, centroids), memberships, view_weights,
                             feature_weights, config.m, config.alpha, config.beta);
}

FeatureWeights uniform_feature_weights(const MultiViewDataset& dataset) {
    FeatureWeights w;
    for (auto d : dataset.view_dims()) {
        w.push_back(Vector::Constant(static_cast<Eigen::Index>(d), 1.0 / static_cast<double>(d)));
    }
    return w;
}

FitResult fit_ebmvfcm_from(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                           CentroidSet centers, const BiLevelConfig& config, std::mt19937_64& rng) {
    const auto s = static_cast<Eigen::Index>(dataset.view_count());
    FitResult fit;
    fit.centroids = std::move(centers);
    fit.view_weights = ViewWeights::Constant(s, 1.0 / static_cast<double>(s));
    fit.feature_weights = uniform_feature_weights(dataset);

    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t <= config.max_iterations; ++t) {
        auto dist = feature_distances(dataset, delta, fit.centroids);
        fit.memberships = update_memberships_eb(
            membership_costs_eb(dist, fit.view_weights, fit.feature_weights, config.alpha, config.beta),
            config.m);
        fit.centroids = update_centroids_eb(dataset, delta, fit.memberships, fit.centroids, config.m, rng);
        dist = feature_distances(dataset, delta, fit.centroids);
        fit.view_weights = update_view_weights_eb(
            view_costs_eb(dist, fit.memberships, fit.feature_weights, config.m, config.beta), config.alpha);
        fit.feature_weights = update_feature_weights(
            feature_costs(dist, fit.memberships, fit.view_weights, config.m, config.alpha), config.beta);

        const double j = objective_ebmvfcm(dist, fit.memberships, fit.view_weights, fit.feature_weights,
                                           config.m, config.alpha, config.beta);
        if (!std::isfinite(j)) {
            throw NumericalError("objective became non-finite at iteration " + std::to_string(t));
        }
        fit.objective_trace.push_back(j);
        fit.iterations = t;
        if (std::abs(j - previous) < config.epsilon) {
            fit.converged = true;
            break;
        }
        previous = j;
    }
    fit.labels = hard_labels(fit.memberships);
    return fit;
}

FitResult fit_ebmvfcm(const MultiViewDataset& dataset, const BiLevelConfig& config) {
    config.validate();
    if (config.clusters > dataset.samples()) {
        throw ValidationError("clusters: c = " + std::to_string(config.clusters) +
                              " exceeds sample count n = " + std::to_string(dataset.samples()));
    }
    const auto delta = compute_kernel_coefficients(dataset);
    return run_restarts(config.n_init, config.jobs, [&](std::size_t r) {
        auto rng = restart_engine(config.seed, r);
        auto centers = centers_from_rows(dataset, initial_center_rows(dataset.samples(), config.clusters, rng));
        return fit_ebmvfcm_from(dataset, delta, std::move(centers), config, rng);
    });
}

}  // namespace mvfcm
