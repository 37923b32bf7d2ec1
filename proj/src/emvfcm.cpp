#include "mvfcm/emvfcm.hpp"

#include <cmath>
#include <limits>

#include "mvfcm/errors.hpp"
#include "mvfcm/restarts.hpp"
#include "mvfcm/simplex.hpp"

namespace mvfcm {

namespace {

void check_partition_shapes(const std::vector<Matrix>& distances, const MembershipMatrix& u,
                            const ViewWeights& v) {
    if (static_cast<std::size_t>(v.size()) != distances.size()) {
        throw ValidationError("view weight count does not match view count");
    }
    for (const auto& d : distances) {
        if (d.rows() != u.rows() || d.cols() != u.cols()) {
            throw ValidationError("membership shape does not match distance shape");
        }
    }
}

}  // namespace

Matrix membership_costs(const std::vector<Matrix>& distances, const ViewWeights& view_weights,
                        double alpha) {
    if (distances.empty() || static_cast<std::size_t>(view_weights.size()) != distances.size()) {
        throw ValidationError("view weight count does not match view count");
    }
    Matrix costs = Matrix::Zero(distances.front().rows(), distances.front().cols());
    for (std::size_t h = 0; h < distances.size(); ++h) {
        costs += std::pow(view_weights(static_cast<Eigen::Index>(h)), alpha) * distances[h];
    }
    return costs;
}

MembershipMatrix update_memberships(const Matrix& costs, double m) {
    MembershipMatrix u(costs.rows(), costs.cols());
    Vector row(costs.cols());
    for (Eigen::Index i = 0; i < costs.rows(); ++i) {
        row = costs.row(i).transpose();
        u.row(i) = inverse_power_weights(row, m).transpose();
    }
    return u;
}

Vector view_costs(const std::vector<Matrix>& distances, const MembershipMatrix& memberships, double m) {
    const Matrix um = memberships.array().pow(m).matrix();
    Vector e(static_cast<Eigen::Index>(distances.size()));
    for (std::size_t h = 0; h < distances.size(); ++h) {
        e(static_cast<Eigen::Index>(h)) = um.cwiseProduct(distances[h]).sum();
    }
    return e;
}

ViewWeights update_view_weights(const Vector& view_costs, double alpha) {
    return inverse_power_weights(view_costs, alpha);
}

CentroidSet update_centroids(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                             const MembershipMatrix& memberships, const CentroidSet& previous,
                             double m, std::mt19937_64& rng) {
    const Matrix um = memberships.array().pow(m).matrix();
    const auto n = static_cast<Eigen::Index>(dataset.samples());
    CentroidSet next = previous;
    Vector g(n);
    for (std::size_t h = 0; h < dataset.view_count(); ++h) {
        const auto& x = dataset.view(h).data;
        const auto& dl = delta[h];
        const auto& prev = previous[h];
        for (Eigen::Index k = 0; k < prev.rows(); ++k) {
            for (Eigen::Index i = 0; i < n; ++i) {
                double exponent = 0.0;
                for (Eigen::Index j = 0; j < x.cols(); ++j) {
                    const double diff = x(i, j) - prev(k, j);
                    exponent += dl(i, j) * diff * diff;
                }
                g(i) = um(i, k) * std::exp(-exponent);
            }
            const double mass = g.sum();
            if (!(mass > 0.0)) {
                std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
                next[h].row(k) = x.row(pick(rng));
                continue;
            }
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                double num = 0.0;
                double den = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double weight = g(i) * dl(i, j);
                    num += weight * x(i, j);
                    den += weight;
                }
                // den == 0: every weighted sample sits on the feature mean, so
                // the plain weighted mean is that value.
                next[h](k, j) = den > 0.0 ? num / den : g.dot(x.col(j)) / mass;
            }
        }
    }
    return next;
}

double objective_emvfcm(const std::vector<Matrix>& distances, const MembershipMatrix& memberships,
                        const ViewWeights& view_weights, double m, double alpha) {
    check_partition_shapes(distances, memberships, view_weights);
    const Vector e = view_costs(distances, memberships, m);
    double j = 0.0;
    for (Eigen::Index h = 0; h < e.size(); ++h) j += std::pow(view_weights(h), alpha) * e(h);
    return j;
}

double objective_emvfcm(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                        const MembershipMatrix& memberships, const ViewWeights& view_weights,
                        const CentroidSet& centroids, const SolverConfig& config) {
    return objective_emvfcm(view_distances(dataset, delta, centroids), memberships, view_weights,
                            config.m, config.alpha);
}

FitResult fit_emvfcm_from(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                          CentroidSet centers, const SolverConfig& config, std::mt19937_64& rng) {
    const auto s = static_cast<Eigen::Index>(dataset.view_count());
    FitResult fit;
    fit.centroids = std::move(centers);
    fit.view_weights = ViewWeights::Constant(s, 1.0 / static_cast<double>(s));

    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t <= config.max_iterations; ++t) {
        auto dist = view_distances(dataset, delta, fit.centroids);
        fit.memberships = update_memberships(membership_costs(dist, fit.view_weights, config.alpha), config.m);
        fit.centroids = update_centroids(dataset, delta, fit.memberships, fit.centroids, config.m, rng);
        dist = view_distances(dataset, delta, fit.centroids);
        fit.view_weights = update_view_weights(view_costs(dist, fit.memberships, config.m), config.alpha);

        const double j = objective_emvfcm(dist, fit.memberships, fit.view_weights, config.m, config.alpha);
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

FitResult fit_emvfcm(const MultiViewDataset& dataset, const SolverConfig& config) {
    config.validate();
    if (config.clusters > dataset.samples()) {
        throw ValidationError("clusters: c = " + std::to_string(config.clusters) +
                              " exceeds sample count n = " + std::to_string(dataset.samples()));
    }
    const auto delta = compute_kernel_coefficients(dataset);
    return run_restarts(config.n_init, config.jobs, [&](std::size_t r) {
        auto rng = restart_engine(config.seed, r);
        auto centers = centers_from_rows(dataset, initial_center_rows(dataset.samples(), config.clusters, rng));
        return fit_emvfcm_from(dataset, delta, std::move(centers), config, rng);
    });
}

}  // namespace mvfcm
