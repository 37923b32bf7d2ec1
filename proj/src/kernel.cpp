#include "mvfcm/kernel.hpp"

#include <cmath>

#include "mvfcm/errors.hpp"

namespace mvfcm {

KernelCoefficients compute_kernel_coefficients(const MultiViewDataset& dataset) {
    KernelCoefficients delta;
    delta.reserve(dataset.view_count());
    for (const auto& view : dataset.views()) {
        const Eigen::RowVectorXd mean = view.data.colwise().mean();
        delta.push_back((view.data.rowwise() - mean).cwiseAbs());
    }
    return delta;
}

double exp_distance_aggregated(std::span<const double> x, std::span<const double> center,
                               std::span<const double> delta) {
    if (x.size() != center.size() || x.size() != delta.size()) {
        throw ValidationError("exp_distance_aggregated: length mismatch");
    }
    double exponent = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = x[j] - center[j];
        exponent += delta[j] * diff * diff;
    }
    return -std::expm1(-exponent);
}

double exp_distance_per_feature(double x, double center, double delta) {
    const double diff = x - center;
    return -std::expm1(-delta * diff * diff);
}

namespace {

void check_centroids(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                     const CentroidSet& centroids) {
    if (delta.size() != dataset.view_count() || centroids.size() != dataset.view_count()) {
        throw ValidationError("view count mismatch between data, coefficients and centers");
    }
    for (std::size_t h = 0; h < dataset.view_count(); ++h) {
        const auto& x = dataset.view(h).data;
        if (delta[h].rows() != x.rows() || delta[h].cols() != x.cols() ||
            centroids[h].cols() != x.cols()) {
            throw ValidationError("shape mismatch in view " + std::to_string(h));
        }
    }
}

}  // namespace

std::vector<Matrix> view_distances(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                                   const CentroidSet& centroids) {
    check_centroids(dataset, delta, centroids);
    std::vector<Matrix> out;
    out.reserve(dataset.view_count());
    for (std::size_t h = 0; h < dataset.view_count(); ++h) {
        const auto& x = dataset.view(h).data;
        const auto& a = centroids[h];
        const auto& dl = delta[h];
        Matrix dist(x.rows(), a.rows());
        for (Eigen::Index k = 0; k < a.rows(); ++k) {
            for (Eigen::Index i = 0; i < x.rows(); ++i) {
                double exponent = 0.0;
                for (Eigen::Index j = 0; j < x.cols(); ++j) {
                    const double diff = x(i, j) - a(k, j);
                    exponent += dl(i, j) * diff * diff;
                }
                dist(i, k) = -std::expm1(-exponent);
            }
        }
        out.push_back(std::move(dist));
    }
    return out;
}

FeatureDistances feature_distances(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                                   const CentroidSet& centroids) {
    check_centroids(dataset, delta, centroids);
    FeatureDistances out(dataset.view_count());
    for (std::size_t h = 0; h < dataset.view_count(); ++h) {
        const auto& x = dataset.view(h).data;
        const auto& a = centroids[h];
        const auto& dl = delta[h];
        out[h].assign(static_cast<std::size_t>(x.cols()), Matrix(x.rows(), a.rows()));
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            auto& dist = out[h][static_cast<std::size_t>(j)];
            for (Eigen::Index k = 0; k < a.rows(); ++k)
                for (Eigen::Index i = 0; i < x.rows(); ++i)
                    dist(i, k) = exp_distance_per_feature(x(i, j), a(k, j), dl(i, j));
        }
    }
    return out;
}

}  // namespace mvfcm
