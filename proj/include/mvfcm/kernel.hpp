#pragma once

#include <span>
#include <vector>

#include "mvfcm/dataset.hpp"

namespace mvfcm {

/// Per view h, an n x d_h matrix of heat-kernel coefficients
/// delta_ij = |x_ij - mean_j|, mean_j being the column mean of view h.
using KernelCoefficients = std::vector<Matrix>;

/// Per view h, a c x d_h matrix of cluster centers.
using CentroidSet = std::vector<Matrix>;

/// Per view h, per feature j, an n x c matrix of single-feature distances.
using FeatureDistances = std::vector<std::vector<Matrix>>;

KernelCoefficients compute_kernel_coefficients(const MultiViewDataset& dataset);

/// 1 - exp(-sum_j delta_j (x_j - a_j)^2). All spans must have equal length.
double exp_distance_aggregated(std::span<const double> x, std::span<const double> center,
                               std::span<const double> delta);

/// 1 - exp(-delta (x - a)^2).
double exp_distance_per_feature(double x, double center, double delta);

/// Aggregated exponential distance of every sample to every center, one n x c
/// matrix per view.
std::vector<Matrix> view_distances(const MultiViewDataset& dataset,
                                   const KernelCoefficients& delta,
                                   const CentroidSet& centroids);

/// Single-feature exponential distances, indexed [h][j](i, k).
FeatureDistances feature_distances(const MultiViewDataset& dataset,
                                   const KernelCoefficients& delta,
                                   const CentroidSet& centroids);

}  // namespace mvfcm
