#pragma once

#include <random>
#include <vector>

#include "mvfcm/config.hpp"
#include "mvfcm/types.hpp"

namespace mvfcm {

// View- and feature-weighted exponential multi-view fuzzy c-means.
//
// Minimises
//   J = sum_h v_h^alpha sum_i sum_k u_ik^m sum_j (w_hj)^beta d_hj(i, k)
// where d_hj(i, k) = 1 - exp(-delta_ij (x_ij - a_kj)^2) is the single-feature
// exponential distance. U rows, v and every w_h lie on probability simplices.
// With one feature per view this coincides with the view-weighted objective.

/// D_ik = sum_h v_h^alpha sum_j w_hj^beta d_hj(i, k).
Matrix membership_costs_eb(const FeatureDistances& distances, const ViewWeights& view_weights,
                           const FeatureWeights& feature_weights, double alpha, double beta);

MembershipMatrix update_memberships_eb(const Matrix& costs, double m);

/// E_h = sum_i sum_k u_ik^m sum_j w_hj^beta d_hj(i, k).
Vector view_costs_eb(const FeatureDistances& distances, const MembershipMatrix& memberships,
                     const FeatureWeights& feature_weights, double m, double beta);

ViewWeights update_view_weights_eb(const Vector& view_costs, double alpha);

/// F_hj = v_h^alpha sum_i sum_k u_ik^m d_hj(i, k), one vector per view.
std::vector<Vector> feature_costs(const FeatureDistances& distances, const MembershipMatrix& memberships,
                                  const ViewWeights& view_weights, double m, double alpha);

/// Inverse-power normalisation of each view's feature costs independently.
FeatureWeights update_feature_weights(const std::vector<Vector>& feature_costs, double beta);

/// Per-feature weighted mean a_kj = sum_i g_ikj delta_ij x_ij / sum_i g_ikj delta_ij
/// with g_ikj = u_ik^m exp(-delta_ij (x_ij - a_prev_kj)^2). The v_h^alpha and
/// w_hj^beta factors are constant over samples and cancel, so neither weight
/// block is needed. A coordinate whose g_ikj are all zero is reset from a
/// random sample drawn from `rng`; one whose weighted samples all have
/// delta_ij = 0 (they sit on the feature mean) takes their plain weighted mean.
CentroidSet update_centroids_eb(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                                const MembershipMatrix& memberships, const CentroidSet& previous,
                                double m, std::mt19937_64& rng);

double objective_ebmvfcm(const FeatureDistances& distances, const MembershipMatrix& memberships,
                         const ViewWeights& view_weights, const FeatureWeights& feature_weights,
                         double m, double alpha, double beta);

double objective_ebmvfcm(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                         const MembershipMatrix& memberships, const ViewWeights& view_weights,
                         const FeatureWeights& feature_weights, const CentroidSet& centroids,
                         const BiLevelConfig& config);

FitResult fit_ebmvfcm(const MultiViewDataset& dataset, const BiLevelConfig& config);

FitResult fit_ebmvfcm_from(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                           CentroidSet centers, const BiLevelConfig& config, std::mt19937_64& rng);

/// Uniform weights 1 / d_h for every view.
FeatureWeights uniform_feature_weights(const MultiViewDataset& dataset);

}  // namespace mvfcm
