#pragma once

#include <random>
#include <vector>

#include "mvfcm/config.hpp"
#include "mvfcm/types.hpp"

namespace mvfcm {

// View-weighted exponential multi-view fuzzy c-means.
//
// Minimises  J = sum_h v_h^alpha sum_i sum_k u_ik^m d_h(i, k)  with
// d_h(i, k) = 1 - exp(-sum_j delta_ij (x_ij - a_kj)^2), subject to every row
// of U and the vector v lying on a probability simplex. The membership and
// view-weight steps are exact block minimisers; the center step is one
// majorise-minimise sweep: the concave map t -> 1 - exp(-t) is bounded by its
// tangent at the previous centers, and the resulting weighted least-squares
// problem is solved exactly, so no step can increase J.

/// D_ik = sum_h v_h^alpha d_h(i, k).
Matrix membership_costs(const std::vector<Matrix>& distances, const ViewWeights& view_weights,
                        double alpha);

/// Row-wise inverse-power normalisation of the aggregated costs.
MembershipMatrix update_memberships(const Matrix& costs, double m);

/// E_h = sum_i sum_k u_ik^m d_h(i, k).
Vector view_costs(const std::vector<Matrix>& distances, const MembershipMatrix& memberships, double m);

ViewWeights update_view_weights(const Vector& view_costs, double alpha);

/// a_kj = sum_i g_ik delta_ij x_ij / sum_i g_ik delta_ij,
/// g_ik = u_ik^m exp(-sum_j delta_ij (x_ij - a_prev_kj)^2).
/// Every coordinate is a convex combination of the samples. A center whose
/// g_ik are all zero is reset to a random sample row drawn from `rng`; a
/// coordinate whose weighted samples all have delta_ij = 0 (they sit on the
/// feature mean) takes their plain g-weighted mean.
CentroidSet update_centroids(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                             const MembershipMatrix& memberships, const CentroidSet& previous,
                             double m, std::mt19937_64& rng);

double objective_emvfcm(const std::vector<Matrix>& distances, const MembershipMatrix& memberships,
                        const ViewWeights& view_weights, double m, double alpha);

double objective_emvfcm(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                        const MembershipMatrix& memberships, const ViewWeights& view_weights,
                        const CentroidSet& centroids, const SolverConfig& config);

FitResult fit_emvfcm(const MultiViewDataset& dataset, const SolverConfig& config);

/// A single restart with explicit initial centers; fit_emvfcm draws them
/// from restart_engine(seed, restart).
FitResult fit_emvfcm_from(const MultiViewDataset& dataset, const KernelCoefficients& delta,
                          CentroidSet centers, const SolverConfig& config, std::mt19937_64& rng);

}  // namespace mvfcm
