#pragma once

#include <cstddef>
#include <vector>

#include "mvfcm/kernel.hpp"

namespace mvfcm {

/// n x c fuzzy partition shared by every view; rows sum to one.
using MembershipMatrix = Matrix;

/// Length-s view weights on the probability simplex.
using ViewWeights = Vector;

/// Per view h, length-d_h feature weights on the probability simplex.
using FeatureWeights = std::vector<Vector>;

struct FitResult {
    MembershipMatrix memberships;
    ViewWeights view_weights;
    FeatureWeights feature_weights;  // empty for the view-weighted solver
    CentroidSet centroids;
    std::vector<int> labels;
    std::vector<double> objective_trace;  // J after each full iteration
    std::size_t iterations = 0;
    bool converged = false;
    std::size_t restart_index = 0;
    std::vector<double> restart_objectives;  // final J of every restart, by index

    double objective() const { return objective_trace.empty() ? 0.0 : objective_trace.back(); }
};

/// Row-wise argmax; ties go to the lowest cluster index.
std::vector<int> hard_labels(const MembershipMatrix& memberships);

}  // namespace mvfcm
