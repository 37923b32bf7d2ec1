#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mvfcm/dataset.hpp"

namespace mvfcm {

enum class FcmDistance { euclidean, exponential };

struct FcmOracleOptions {
    std::size_t clusters = 2;
    double m = 2.0;
    FcmDistance distance = FcmDistance::euclidean;
    std::uint64_t seed = 0;
    double epsilon = 1e-6;
    std::size_t max_iterations = 100;
};

struct FcmOracleResult {
    Matrix memberships;
    Matrix centers;
    std::vector<double> objective_trace;
};

/// Single-view fuzzy c-means, written independently of the multi-view
/// solvers and used as a reference for them. Initial centers are the same
/// sample rows fit_emvfcm picks for restart 0. Each iteration updates the
/// memberships, then the centers, then records J and stops when it moves by
/// less than epsilon.
///
/// euclidean:   d = ||x - a||^2, centers are u^m-weighted means.
/// exponential: d = 1 - exp(-sum_j delta_ij (x_ij - a_j)^2) with
///              delta_ij = |x_ij - mean_j|, centers use the frozen
///              exponential weights of the multi-view solver.
FcmOracleResult fcm_oracle(const Matrix& data, const FcmOracleOptions& options);

}  // namespace mvfcm
