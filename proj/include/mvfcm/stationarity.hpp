#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mvfcm {

/// A contiguous run of coordinates constrained to sum to one.
struct SimplexBlock {
    std::size_t offset = 0;
    std::size_t length = 0;
};

enum class WeightBlock { memberships, view_weights, feature_weights };

/// Simplex layout of a flattened parameter block.
///   memberships:     sizes = {n, c}, rows flattened row-major
///   view_weights:    sizes = {s}
///   feature_weights: sizes = {d_1, ..., d_s}, concatenated
std::vector<SimplexBlock> simplex_blocks(WeightBlock block, std::span<const std::size_t> sizes);

struct StationarityReport {
    bool stationary = false;
    double max_abs_derivative = 0.0;
};

/// Central finite differences of `objective` along every feasible direction
/// e_a - e_b inside each simplex block (these span the tangent space of the
/// constraint set, so the Lagrange multipliers drop out). The point is
/// stationary when every directional derivative is at most `tolerance` in
/// magnitude. Throws NumericalError if a probe evaluates to a non-finite
/// value.
StationarityReport check_stationarity(const std::function<double(std::span<const double>)>& objective,
                                      std::span<const double> point,
                                      std::span<const SimplexBlock> blocks, double tolerance,
                                      double step = 1e-6);

}  // namespace mvfcm
