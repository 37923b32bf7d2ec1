#pragma once

#include <span>

#include "mvfcm/dataset.hpp"

namespace mvfcm {

/// Closed-form minimiser of sum_k p_k^exponent * cost_k over the probability
/// simplex: p_k proportional to (1 / cost_k)^(1 / (exponent - 1)).
///
/// When some costs are exactly zero the limit is taken: the mass is split
/// uniformly over the zero-cost entries and every other entry gets 0.
/// Costs must be non-negative and exponent > 1.
void inverse_power_weights(std::span<const double> costs, double exponent, std::span<double> out);

Vector inverse_power_weights(const Vector& costs, double exponent);

}  // namespace mvfcm
