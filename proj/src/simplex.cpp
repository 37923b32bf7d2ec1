#include "mvfcm/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "mvfcm/errors.hpp"

namespace mvfcm {

void inverse_power_weights(std::span<const double> costs, double exponent, std::span<double> out) {
    if (costs.size() != out.size() || costs.empty()) {
        throw ValidationError("inverse_power_weights: size mismatch");
    }
    const double smallest = *std::min_element(costs.begin(), costs.end());
    if (smallest <= 0.0) {
        std::size_t zeros = 0;
        for (double c : costs) zeros += (c <= 0.0);
        const double share = 1.0 / static_cast<double>(zeros);
        for (std::size_t k = 0; k < costs.size(); ++k) out[k] = costs[k] <= 0.0 ? share : 0.0;
        return;
    }
    // Scaling by the smallest cost keeps every ratio in (0, 1].
    const double power = 1.0 / (exponent - 1.0);
    double total = 0.0;
    for (std::size_t k = 0; k < costs.size(); ++k) {
        out[k] = std::pow(smallest / costs[k], power);
        total += out[k];
    }
    for (auto& v : out) v /= total;
}

Vector inverse_power_weights(const Vector& costs, double exponent) {
    Vector out(costs.size());
    inverse_power_weights(std::span<const double>(costs.data(), static_cast<std::size_t>(costs.size())),
                          exponent, std::span<double>(out.data(), static_cast<std::size_t>(out.size())));
    return out;
}

}  // namespace mvfcm
