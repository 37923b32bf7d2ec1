#include "mvfcm/config.hpp"

#include <cmath>

#include "mvfcm/errors.hpp"

namespace mvfcm {

void SolverConfig::validate() const {
    if (clusters < 2) throw ValidationError("clusters: need at least 2 clusters");
    if (!std::isfinite(m) || !(m > 1.0)) throw ValidationError("m: fuzzifier must exceed 1");
    if (!std::isfinite(alpha) || !(alpha > 1.0)) {
        throw ValidationError("alpha: view-weight exponent must exceed 1");
    }
    if (!std::isfinite(epsilon) || !(epsilon > 0.0)) {
        throw ValidationError("epsilon: tolerance must be positive");
    }
    if (max_iterations == 0) throw ValidationError("max-iter: must be positive");
    if (n_init == 0) throw ValidationError("n-init: need at least one restart");
}

void BiLevelConfig::validate() const {
    SolverConfig::validate();
    if (!std::isfinite(beta) || !(beta > 1.0)) {
        throw ValidationError("beta: feature-weight exponent must exceed 1");
    }
}

}  // namespace mvfcm
