#pragma once

#include <cstddef>
#include <cstdint>

namespace mvfcm {

/// Parameters shared by both solvers.
struct SolverConfig {
    std::size_t clusters = 2;
    double m = 2.0;            // fuzzifier, > 1
    double alpha = 2.0;        // view-weight exponent, > 1
    double epsilon = 1e-6;     // stop when |J(t) - J(t-1)| < epsilon
    std::size_t max_iterations = 100;
    std::size_t n_init = 10;   // independent restarts; lowest final objective wins
    std::uint64_t seed = 0;
    std::size_t jobs = 1;      // concurrent restarts, 0 = hardware concurrency

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

struct BiLevelConfig : SolverConfig {
    double beta = 2.0;  // feature-weight exponent, > 1

    void validate() const;
};

}  // namespace mvfcm
