#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mvfcm/types.hpp"

namespace mvfcm {

/// Random stream owned by one restart; independent of execution order.
std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t restart);

/// c distinct row indices drawn without replacement (partial Fisher-Yates).
std::vector<std::size_t> initial_center_rows(std::size_t n, std::size_t c, std::mt19937_64& rng);

/// Centers of every view taken from the same sample rows.
CentroidSet centers_from_rows(const MultiViewDataset& dataset, const std::vector<std::size_t>& rows);

/// Runs `restarts` independent fits on up to `jobs` threads (0 = hardware
/// concurrency) and returns the one with the lowest final objective, ties to
/// the lowest restart index. The winner's restart_objectives lists every
/// restart's final objective. The first exception by restart index is
/// rethrown.
FitResult run_restarts(std::size_t restarts, std::size_t jobs,
                       const std::function<FitResult(std::size_t)>& fit_one);

}  // namespace mvfcm
