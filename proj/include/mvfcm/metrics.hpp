#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mvfcm {

/// Pair-counting adjusted Rand index. Returns 1 when both partitions are
/// trivial in the same way (the index is undefined there).
double adjusted_rand_index(std::span<const int> labels_a, std::span<const int> labels_b);

/// Mutual information over the arithmetic mean of the two entropies.
/// Two single-cluster partitions score 1.
double normalized_mutual_information(std::span<const int> labels_a, std::span<const int> labels_b);

/// Fraction of samples matched under the best one-to-one mapping of
/// predicted clusters to classes (solved exactly). At most 64 distinct labels
/// on either side.
double clustering_accuracy(std::span<const int> predicted, std::span<const int> truth);

/// Maximum-weight perfect matching on a square matrix; returns the column
/// assigned to each row.
std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<double>>& weights);

struct EvaluationReport {
    std::optional<double> ari;
    std::optional<double> nmi;
    std::optional<double> accuracy;
    double objective_final = 0.0;
    std::size_t iterations = 0;
};

/// Metrics are filled only when `truth` is supplied.
EvaluationReport evaluate(std::span<const int> predicted, const std::vector<int>* truth,
                          double objective_final, std::size_t iterations);

}  // namespace mvfcm
