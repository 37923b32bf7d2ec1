#include "mvfcm/metrics.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "mvfcm/errors.hpp"

namespace mvfcm {

namespace {

struct Contingency {
    std::vector<std::vector<double>> table;  // [a cluster][b cluster]
    std::vector<double> rows;
    std::vector<double> cols;
    double n = 0.0;
};

std::vector<std::size_t> dense_ids(std::span<const int> labels, std::size_t& count) {
    std::map<int, std::size_t> ids;
    for (int l : labels) ids.emplace(l, 0);
    std::size_t next = 0;
    for (auto& [label, id] : ids) id = next++;
    count = next;
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (int l : labels) out.push_back(ids.at(l));
    return out;
}

Contingency contingency(std::span<const int> a, std::span<const int> b, const char* who) {
    if (a.size() != b.size()) {
        throw ValidationError(std::string(who) + ": label lengths differ (" + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()) + ")");
    }
    if (a.empty()) throw ValidationError(std::string(who) + ": labelings are empty");
    std::size_t ka = 0;
    std::size_t kb = 0;
    const auto ia = dense_ids(a, ka);
    const auto ib = dense_ids(b, kb);
    Contingency c;
    c.table.assign(ka, std::vector<double>(kb, 0.0));
    c.rows.assign(ka, 0.0);
    c.cols.assign(kb, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        c.table[ia[i]][ib[i]] += 1.0;
        c.rows[ia[i]] += 1.0;
        c.cols[ib[i]] += 1.0;
    }
    c.n = static_cast<double>(a.size());
    return c;
}

double pairs(double x) { return 0.5 * x * (x - 1.0); }

double entropy(const std::vector<double>& counts, double n) {
    double h = 0.0;
    for (double c : counts) {
        if (c > 0.0) h -= (c / n) * std::log(c / n);
    }
    return h;
}

}  // namespace

double adjusted_rand_index(std::span<const int> labels_a, std::span<const int> labels_b) {
    const auto c = contingency(labels_a, labels_b, "adjusted_rand_index");
    double index = 0.0;
    for (const auto& row : c.table)
        for (double v : row) index += pairs(v);
    double sum_a = 0.0;
    for (double v : c.rows) sum_a += pairs(v);
    double sum_b = 0.0;
    for (double v : c.cols) sum_b += pairs(v);
    const double total = pairs(c.n);
    const double expected = total > 0.0 ? sum_a * sum_b / total : 0.0;
    const double maximum = 0.5 * (sum_a + sum_b);
    if (maximum == expected) return 1.0;
    return (index - expected) / (maximum - expected);
}

double normalized_mutual_information(std::span<const int> labels_a, std::span<const int> labels_b) {
    const auto c = contingency(labels_a, labels_b, "normalized_mutual_information");
    if (c.rows.size() == 1 && c.cols.size() == 1) return 1.0;
    double mi = 0.0;
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        for (std::size_t j = 0; j < c.cols.size(); ++j) {
            const double nij = c.table[i][j];
            if (nij > 0.0) mi += (nij / c.n) * std::log(c.n * nij / (c.rows[i] * c.cols[j]));
        }
    }
    const double mean_entropy = 0.5 * (entropy(c.rows, c.n) + entropy(c.cols, c.n));
    if (mean_entropy <= 0.0) return 0.0;
    return std::clamp(mi / mean_entropy, 0.0, 1.0);
}

std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<double>>& weights) {
    // Hungarian method with potentials, minimising the negated weights.
    const std::size_t size = weights.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
    std::vector<std::size_t> match(size + 1, 0), way(size + 1, 0);
    for (std::size_t row = 1; row <= size; ++row) {
        match[0] = row;
        std::size_t col0 = 0;
        std::vector<double> minv(size + 1, inf);
        std::vector<bool> used(size + 1, false);
        do {
            used[col0] = true;
            const std::size_t r = match[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t col = 1; col <= size; ++col) {
                if (used[col]) continue;
                const double cur = -weights[r - 1][col - 1] - u[r] - v[col];
                if (cur < minv[col]) {
                    minv[col] = cur;
                    way[col] = col0;
                }
                if (minv[col] < delta) {
                    delta = minv[col];
                    col1 = col;
                }
            }
            for (std::size_t col = 0; col <= size; ++col) {
                if (used[col]) {
                    u[match[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            col0 = col1;
        } while (match[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            match[col0] = match[col1];
            col0 = col1;
        } while (col0 != 0);
    }
    std::vector<std::size_t> assignment(size);
    for (std::size_t col = 1; col <= size; ++col) assignment[match[col] - 1] = col - 1;
    return assignment;
}

double clustering_accuracy(std::span<const int> predicted, std::span<const int> truth) {
    const auto c = contingency(predicted, truth, "clustering_accuracy");
    if (c.rows.size() > 64 || c.cols.size() > 64) {
        throw ValidationError("clustering_accuracy: more than 64 distinct labels");
    }
    const std::size_t size = std::max(c.rows.size(), c.cols.size());
    std::vector<std::vector<double>> square(size, std::vector<double>(size, 0.0));
    for (std::size_t i = 0; i < c.rows.size(); ++i)
        for (std::size_t j = 0; j < c.cols.size(); ++j) square[i][j] = c.table[i][j];
    const auto assignment = max_weight_assignment(square);
    double matched = 0.0;
    for (std::size_t i = 0; i < size; ++i) matched += square[i][assignment[i]];
    return matched / c.n;
}

EvaluationReport evaluate(std::span<const int> predicted, const std::vector<int>* truth,
                          double objective_final, std::size_t iterations) {
    EvaluationReport report;
    report.objective_final = objective_final;
    report.iterations = iterations;
    if (truth != nullptr) {
        if (truth->size() != predicted.size()) {
            throw ValidationError("labels: expected n = " + std::to_string(predicted.size()) +
                                  " entries, got " + std::to_string(truth->size()));
        }
        report.ari = adjusted_rand_index(predicted, *truth);
        report.nmi = normalized_mutual_information(predicted, *truth);
        report.accuracy = clustering_accuracy(predicted, *truth);
    }
    return report;
}

}  // namespace mvfcm
