#include "mvfcm/restarts.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "mvfcm/errors.hpp"

namespace mvfcm {

std::vector<int> hard_labels(const MembershipMatrix& memberships) {
    std::vector<int> labels(static_cast<std::size_t>(memberships.rows()));
    for (Eigen::Index i = 0; i < memberships.rows(); ++i) {
        Eigen::Index best = 0;
        for (Eigen::Index k = 1; k < memberships.cols(); ++k) {
            if (memberships(i, k) > memberships(i, best)) best = k;
        }
        labels[static_cast<std::size_t>(i)] = static_cast<int>(best);
    }
    return labels;
}

std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    return std::mt19937_64(seq);
}

std::vector<std::size_t> initial_center_rows(std::size_t n, std::size_t c, std::mt19937_64& rng) {
    if (c > n) throw ValidationError("clusters: c = " + std::to_string(c) + " exceeds n = " + std::to_string(n));
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t k = 0; k < c; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, n - 1);
        std::swap(pool[k], pool[pick(rng)]);
    }
    pool.resize(c);
    return pool;
}

CentroidSet centers_from_rows(const MultiViewDataset& dataset, const std::vector<std::size_t>& rows) {
    CentroidSet centers;
    centers.reserve(dataset.view_count());
    for (const auto& view : dataset.views()) {
        Matrix a(static_cast<Eigen::Index>(rows.size()), view.data.cols());
        for (std::size_t k = 0; k < rows.size(); ++k)
            a.row(static_cast<Eigen::Index>(k)) = view.data.row(static_cast<Eigen::Index>(rows[k]));
        centers.push_back(std::move(a));
    }
    return centers;
}

FitResult run_restarts(std::size_t restarts, std::size_t jobs,
                       const std::function<FitResult(std::size_t)>& fit_one) {
    std::vector<FitResult> results(restarts);
    std::vector<std::exception_ptr> errors(restarts);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, restarts);

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t r = next++; r < restarts; r = next++) {
            try {
                results[r] = fit_one(r);
                results[r].restart_index = r;
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::size_t best = 0;
    std::vector<double> finals(restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        finals[r] = results[r].objective();
        if (finals[r] < finals[best]) best = r;
    }
    FitResult winner = std::move(results[best]);
    winner.restart_objectives = std::move(finals);
    return winner;
}

}  // namespace mvfcm
