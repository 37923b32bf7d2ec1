// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "mvfcm/ebmvfcm.hpp"
#include "mvfcm/emvfcm.hpp"
#include "mvfcm/fcm_oracle.hpp"
#include "mvfcm/metrics.hpp"
#include "mvfcm/stationarity.hpp"
#include "support.hpp"

using namespace mvfcm;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    return pass;
}

void info(const std::string& line) {
    std::printf("info: %s\n", line.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

// Largest violation of "entries in [0, 1] and summing to one".
double simplex_violation(const Vector& p) {
    return std::max({std::abs(p.sum() - 1.0), -std::min(p.minCoeff(), 0.0), std::max(p.maxCoeff() - 1.0, 0.0)});
}

double rows_violation(const Matrix& u) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) worst = std::max(worst, simplex_violation(u.row(i).transpose()));
    return worst;
}

double weights_violation(const FeatureWeights& w) {
    double worst = 0.0;
    for (const auto& wh : w) worst = std::max(worst, simplex_violation(wh));
    return worst;
}

struct Instance {
    MultiViewDataset data;
    KernelCoefficients delta;
    CentroidSet centers;
    ViewWeights v;
    FeatureWeights w;
    MembershipMatrix u;
};

Instance random_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t max_c, std::size_t max_s,
                         std::size_t max_d) {
    const auto shape = gen::random_shape(rng, max_n, max_c, max_s, max_d);
    std::uniform_real_distribution<double> scale(0.2, 5.0);
    auto data = gen::random_dataset(shape.n, shape.dims, rng, scale(rng));
    auto delta = compute_kernel_coefficients(data);
    auto centers = gen::random_centers(data, shape.c, rng);
    auto v = gen::random_simplex(shape.dims.size(), rng);
    auto w = gen::random_feature_weights(shape.dims, rng);
    auto u = gen::random_memberships(shape.n, shape.c, rng);
    return {std::move(data), std::move(delta), std::move(centers), std::move(v), std::move(w), std::move(u)};
}

// ---------------------------------------------------------------------------

bool criterion_constraints() {
    const auto start = Clock::now();
    std::mt19937_64 rng(101);
    const double m = 2.0, alpha = 2.0, beta = 2.0;
    double worst = 0.0;
    std::size_t violations = 0, checks = 0;
    auto check = [&](double violation) {
        ++checks;
        worst = std::max(worst, violation);
        violations += violation > 1e-9;
    };
    for (int iteration = 0; iteration < 1000; ++iteration) {
        auto inst = random_instance(rng, 50, 5, 4, 6);

        // One view-weighted iteration: U, A, V.
        auto dist = view_distances(inst.data, inst.delta, inst.centers);
        const auto u = update_memberships(membership_costs(dist, inst.v, alpha), m);
        check(rows_violation(u));
        const auto a = update_centroids(inst.data, inst.delta, u, inst.centers, m, rng);
        dist = view_distances(inst.data, inst.delta, a);
        check(simplex_violation(update_view_weights(view_costs(dist, u, m), alpha)));

        // One bi-level iteration: U, A, V, W.
        auto fd = feature_distances(inst.data, inst.delta, inst.centers);
        const auto ub = update_memberships_eb(membership_costs_eb(fd, inst.v, inst.w, alpha, beta), m);
        check(rows_violation(ub));
        const auto ab = update_centroids_eb(inst.data, inst.delta, ub, inst.centers, m, rng);
        fd = feature_distances(inst.data, inst.delta, ab);
        const auto vb = update_view_weights_eb(view_costs_eb(fd, ub, inst.w, m, beta), alpha);
        check(simplex_violation(vb));
        check(weights_violation(update_feature_weights(feature_costs(fd, ub, vb, m, alpha), beta)));
    }
    const double elapsed = seconds_since(start);
    return report(1, violations == 0 && elapsed < 30.0,
                  fmt("simplex constraints after %zu updates over 1000 random iterations: %zu violations > 1e-9 "
                      "(max %.2e), %.2f s (limit 30 s)",
                      checks, violations, worst, elapsed));
}

bool criterion_optimality() {
    std::mt19937_64 rng(202);
    const double m = 2.0, alpha = 2.0, beta = 2.0;
    std::size_t counterexamples = 0, comparisons = 0;
    auto compare = [&](double closed_form, double probe) {
        ++comparisons;
        counterexamples += closed_form > probe + 1e-12 * std::max(1.0, std::abs(probe));
    };
    for (int config = 0; config < 100; ++config) {
        const auto inst = random_instance(rng, 20, 5, 4, 6);
        const auto n = static_cast<std::size_t>(inst.u.rows());
        const auto c = static_cast<std::size_t>(inst.u.cols());
        const auto s = inst.data.view_count();
        const auto dims = inst.data.view_dims();

        const auto dist = view_distances(inst.data, inst.delta, inst.centers);
        const auto u = update_memberships(membership_costs(dist, inst.v, alpha), m);
        const auto v = update_view_weights(view_costs(dist, inst.u, m), alpha);
        const double ju = objective_emvfcm(dist, u, inst.v, m, alpha);
        const double jv = objective_emvfcm(dist, inst.u, v, m, alpha);

        const auto fd = feature_distances(inst.data, inst.delta, inst.centers);
        const auto ub = update_memberships_eb(membership_costs_eb(fd, inst.v, inst.w, alpha, beta), m);
        const auto vb = update_view_weights_eb(view_costs_eb(fd, inst.u, inst.w, m, beta), alpha);
        const auto wb = update_feature_weights(feature_costs(fd, inst.u, inst.v, m, alpha), beta);
        const double jub = objective_ebmvfcm(fd, ub, inst.v, inst.w, m, alpha, beta);
        const double jvb = objective_ebmvfcm(fd, inst.u, vb, inst.w, m, alpha, beta);
        const double jwb = objective_ebmvfcm(fd, inst.u, inst.v, wb, m, alpha, beta);

        for (int probe = 0; probe < 100; ++probe) {
            const auto ru = gen::random_memberships(n, c, rng);
            const auto rv = gen::random_simplex(s, rng);
            const auto rw = gen::random_feature_weights(dims, rng);
            compare(ju, objective_emvfcm(dist, ru, inst.v, m, alpha));
            compare(jv, objective_emvfcm(dist, inst.u, rv, m, alpha));
            compare(jub, objective_ebmvfcm(fd, ru, inst.v, inst.w, m, alpha, beta));
            compare(jvb, objective_ebmvfcm(fd, inst.u, rv, inst.w, m, alpha, beta));
            compare(jwb, objective_ebmvfcm(fd, inst.u, inst.v, rw, m, alpha, beta));
        }
    }
    return report(2, counterexamples == 0,
                  fmt("closed-form U, V (both solvers) and W vs random simplex points: %zu counterexamples in %zu "
                      "comparisons (100 configurations x 100 samples)",
                      counterexamples, comparisons));
}

bool criterion_stationarity() {
    std::mt19937_64 rng(303);
    const double m = 2.0, alpha = 2.0, beta = 2.0, tolerance = 1e-5;
    double worst = 0.0;
    std::size_t failures = 0;
    auto check = [&](const std::function<double(std::span<const double>)>& objective, const std::vector<double>& point,
                     const std::vector<SimplexBlock>& blocks) {
        const auto r = check_stationarity(objective, point, blocks, tolerance);
        worst = std::max(worst, r.max_abs_derivative);
        failures += !r.stationary;
    };
    auto concat = [](const FeatureWeights& w) {
        std::vector<double> out;
        for (const auto& wh : w) out.insert(out.end(), wh.data(), wh.data() + wh.size());
        return out;
    };
    auto split = [](std::span<const double> p, const std::vector<std::size_t>& dims) {
        FeatureWeights w;
        std::size_t offset = 0;
        for (auto d : dims) {
            w.push_back(Eigen::Map<const Vector>(p.data() + offset, static_cast<Eigen::Index>(d)));
            offset += d;
        }
        return w;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = random_instance(rng, 10, 4, 3, 4);
        const auto n = inst.u.rows(), c = inst.u.cols();
        const std::vector<std::size_t> u_shape{static_cast<std::size_t>(n), static_cast<std::size_t>(c)};
        const std::vector<std::size_t> v_shape{inst.data.view_count()};
        const auto dims = inst.data.view_dims();
        const auto u_blocks = simplex_blocks(WeightBlock::memberships, u_shape);
        const auto v_blocks = simplex_blocks(WeightBlock::view_weights, v_shape);
        const auto w_blocks = simplex_blocks(WeightBlock::feature_weights, dims);
        auto as_vector = [](std::span<const double> p) {
            return Vector(Eigen::Map<const Vector>(p.data(), static_cast<Eigen::Index>(p.size())));
        };

        const auto dist = view_distances(inst.data, inst.delta, inst.centers);
        const auto u = update_memberships(membership_costs(dist, inst.v, alpha), m);
        check([&](std::span<const double> p) { return objective_emvfcm(dist, gen::unflatten_rows(p, n, c), inst.v, m, alpha); },
              gen::flatten_rows(u), u_blocks);
        const auto v = update_view_weights(view_costs(dist, u, m), alpha);
        check([&](std::span<const double> p) { return objective_emvfcm(dist, u, as_vector(p), m, alpha); },
              std::vector<double>(v.data(), v.data() + v.size()), v_blocks);

        const auto fd = feature_distances(inst.data, inst.delta, inst.centers);
        const auto ub = update_memberships_eb(membership_costs_eb(fd, inst.v, inst.w, alpha, beta), m);
        check([&](std::span<const double> p) {
                  return objective_ebmvfcm(fd, gen::unflatten_rows(p, n, c), inst.v, inst.w, m, alpha, beta);
              },
              gen::flatten_rows(ub), u_blocks);
        const auto vb = update_view_weights_eb(view_costs_eb(fd, ub, inst.w, m, beta), alpha);
        check([&](std::span<const double> p) { return objective_ebmvfcm(fd, ub, as_vector(p), inst.w, m, alpha, beta); },
              std::vector<double>(vb.data(), vb.data() + vb.size()), v_blocks);
        const auto wb = update_feature_weights(feature_costs(fd, ub, vb, m, alpha), beta);
        check([&](std::span<const double> p) { return objective_ebmvfcm(fd, ub, vb, split(p, dims), m, alpha, beta); },
              concat(wb), w_blocks);
    }
    return report(3, failures == 0,
                  fmt("finite-difference directional derivatives at closed-form U, V, W on 50 instances: %zu "
                      "non-stationary, max |derivative| %.2e (tolerance 1e-5)",
                      failures, worst));
}

bool criterion_reduction() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SyntheticSpec spec;
        spec.seed = seed;
        spec.clusters = 2 + seed % 3;
        spec.n_per_cluster = 15 + 5 * (seed % 4);
        spec.view_dims = {1 + seed % 5};
        const auto data = normalize_minmax(generate_synthetic(spec).dataset);
        SolverConfig config;
        config.clusters = spec.clusters;
        config.seed = seed;
        config.n_init = 1;
        const auto fit = fit_emvfcm(data, config);
        FcmOracleOptions options;
        options.clusters = spec.clusters;
        options.distance = FcmDistance::exponential;
        options.seed = seed;
        const auto oracle = fcm_oracle(data.view(0).data, options);
        const double diff = fit.memberships.rows() == oracle.memberships.rows()
                                ? (fit.memberships - oracle.memberships).cwiseAbs().maxCoeff()
                                : INFINITY;
        worst = std::max(worst, diff);
    }
    return report(4, worst <= 1e-9,
                  fmt("single-view fit vs exponential-distance FCM oracle on 20 datasets: max |dU| = %.2e "
                      "(tolerance 1e-9)",
                      worst));
}

// Benchmark fits shared by criteria 5-8.
struct BenchmarkFit {
    std::string name;
    FitResult fit;
    double seconds = 0.0;
};

std::vector<BenchmarkFit> benchmark_fits;

FitResult timed_fit(const std::string& name, bool bilevel, const MultiViewDataset& data, std::uint64_t seed,
                    double& seconds) {
    BiLevelConfig config;
    config.clusters = 3;
    config.seed = seed;
    config.jobs = 0;
    const auto start = Clock::now();
    auto fit = bilevel ? fit_ebmvfcm(data, config) : fit_emvfcm(data, config);
    seconds = seconds_since(start);
    benchmark_fits.push_back({name, fit, seconds});
    return fit;
}

bool criterion_recovery() {
    bool pass = true;
    std::string detail;
    for (bool bilevel : {false, true}) {
        const char* solver = bilevel ? "ebmvfcm" : "emvfcm";
        int good = 0;
        double slowest = 0.0, min_ari = 1.0, min_nmi = 1.0;
        std::string raw_aris;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto data = gen::normalized_benchmark(seed);
            double seconds = 0.0;
            const auto fit = timed_fit(fmt("%s seed %llu", solver, static_cast<unsigned long long>(seed)), bilevel,
                                       data.dataset, seed, seconds);
            const double ari = adjusted_rand_index(fit.labels, data.labels);
            const double nmi = normalized_mutual_information(fit.labels, data.labels);
            good += ari >= 0.9 && nmi >= 0.85 && seconds < 5.0;
            slowest = std::max(slowest, seconds);
            min_ari = std::min(min_ari, ari);
            min_nmi = std::min(min_nmi, nmi);

            SyntheticSpec spec;
            spec.seed = seed;
            const auto raw = generate_synthetic(spec);
            double raw_seconds = 0.0;
            const auto raw_fit = timed_fit(fmt("%s raw seed %llu", solver, static_cast<unsigned long long>(seed)),
                                           bilevel, raw.dataset, seed, raw_seconds);
            raw_aris += fmt(" %.2f", adjusted_rand_index(raw_fit.labels, raw.labels));
        }
        info(fmt("%s on the unnormalised benchmark, ARI by seed:%s", solver, raw_aris.c_str()));
        pass = pass && good >= 9;
        detail += fmt("%s%s %d/10 seeds with ARI >= 0.9, NMI >= 0.85 and < 5 s (min ARI %.3f, min NMI %.3f, "
                      "slowest %.3f s)",
                      detail.empty() ? "" : "; ", solver, good, min_ari, min_nmi, slowest);
    }
    return report(5, pass, "min-max normalised benchmark: " + detail);
}

bool criterion_view_weighting() {
    bool pass = true;
    std::string detail;
    for (bool bilevel : {false, true}) {
        const char* solver = bilevel ? "ebmvfcm" : "emvfcm";
        int good = 0;
        double worst_gap = INFINITY;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto data = gen::normalized_benchmark(seed, 1);
            double seconds = 0.0;
            const auto fit = timed_fit(fmt("%s noise-view seed %llu", solver, static_cast<unsigned long long>(seed)),
                                       bilevel, data.dataset, seed, seconds);
            const auto& v = fit.view_weights;
            const double gap = std::min(v(0), v(1)) - v(2);
            good += gap > 0.0;
            worst_gap = std::min(worst_gap, gap);
        }
        pass = pass && good == 10;
        detail += fmt("%s%s %d/10 (smallest margin %.3f)", detail.empty() ? "" : "; ", solver, good, worst_gap);
    }
    return report(6, pass, "appended noise view has the smallest view weight: " + detail);
}

bool criterion_feature_weighting() {
    int good = 0;
    std::string weights;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto data = gen::feature_benchmark(seed);
        double seconds = 0.0;
        const auto fit = timed_fit(fmt("ebmvfcm feature seed %llu", static_cast<unsigned long long>(seed)), true,
                                   data.dataset, seed, seconds);
        const auto& w = fit.feature_weights[1];
        Eigen::Index best = 0;
        w.maxCoeff(&best);
        good += best == 0;
        weights += fmt(" %.2f", w(0));
    }
    info(fmt("informative feature weight by seed:%s", weights.c_str()));
    return report(7, good >= 9,
                  fmt("informative feature receives the largest weight among 1 informative + 3 noise features: "
                      "%d/10 seeds",
                      good));
}

bool criterion_monotone() {
    std::size_t violations = 0;
    double worst = 0.0;
    std::string offenders;
    for (const auto& b : benchmark_fits) {
        const auto& trace = b.fit.objective_trace;
        for (std::size_t t = 1; t < trace.size(); ++t) {
            const double rise = trace[t] - trace[t - 1];
            worst = std::max(worst, rise);
            if (rise > 1e-8) {
                ++violations;
                offenders += " [" + b.name + fmt(" t=%zu rise %.2e]", t, rise);
            }
        }
    }
    if (!offenders.empty()) info("objective increases:" + offenders);
    return report(8, violations == 0,
                  fmt("objective traces of %zu benchmark fits non-increasing within 1e-8: %zu violations, "
                      "largest increase %.2e",
                      benchmark_fits.size(), violations, worst));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool criterion_determinism() {
    gen::TempDir dir;
    const auto data_dir = dir.path() / "data";
    const auto manifest = (data_dir / "manifest.json").string();
    std::vector<std::string> records, reports, datasets;
    bool ok = true;
    for (int run = 0; run < 2; ++run) {
        std::ostringstream out, err;
        fs::remove_all(data_dir);
        const auto record_path = (dir.path() / fmt("run_%d.json", run)).string();
        const auto report_path = (dir.path() / fmt("eval_%d.json", run)).string();
        ok = ok && cli::run({"generate", "--seed", "42", "--noise-views", "1", "-o", data_dir.string()}, out, err) == 0;
        ok = ok && cli::run({"fit", manifest, "--clusters", "3", "--seed", "42", "--normalize", "--no-timing", "-o",
                             record_path},
                            out, err) == 0;
        ok = ok && cli::run({"fit", manifest, "--algorithm", "ebmvfcm", "--clusters", "3", "--seed", "42",
                             "--normalize", "--no-timing", "-o", record_path + ".eb"},
                            out, err) == 0;
        ok = ok && cli::run({"evaluate", record_path, "--labels", (data_dir / "labels.csv").string(), "-o",
                             report_path},
                            out, err) == 0;
        if (!ok) info("determinism pipeline error: " + err.str());
        records.push_back(slurp(record_path) + slurp(record_path + ".eb"));
        reports.push_back(slurp(report_path));
        std::string files;
        for (const auto& name : {"view_0.csv", "view_1.csv", "view_2.csv", "labels.csv", "manifest.json"}) {
            files += slurp(data_dir / name);
        }
        datasets.push_back(files);
    }
    const bool same = ok && !records[0].empty() && records[0] == records[1] && reports[0] == reports[1] &&
                      datasets[0] == datasets[1];
    return report(9, same,
                  fmt("generate -> fit (emvfcm, ebmvfcm) -> evaluate twice: dataset %s, run records %s, "
                      "evaluation %s",
                      datasets[0] == datasets[1] ? "identical" : "DIFFER",
                      records[0] == records[1] ? "byte-identical" : "DIFFER",
                      reports[0] == reports[1] ? "identical" : "DIFFER"));
}

}  // namespace

int main() {
    const auto start = Clock::now();
    bool pass = true;
    pass &= criterion_constraints();
    pass &= criterion_optimality();
    pass &= criterion_stationarity();
    pass &= criterion_reduction();
    pass &= criterion_recovery();
    pass &= criterion_view_weighting();
    pass &= criterion_feature_weighting();
    pass &= criterion_monotone();
    pass &= criterion_determinism();
    info(fmt("total %.2f s", seconds_since(start)));
    return pass ? 0 : 1;
}
