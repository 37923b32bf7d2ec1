#include "mvfcm/fcm_oracle.hpp"

#include <cmath>
#include <limits>

#include "mvfcm/errors.hpp"
#include "mvfcm/restarts.hpp"

namespace mvfcm {

FcmOracleResult fcm_oracle(const Matrix& data, const FcmOracleOptions& options) {
    const Eigen::Index n = data.rows();
    const Eigen::Index d = data.cols();
    const auto c = static_cast<Eigen::Index>(options.clusters);
    if (c < 1 || c > n) throw ValidationError("fcm_oracle: need 1 <= c <= n");
    if (!(options.m > 1.0)) throw ValidationError("fcm_oracle: fuzzifier must exceed 1");

    const bool exponential = options.distance == FcmDistance::exponential;
    Matrix coeff = Matrix::Ones(n, d);
    if (exponential) {
        for (Eigen::Index j = 0; j < d; ++j) {
            double mean = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) mean += data(i, j);
            mean /= static_cast<double>(n);
            for (Eigen::Index i = 0; i < n; ++i) coeff(i, j) = std::abs(data(i, j) - mean);
        }
    }

    auto rng = restart_engine(options.seed, 0);
    const auto rows = initial_center_rows(static_cast<std::size_t>(n), options.clusters, rng);
    FcmOracleResult out;
    out.centers.resize(c, d);
    for (Eigen::Index k = 0; k < c; ++k) out.centers.row(k) = data.row(static_cast<Eigen::Index>(rows[k]));

    const auto squared = [&](Eigen::Index i, const Matrix& a, Eigen::Index k) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) s += coeff(i, j) * (data(i, j) - a(k, j)) * (data(i, j) - a(k, j));
        return s;
    };
    const auto distance = [&](Eigen::Index i, const Matrix& a, Eigen::Index k) {
        const double s = squared(i, a, k);
        return exponential ? 1.0 - std::exp(-s) : s;
    };

    const double p = 1.0 / (options.m - 1.0);
    Matrix u(n, c);
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < options.max_iterations; ++t) {
        for (Eigen::Index i = 0; i < n; ++i) {
            std::vector<double> dist(static_cast<std::size_t>(c));
            std::size_t zeros = 0;
            for (Eigen::Index k = 0; k < c; ++k) {
                dist[k] = distance(i, out.centers, k);
                zeros += dist[k] == 0.0;
            }
            for (Eigen::Index k = 0; k < c; ++k) {
                if (zeros > 0) {
                    u(i, k) = dist[k] == 0.0 ? 1.0 / static_cast<double>(zeros) : 0.0;
                    continue;
                }
                double denom = 0.0;
                for (Eigen::Index l = 0; l < c; ++l) denom += std::pow(dist[k] / dist[l], p);
                u(i, k) = 1.0 / denom;
            }
        }

        Matrix next = out.centers;
        for (Eigen::Index k = 0; k < c; ++k) {
            std::vector<double> g(static_cast<std::size_t>(n));
            double mass = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                g[i] = std::pow(u(i, k), options.m);
                if (exponential) g[i] *= std::exp(-squared(i, out.centers, k));
                mass += g[i];
            }
            if (!(mass > 0.0)) {
                std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
                next.row(k) = data.row(pick(rng));
                continue;
            }
            // Minimiser of the tangent bound sum_i g_i sum_j coeff_ij (x_ij - a_j)^2.
            for (Eigen::Index j = 0; j < d; ++j) {
                double num = 0.0;
                double den = 0.0;
                double plain = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    num += g[i] * coeff(i, j) * data(i, j);
                    den += g[i] * coeff(i, j);
                    plain += g[i] * data(i, j);
                }
                next(k, j) = den > 0.0 ? num / den : plain / mass;
            }
        }
        out.centers = next;

        double j = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < c; ++k) j += std::pow(u(i, k), options.m) * distance(i, out.centers, k);
        out.objective_trace.push_back(j);
        if (std::abs(j - previous) < options.epsilon) break;
        previous = j;
    }
    out.memberships = u;
    return out;
}

}  // namespace mvfcm
