#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <unistd.h>

#include "mvfcm/dataset.hpp"
#include "mvfcm/kernel.hpp"
#include "mvfcm/restarts.hpp"
#include "mvfcm/types.hpp"

namespace mvfcm::gen {

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("mvfcm_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& text) const {
        std::ofstream(path_ / name) << text;
        return path_ / name;
    }

private:
    std::filesystem::path path_;
};

// Hand-rolled generators for property tests.

inline Vector random_simplex(std::size_t size, std::mt19937_64& rng) {
    std::exponential_distribution<double> draw(1.0);
    Vector v(static_cast<Eigen::Index>(size));
    for (auto& x : v) x = draw(rng) + 1e-12;
    return v / v.sum();
}

inline Matrix random_memberships(std::size_t n, std::size_t c, std::mt19937_64& rng) {
    Matrix u(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(c));
    for (Eigen::Index i = 0; i < u.rows(); ++i) u.row(i) = random_simplex(c, rng).transpose();
    return u;
}

inline FeatureWeights random_feature_weights(const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
    FeatureWeights w;
    for (auto d : dims) w.push_back(random_simplex(d, rng));
    return w;
}

inline MultiViewDataset random_dataset(std::size_t n, const std::vector<std::size_t>& dims,
                                       std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> value(0.0, scale);
    std::vector<ViewMatrix> views;
    for (auto d : dims) {
        Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
        for (auto& v : x.reshaped()) v = value(rng);
        views.push_back({std::move(x), {}, {}});
    }
    return MultiViewDataset(std::move(views));
}

inline CentroidSet random_centers(const MultiViewDataset& data, std::size_t c, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CentroidSet centers;
    for (const auto& view : data.views()) {
        Matrix a(static_cast<Eigen::Index>(c), view.data.cols());
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const double lo = view.data.col(j).minCoeff();
            const double hi = view.data.col(j).maxCoeff();
            for (Eigen::Index k = 0; k < a.rows(); ++k) a(k, j) = lo + (hi - lo) * unit(rng);
        }
        centers.push_back(std::move(a));
    }
    return centers;
}

struct RandomShape {
    std::size_t n = 0;
    std::size_t c = 0;
    std::vector<std::size_t> dims;
};

inline RandomShape random_shape(std::mt19937_64& rng, std::size_t max_n, std::size_t max_c,
                                std::size_t max_s, std::size_t max_d) {
    std::uniform_int_distribution<std::size_t> c_draw(2, max_c);
    RandomShape shape;
    shape.c = c_draw(rng);
    std::uniform_int_distribution<std::size_t> n_draw(shape.c, std::max(shape.c, max_n));
    shape.n = n_draw(rng);
    std::uniform_int_distribution<std::size_t> s_draw(1, max_s);
    std::uniform_int_distribution<std::size_t> d_draw(1, max_d);
    shape.dims.resize(s_draw(rng));
    for (auto& d : shape.dims) d = d_draw(rng);
    return shape;
}

/// Min-max normalised synthetic benchmark (3 clusters, views of dims 2 and 4
/// by default), optionally with appended pure-noise views.
inline SyntheticData normalized_benchmark(std::uint64_t seed, std::size_t noise_views = 0) {
    SyntheticSpec spec;
    spec.seed = seed;
    spec.noise_views = noise_views;
    auto data = generate_synthetic(spec);
    return {normalize_minmax(data.dataset), std::move(data.labels)};
}

/// View 0 holds two informative features; view 1 holds one informative
/// feature (column 0) followed by three pure-noise features.
inline SyntheticData feature_benchmark(std::uint64_t seed) {
    SyntheticSpec spec;
    spec.seed = seed;
    spec.view_dims = {3, 2, 1};
    spec.noise_views = 1;
    auto raw = generate_synthetic(spec);
    const auto& informative = raw.dataset.view(2).data;
    const auto& noise = raw.dataset.view(3).data;
    Matrix mixed(informative.rows(), 4);
    mixed << informative, noise;
    MultiViewDataset data({raw.dataset.view(1), {std::move(mixed), {}, "mixed"}});
    return {normalize_minmax(data), std::move(raw.labels)};
}

inline std::vector<double> flatten_rows(const Matrix& m) {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

inline Matrix unflatten_rows(std::span<const double> values, Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = values[static_cast<std::size_t>(i * cols + j)];
    return m;
}

}  // namespace mvfcm::gen
