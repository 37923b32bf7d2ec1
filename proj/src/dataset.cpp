#include "mvfcm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mvfcm/errors.hpp"

namespace mvfcm {

namespace fs = std::filesystem;

MultiViewDataset::MultiViewDataset(std::vector<ViewMatrix> views,
                                   std::vector<std::string> sample_ids)
    : views_(std::move(views)), sample_ids_(std::move(sample_ids)) {
    if (views_.empty()) {
        throw ValidationError("dataset needs at least one view");
    }
    n_ = static_cast<std::size_t>(views_.front().data.rows());
    if (n_ == 0) {
        throw ValidationError("dataset needs at least one sample");
    }
    for (std::size_t h = 0; h < views_.size(); ++h) {
        const auto& v = views_[h];
        const std::string label = v.name.empty() ? "view " + std::to_string(h) : "view '" + v.name + "'";
        if (static_cast<std::size_t>(v.data.rows()) != n_) {
            throw ValidationError("row-count mismatch: " + label + " has " +
                                  std::to_string(v.data.rows()) + " rows, expected " +
                                  std::to_string(n_));
        }
        if (v.data.cols() == 0) {
            throw ValidationError(label + " has no features");
        }
        if (!v.feature_names.empty() && v.feature_names.size() != v.dims()) {
            throw ValidationError(label + " has " + std::to_string(v.feature_names.size()) +
                                  " feature names for " + std::to_string(v.dims()) + " columns");
        }
        if (!v.data.allFinite()) {
            throw ValidationError(label + " contains non-finite values");
        }
    }
    if (!sample_ids_.empty() && sample_ids_.size() != n_) {
        throw ValidationError("sample id count does not match sample count");
    }
}

std::vector<std::size_t> MultiViewDataset::view_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(views_.size());
    for (const auto& v : views_) dims.push_back(v.dims());
    return dims;
}

std::size_t MultiViewDataset::total_dims() const {
    std::size_t total = 0;
    for (const auto& v : views_) total += v.dims();
    return total;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

bool parse_double(std::string_view cell, double& out) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return false;
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, out);
    return ec == std::errc() && ptr == end;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return in;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

ViewMatrix read_view_csv(const fs::path& path, const std::string& view_name, bool header) {
    auto in = open_input(path);
    ViewMatrix view;
    view.name = view_name;
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::string line;
    bool header_pending = header;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto cells = split_commas(content);
        if (header_pending) {
            header_pending = false;
            for (auto c : cells) view.feature_names.emplace_back(c);
            cols = cells.size();
            continue;
        }
        if (cols == 0) cols = cells.size();
        if (cells.size() != cols) {
            throw ValidationError("view '" + view_name + "' row " + std::to_string(rows + 1) +
                                  ": expected " + std::to_string(cols) + " columns, found " +
                                  std::to_string(cells.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double v = 0.0;
            if (!parse_double(cells[j], v) || !std::isfinite(v)) {
                throw ValidationError("non-numeric cell in view '" + view_name + "' at row " +
                                      std::to_string(rows + 1) + ", column " + std::to_string(j + 1) +
                                      ": '" + std::string(cells[j]) + "'");
            }
            values.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) {
        throw ValidationError("view '" + view_name + "' is empty (" + path.string() + ")");
    }
    view.data.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            view.data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[i * cols + j];
    return view;
}

std::vector<int> read_labels(const fs::path& path) {
    auto in = open_input(path);
    std::vector<int> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) continue;
        int v = 0;
        const auto* end = content.data() + content.size();
        const auto [ptr, ec] = std::from_chars(content.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            throw ValidationError("labels file '" + path.string() + "' line " +
                                  std::to_string(line_no) + ": not an integer: '" +
                                  std::string(content) + "'");
        }
        labels.push_back(v);
    }
    return labels;
}

LoadedDataset load_dataset(const fs::path& manifest_path, const LoadOptions& options) {
    auto in = open_input(manifest_path);
    nlohmann::json manifest;
    try {
        in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("manifest '" + manifest_path.string() + "' is not valid JSON: " + e.what());
    }
    if (!manifest.is_object() || !manifest.contains("views") || !manifest["views"].is_array()) {
        throw ValidationError("manifest must be an object with a 'views' array");
    }
    const auto base = manifest_path.parent_path();
    const auto resolve = [&](const std::string& p) {
        fs::path path(p);
        return path.is_absolute() ? path : base / path;
    };

    std::vector<ViewMatrix> views;
    for (std::size_t h = 0; h < manifest["views"].size(); ++h) {
        const auto& entry = manifest["views"][h];
        if (!entry.is_object() || !entry.contains("path") || !entry["path"].is_string()) {
            throw ValidationError("manifest views[" + std::to_string(h) + "] needs a string 'path'");
        }
        std::string name = "view" + std::to_string(h);
        if (entry.contains("name")) {
            if (!entry["name"].is_string()) {
                throw ValidationError("manifest views[" + std::to_string(h) + "].name must be a string");
            }
            name = entry["name"].get<std::string>();
        }
        views.push_back(read_view_csv(resolve(entry["path"].get<std::string>()), name, options.header));
    }

    LoadedDataset loaded{MultiViewDataset(std::move(views)), std::nullopt};
    if (manifest.contains("labels_path") && !manifest["labels_path"].is_null()) {
        if (!manifest["labels_path"].is_string()) {
            throw ValidationError("manifest 'labels_path' must be a string");
        }
        auto labels = read_labels(resolve(manifest["labels_path"].get<std::string>()));
        if (labels.size() != loaded.dataset.samples()) {
            throw ValidationError("labels file has " + std::to_string(labels.size()) +
                                  " entries, expected n = " + std::to_string(loaded.dataset.samples()));
        }
        loaded.labels = std::move(labels);
    }
    return loaded;
}

void write_labels(const std::vector<int>& labels, const fs::path& path) {
    auto out = open_output(path);
    for (int l : labels) out << l << '\n';
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

fs::path save_dataset(const MultiViewDataset& dataset, const fs::path& directory,
                      const std::vector<int>* labels) {
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) throw IoError("cannot create directory '" + directory.string() + "': " + ec.message());

    nlohmann::json manifest;
    manifest["views"] = nlohmann::json::array();
    for (std::size_t h = 0; h < dataset.view_count(); ++h) {
        const auto& view = dataset.view(h);
        const std::string file = "view_" + std::to_string(h) + ".csv";
        auto out = open_output(directory / file);
        for (Eigen::Index i = 0; i < view.data.rows(); ++i) {
            std::string row;
            for (Eigen::Index j = 0; j < view.data.cols(); ++j) {
                if (j) row += ',';
                row += format_double(view.data(i, j));
            }
            out << row << '\n';
        }
        if (!out) throw IoError("failed writing '" + (directory / file).string() + "'");
        manifest["views"].push_back({{"name", view.name.empty() ? "view" + std::to_string(h) : view.name},
                                     {"path", file}});
    }
    if (labels != nullptr) {
        if (labels->size() != dataset.samples()) {
            throw ValidationError("label count does not match sample count");
        }
        write_labels(*labels, directory / "labels.csv");
        manifest["labels_path"] = "labels.csv";
    }
    const auto manifest_path = directory / "manifest.json";
    auto out = open_output(manifest_path);
    out << manifest.dump(2) << '\n';
    if (!out) throw IoError("failed writing '" + manifest_path.string() + "'");
    return manifest_path;
}

MultiViewDataset normalize_minmax(const MultiViewDataset& dataset) {
    std::vector<ViewMatrix> views = dataset.views();
    for (auto& view : views) {
        for (Eigen::Index j = 0; j < view.data.cols(); ++j) {
            auto col = view.data.col(j);
            const double lo = col.minCoeff();
            const double range = col.maxCoeff() - lo;
            if (range > 0.0) {
                col = (col.array() - lo) / range;
            } else {
                col.setZero();
            }
        }
    }
    return MultiViewDataset(std::move(views), dataset.sample_ids());
}

void SyntheticSpec::validate() const {
    if (n_per_cluster == 0) throw ValidationError("per-cluster sample count must be positive");
    if (clusters < 2) throw ValidationError("cluster count must be at least 2");
    if (view_dims.empty()) throw ValidationError("at least one view dimension is required");
    for (auto d : view_dims) {
        if (d == 0) throw ValidationError("view dimensions must be positive");
    }
    if (!(separation > 0.0) || !std::isfinite(separation)) {
        throw ValidationError("separation must be positive");
    }
    if (!(noise_std > 0.0) || !std::isfinite(noise_std)) {
        throw ValidationError("noise standard deviation must be positive");
    }
}

double synthetic_marginal_std(const SyntheticSpec& spec) {
    const auto c = static_cast<double>(spec.clusters);
    // cluster means are uniform over {0, sep, ..., (c-1) sep}
    const double between = spec.separation * spec.separation * (c * c - 1.0) / 12.0;
    return std::sqrt(between + spec.noise_std * spec.noise_std);
}

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n_per_cluster * spec.clusters;
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> unit(0.0, 1.0);

    std::vector<Matrix> informative;
    for (auto d : spec.view_dims) informative.emplace_back(n, d);
    const std::size_t noise_dims = spec.view_dims.front();
    std::vector<Matrix> noise(spec.noise_views, Matrix(n, noise_dims));
    const double noise_mean = 0.5 * static_cast<double>(spec.clusters - 1) * spec.separation;
    const double noise_spread = synthetic_marginal_std(spec);

    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = i / spec.n_per_cluster;
        labels[i] = static_cast<int>(k);
        const double mean = static_cast<double>(k) * spec.separation;
        const auto row = static_cast<Eigen::Index>(i);
        for (auto& m : informative)
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = mean + spec.noise_std * unit(rng);
        for (auto& m : noise)
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = noise_mean + noise_spread * unit(rng);
    }

    std::vector<ViewMatrix> views;
    for (std::size_t h = 0; h < informative.size(); ++h)
        views.push_back({std::move(informative[h]), {}, "view" + std::to_string(h)});
    for (std::size_t h = 0; h < noise.size(); ++h)
        views.push_back({std::move(noise[h]), {}, "noise" + std::to_string(h)});
    return {MultiViewDataset(std::move(views)), std::move(labels)};
}

}  // namespace mvfcm
