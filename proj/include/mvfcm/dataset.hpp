#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mvfcm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// One view: an n x d_h block of features observed for every sample.
struct ViewMatrix {
    Matrix data;
    std::vector<std::string> feature_names;  // empty or exactly d_h entries
    std::string name;

    std::size_t dims() const { return static_cast<std::size_t>(data.cols()); }
};

/// n samples observed under s views. Views share the row order.
///
/// Construction validates the shape invariants (s >= 1, n >= 1, every view
/// has n rows and at least one column, every entry finite) and throws
/// ValidationError otherwise. The value is immutable afterwards.
class MultiViewDataset {
public:
    explicit MultiViewDataset(std::vector<ViewMatrix> views,
                              std::vector<std::string> sample_ids = {});

    std::size_t samples() const { return n_; }
    std::size_t view_count() const { return views_.size(); }
    const ViewMatrix& view(std::size_t h) const { return views_.at(h); }
    const std::vector<ViewMatrix>& views() const { return views_; }
    const std::vector<std::string>& sample_ids() const { return sample_ids_; }
    std::vector<std::size_t> view_dims() const;
    std::size_t total_dims() const;

private:
    std::vector<ViewMatrix> views_;
    std::vector<std::string> sample_ids_;
    std::size_t n_ = 0;
};

struct LoadOptions {
    bool header = false;  // first line of every view CSV holds feature names
};

/// A dataset read from a manifest plus the optional truth labels it names.
struct LoadedDataset {
    MultiViewDataset dataset;
    std::optional<std::vector<int>> labels;
};

/// Reads a JSON manifest `{"views": [{"name", "path"}...], "labels_path"?}`.
/// Relative paths resolve against the manifest's directory.
LoadedDataset load_dataset(const std::filesystem::path& manifest_path,
                           const LoadOptions& options = {});

/// Parses one view CSV. Errors name the view, 1-based row and column.
ViewMatrix read_view_csv(const std::filesystem::path& path, const std::string& view_name,
                         bool header);

/// One integer label per line.
std::vector<int> read_labels(const std::filesystem::path& path);

/// Writes view_<h>.csv files, the manifest and, when given, labels.csv into
/// `directory`. Values use the shortest round-trip representation, so
/// load_dataset reproduces the matrices bit for bit.
std::filesystem::path save_dataset(const MultiViewDataset& dataset,
                                   const std::filesystem::path& directory,
                                   const std::vector<int>* labels = nullptr);

void write_labels(const std::vector<int>& labels, const std::filesystem::path& path);

/// Rescales every feature column to [0, 1]. Constant columns become zeros.
MultiViewDataset normalize_minmax(const MultiViewDataset& dataset);

struct SyntheticSpec {
    std::size_t n_per_cluster = 50;
    std::size_t clusters = 3;
    std::vector<std::size_t> view_dims{2, 4};
    double separation = 6.0;
    double noise_std = 0.5;
    std::size_t noise_views = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SyntheticData {
    MultiViewDataset dataset;
    std::vector<int> labels;
};

/// Gaussian blobs on a diagonal lattice: cluster k has mean k * separation in
/// every coordinate of every informative view. Noise views ignore the
/// cluster and draw every coordinate from a single Gaussian centred on the
/// lattice midpoint whose spread matches the marginal spread of an
/// informative coordinate; each noise view has the dimension of the first
/// informative view. Samples are ordered by cluster. The output
/// depends only on `spec`, seed included.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

/// Marginal standard deviation of one informative coordinate of
/// generate_synthetic output; used for the noise views.
double synthetic_marginal_std(const SyntheticSpec& spec);

}  // namespace mvfcm
