#include "run_record.hpp"

#include "mvfcm/errors.hpp"

namespace mvfcm::cli {

using nlohmann::json;

std::string to_string(Algorithm algorithm) {
    return algorithm == Algorithm::emvfcm ? "emvfcm" : "ebmvfcm";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "emvfcm") return Algorithm::emvfcm;
    if (name == "ebmvfcm") return Algorithm::ebmvfcm;
    throw ValidationError("algorithm: expected 'emvfcm' or 'ebmvfcm', got '" + name + "'");
}

namespace {

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_values(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Matrix rows_matrix(const json& rows) {
    if (!rows.is_array()) throw ValidationError("expected an array of rows");
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.front().size());
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
            throw ValidationError("ragged matrix in run record");
        }
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
    }
    return m;
}

Vector values_vector(const json& values) {
    if (!values.is_array()) throw ValidationError("expected an array of numbers");
    Vector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i].get<double>();
    return v;
}

bool same(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

bool same(const Vector& a, const Vector& b) {
    return a.size() == b.size() && (a.size() == 0 || a == b);
}

template <class T>
bool same_all(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same(a[i], b[i])) return false;
    return true;
}

}  // namespace

json to_json(const EvaluationReport& report) {
    json out;
    if (report.ari) out["ari"] = *report.ari;
    if (report.nmi) out["nmi"] = *report.nmi;
    if (report.accuracy) out["accuracy"] = *report.accuracy;
    out["objective_final"] = report.objective_final;
    out["iterations"] = report.iterations;
    return out;
}

json to_json(const RunRecord& record) {
    json config = {
        {"algorithm", to_string(record.algorithm)},
        {"manifest", record.manifest},
        {"normalize", record.normalize},
        {"header", record.header},
        {"clusters", record.config.clusters},
        {"m", record.config.m},
        {"alpha", record.config.alpha},
        {"epsilon", record.config.epsilon},
        {"max_iterations", record.config.max_iterations},
        {"n_init", record.config.n_init},
        {"seed", record.config.seed},
    };
    if (record.algorithm == Algorithm::ebmvfcm) config["beta"] = record.config.beta;

    const auto& r = record.result;
    json result = {
        {"restart_index", r.restart_index},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"objective_final", r.objective()},
        {"objective_trace", r.objective_trace},
        {"labels", r.labels},
        {"memberships", matrix_rows(r.memberships)},
        {"view_weights", vector_values(r.view_weights)},
    };
    json centroids = json::array();
    for (const auto& a : r.centroids) centroids.push_back(matrix_rows(a));
    result["centroids"] = std::move(centroids);
    if (record.algorithm == Algorithm::ebmvfcm) {
        json w = json::array();
        for (const auto& wh : r.feature_weights) w.push_back(vector_values(wh));
        result["feature_weights"] = std::move(w);
    }

    json out = {
        {"config", std::move(config)},
        {"data", {{"samples", record.samples}, {"view_dims", record.view_dims}}},
        {"restart_objectives", r.restart_objectives},
        {"result", std::move(result)},
    };
    if (record.wall_clock_seconds) out["wall_clock_seconds"] = *record.wall_clock_seconds;
    if (record.metrics) out["metrics"] = to_json(*record.metrics);
    return out;
}

RunRecord run_record_from_json(const json& in) {
    try {
        RunRecord record;
        const auto& config = in.at("config");
        record.algorithm = parse_algorithm(config.at("algorithm").get<std::string>());
        record.manifest = config.at("manifest").get<std::string>();
        record.normalize = config.at("normalize").get<bool>();
        record.header = config.at("header").get<bool>();
        record.config.clusters = config.at("clusters").get<std::size_t>();
        record.config.m = config.at("m").get<double>();
        record.config.alpha = config.at("alpha").get<double>();
        record.config.epsilon = config.at("epsilon").get<double>();
        record.config.max_iterations = config.at("max_iterations").get<std::size_t>();
        record.config.n_init = config.at("n_init").get<std::size_t>();
        record.config.seed = config.at("seed").get<std::uint64_t>();
        if (config.contains("beta")) record.config.beta = config["beta"].get<double>();

        record.samples = in.at("data").at("samples").get<std::size_t>();
        record.view_dims = in.at("data").at("view_dims").get<std::vector<std::size_t>>();

        auto& r = record.result;
        r.restart_objectives = in.at("restart_objectives").get<std::vector<double>>();
        const auto& result = in.at("result");
        r.restart_index = result.at("restart_index").get<std::size_t>();
        r.iterations = result.at("iterations").get<std::size_t>();
        r.converged = result.at("converged").get<bool>();
        r.objective_trace = result.at("objective_trace").get<std::vector<double>>();
        r.labels = result.at("labels").get<std::vector<int>>();
        r.memberships = rows_matrix(result.at("memberships"));
        r.view_weights = values_vector(result.at("view_weights"));
        for (const auto& a : result.at("centroids")) r.centroids.push_back(rows_matrix(a));
        if (result.contains("feature_weights")) {
            for (const auto& w : result["feature_weights"]) r.feature_weights.push_back(values_vector(w));
        }

        if (in.contains("wall_clock_seconds")) record.wall_clock_seconds = in["wall_clock_seconds"].get<double>();
        if (in.contains("metrics")) {
            const auto& m = in["metrics"];
            EvaluationReport report;
            if (m.contains("ari")) report.ari = m["ari"].get<double>();
            if (m.contains("nmi")) report.nmi = m["nmi"].get<double>();
            if (m.contains("accuracy")) report.accuracy = m["accuracy"].get<double>();
            report.objective_final = m.at("objective_final").get<double>();
            report.iterations = m.at("iterations").get<std::size_t>();
            record.metrics = report;
        }
        return record;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed run record: ") + e.what());
    }
}

bool operator==(const RunRecord& a, const RunRecord& b) {
    const auto& ra = a.result;
    const auto& rb = b.result;
    const bool config = a.algorithm == b.algorithm && a.manifest == b.manifest &&
                        a.normalize == b.normalize && a.header == b.header &&
                        a.config.clusters == b.config.clusters && a.config.m == b.config.m &&
                        a.config.alpha == b.config.alpha && a.config.epsilon == b.config.epsilon &&
                        a.config.max_iterations == b.config.max_iterations &&
                        a.config.n_init == b.config.n_init && a.config.seed == b.config.seed &&
                        (a.algorithm == Algorithm::emvfcm || a.config.beta == b.config.beta);
    const bool metrics = a.metrics.has_value() == b.metrics.has_value() &&
                         (!a.metrics || (a.metrics->ari == b.metrics->ari && a.metrics->nmi == b.metrics->nmi &&
                                         a.metrics->accuracy == b.metrics->accuracy &&
                                         a.metrics->objective_final == b.metrics->objective_final &&
                                         a.metrics->iterations == b.metrics->iterations));
    return config && metrics && a.samples == b.samples && a.view_dims == b.view_dims &&
           a.wall_clock_seconds == b.wall_clock_seconds && ra.restart_index == rb.restart_index &&
           ra.iterations == rb.iterations && ra.converged == rb.converged &&
           ra.objective_trace == rb.objective_trace && ra.labels == rb.labels &&
           ra.restart_objectives == rb.restart_objectives && same(ra.memberships, rb.memberships) &&
           same(ra.view_weights, rb.view_weights) && same_all(ra.centroids, rb.centroids) &&
           same_all(ra.feature_weights, rb.feature_weights);
}

}  // namespace mvfcm::cli
