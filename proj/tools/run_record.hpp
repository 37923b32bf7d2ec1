#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvfcm/config.hpp"
#include "mvfcm/metrics.hpp"
#include "mvfcm/types.hpp"

namespace mvfcm::cli {

enum class Algorithm { emvfcm, ebmvfcm };

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);

/// Everything needed to reproduce and inspect one fit. Field names in the
/// JSON form are stable; see README.md for the schema.
struct RunRecord {
    Algorithm algorithm = Algorithm::emvfcm;
    std::string manifest;
    bool normalize = false;
    bool header = false;
    BiLevelConfig config;  // beta is echoed for ebmvfcm only
    std::size_t samples = 0;
    std::vector<std::size_t> view_dims;
    FitResult result;
    std::optional<double> wall_clock_seconds;
    std::optional<EvaluationReport> metrics;
};

nlohmann::json to_json(const RunRecord& record);
RunRecord run_record_from_json(const nlohmann::json& json);

nlohmann::json to_json(const EvaluationReport& report);

bool operator==(const RunRecord& a, const RunRecord& b);

}  // namespace mvfcm::cli
