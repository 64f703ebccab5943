#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlab/extrap.hpp"
#include "orlab/young.hpp"

namespace orlab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteRow {
    std::string entry;
    std::string anchor;
    int n = 0;
    double constant = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  // empty unless something is worth flagging
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteRow> rows;
    bool counterexample = false;
    bool all_pass() const;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    std::string anchor;
};

// the nine registered verification suites
const std::vector<SuiteInfo>& suite_registry();

struct ExperimentConfig {
    std::string suite;
    // corpus entries to run; plain names select functions, "u|v" names select
    // weight pairs; empty means everything
    std::vector<std::string> corpus_names;
    double lo = -1.0;
    double hi = 1.0;
    std::vector<int> n_list;
    std::optional<GrowthFunction> growth;
    std::optional<ExtrapolationConfig> extrap;
    std::string output_dir = "orlab-out";
    std::uint64_t seed = 0;

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json_config() const;
    void validate() const;  // throws ConfigError
};

SuiteResult run_suite(const ExperimentConfig& cfg);

struct ReportBundle {
    SuiteResult result;
    nlohmann::json report;  // {"header": {...}, "body": {...}}
    std::string summary_csv;
    std::vector<std::pair<std::string, std::string>> svgs;  // filename -> markup
};

// pure part: compute everything, no filesystem access
ReportBundle run_experiment(const ExperimentConfig& cfg);

// writes report.json, summary.csv and the SVGs under cfg.output_dir
void write_bundle(const ReportBundle& bundle, const std::string& dir);

}  // namespace orlab
