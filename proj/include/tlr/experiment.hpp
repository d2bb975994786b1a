#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tlr {

/// One pipeline run over seeded trials. The `raw` member keeps the full
/// parsed config so pipeline-specific sections stay schema-checked in one
/// place; every random choice downstream derives from (seed, trial, stage).
struct ExperimentConfig {
    std::string pipeline;  // tensor-allr | compose | globalize | concat-gv | gv-feasibility | distance-stats
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string output;  // report JSON path; empty = stdout only
    std::string csv;     // per-trial CSV path; empty = skip
    std::string raw;     // full config JSON text
};

ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);

struct TrialRecord {
    std::size_t trial = 0;
    bool success = false;
    double metric = 0.0;  // pipeline-specific headline number
    std::uint64_t queries_total = 0;
    std::uint64_t queries_max = 0;  // max single-invocation count
    std::uint64_t list_size = 0;
    std::string detail;  // pipeline-specific, recomputable aggregates feed off it
    double wall_ms = 0.0;
};

struct ExperimentReport {
    std::string pipeline;
    std::string config_echo;  // JSON text
    std::vector<TrialRecord> trials;
    double success_rate = 0.0;
    double metric_min = 0.0, metric_mean = 0.0, metric_max = 0.0;
    double metric_p50 = 0.0, metric_p90 = 0.0;
    std::uint64_t queries_max = 0;
    std::uint64_t list_max = 0;
    std::map<std::string, std::string> extra;  // pipeline-specific aggregates
};

ExperimentReport run_experiment(const ExperimentConfig& config);

std::string report_to_json(const ExperimentReport& report);
std::string report_to_csv(const ExperimentReport& report);

/// Writes report JSON (config.output) and per-trial CSV (config.csv) when
/// those paths are set.
void write_report_files(const ExperimentConfig& config, const ExperimentReport& report);

}  // namespace tlr
