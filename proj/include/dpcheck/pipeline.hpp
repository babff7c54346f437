#pragma once

#include "dpcheck/detection.hpp"
#include "dpcheck/model.hpp"
#include "dpcheck/pattern_rules.hpp"
#include "dpcheck/reporting.hpp"
#include "dpcheck/scoring.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dpcheck {

struct RunConfig {
    std::filesystem::path repository_dir = "Repository";
    std::filesystem::path pattern_dir = "pattern";
    std::optional<std::filesystem::path> srs_path;
    std::optional<std::filesystem::path> external_path;
    std::optional<std::filesystem::path> truth_path;
    std::filesystem::path out_dir = "out";
    bool dedupe = false;
    bool detect = true;  // score-external runs with detection off
    int jobs = 0;        // 0 = all cores
};

struct PhaseTiming {
    std::string phase;
    double milliseconds = 0.0;
    std::string note;
};

struct RunResult {
    std::vector<PatternDefinition> definitions;
    std::vector<ProjectFacts> projects;
    std::vector<InstanceAssessment> assessments;
    std::vector<SummaryRow> summary;
    std::vector<PhaseTiming> timings;
};

// Library form of the pipeline: load definitions, parse the repository,
// detect and/or import candidates, score, verify, summarize. Throws
// LoadError; writes nothing.
RunResult execute(const RunConfig& config);

// Batch entry point: execute plus artifact files under config.out_dir and
// phase timings on stdout. Returns the process exit code: 0 success,
// 1 missing input directory, 2 I/O failure, 3 rule/catalog validation
// failure.
int run(const RunConfig& config);

}  // namespace dpcheck
