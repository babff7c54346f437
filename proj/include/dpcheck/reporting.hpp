#pragma once

#include "dpcheck/scoring.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dpcheck {

// Percentages display with one decimal, rounding half up.
std::string format_pct(double value);

// RFC-4180 field: quoted when it holds a space, comma, quote, or newline.
std::string csv_field(const std::string& value);

struct SummaryRow {
    std::string project_name;
    std::string pattern_name;
    int instance_count = 0;
    double avg_score_pct = 0.0;
    int satisfied_count = 0;
    int violated_count = 0;
};

// An instance is satisfied when no violation survived: Discarded ones do
// not count, Pending and Approved ones do.
bool instance_satisfied(const InstanceAssessment& instance);

// Rows grouped by (project, pattern), sorted, averaging instance totals.
std::vector<SummaryRow> summarize(const std::vector<InstanceAssessment>& assessments);

// results.csv: one row per member violation; clean members emit a single
// row with empty violation columns.
std::string render_results_csv(const std::vector<InstanceAssessment>& assessments);

// The per-instance text block: candidate header with role lines, member
// evaluations, recommendations with verification status, total score.
std::string write_instance_report(const InstanceAssessment& assessment);

std::string render_summary_csv(const std::vector<SummaryRow>& rows);

// Violated-instance percentage per pattern, one bar each.
std::string render_ascii_chart(const std::vector<SummaryRow>& project_rows);
std::string render_chart_svg(const std::string& project_name,
                             const std::vector<SummaryRow>& project_rows);

// The full markdown report for a run.
std::string render_report_markdown(const std::vector<InstanceAssessment>& assessments,
                                   const std::vector<ProjectFacts>& projects,
                                   const std::vector<SummaryRow>& summary);

struct SourceComparison {
    std::string source_label;
    int truth_count = 0;
    int detected_count = 0;
    int correct_count = 0;
    int incorrect_count = 0;
    int missed_count = 0;
    bool has_precision = false;
    double precision_pct = 0.0;
    bool has_recall = false;
    double recall_pct = 0.0;
};

// Confusion counts of each candidate source against ground-truth bindings.
// Candidates match on pattern name plus the full letter->class binding.
std::vector<SourceComparison>
compare_sources(const std::vector<CandidateInstance>& detected,
                const std::vector<CandidateInstance>& external,
                const std::vector<CandidateInstance>& truth);

std::string render_comparison(const std::vector<SourceComparison>& rows);

// Writes content creating parent directories; throws LoadError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace dpcheck
