#include "dpcheck/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dpcheck {

namespace {

// Fixed-point one-decimal text without locale or binary-rounding surprises.
std::string fixed1(double value) {
    bool negative = value < 0;
    double magnitude = negative ? -value : value;
    long long tenths = static_cast<long long>(std::floor(magnitude * 10.0 + 0.5));
    std::string out = negative && tenths != 0 ? "-" : "";
    out += std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
    return out;
}

std::string lowercase(const std::string& word) {
    std::string out = word;
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

// "ConcreteStrategy" reads as "Concrete Strategy"; names that already
// contain spaces (external role words) pass through unchanged.
std::string humanize_role(const std::string& role_name) {
    if (role_name.find(' ') != std::string::npos)
        return role_name;
    std::string out;
    for (std::size_t i = 0; i < role_name.size(); ++i) {
        char c = role_name[i];
        if (i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
            std::islower(static_cast<unsigned char>(role_name[i - 1])))
            out += ' ';
        out += c;
    }
    return out;
}

std::string status_line(const ViolationRecord& violation) {
    const std::string from = lowercase(violation.from_class);
    const std::string to = lowercase(violation.to_class);
    switch (violation.status) {
    case VerificationStatus::Approved:
        if (violation.kind == ViolationKind::AbstractionMismatch)
            return "Approved: This violation concerns the declared "
                   "abstraction of ( " + from + " ) in source code.";
        return "Approved: This violation has to be solved according to the "
               "relationship between ( " + from + " ) and ( " + to +
               " ) in SRS document.";
    case VerificationStatus::Discarded:
        return "Discarded: This violation is discarded due to the absence "
               "of a relationship between ( " + from + " ) and ( " + to +
               " ) in SRS document.";
    case VerificationStatus::Pending:
        break;
    }
    return "Pending: This violation has not been verified against an SRS "
           "document.";
}

bool rescored(double now, double before) {
    return std::abs(now - before) > 1e-9;
}

std::string binding_key(const CandidateInstance& candidate) {
    std::string key = candidate.pattern_name;
    for (const auto& [letter, class_name] : candidate.bindings()) {
        key += '\n';
        key += letter;
        key += ' ';
        key += class_name;
    }
    return key;
}

SourceComparison compare_one(const std::string& label,
                             const std::vector<CandidateInstance>& candidates,
                             const std::set<std::string>& truth_keys) {
    SourceComparison row;
    row.source_label = label;
    row.truth_count = static_cast<int>(truth_keys.size());
    std::set<std::string> detected_keys;
    for (const auto& candidate : candidates)
        detected_keys.insert(binding_key(candidate));
    row.detected_count = static_cast<int>(detected_keys.size());
    for (const auto& key : detected_keys)
        if (truth_keys.count(key))
            ++row.correct_count;
    row.incorrect_count = row.detected_count - row.correct_count;
    row.missed_count = row.truth_count - row.correct_count;
    if (row.detected_count > 0 && row.truth_count > 0) {
        row.has_precision = true;
        row.precision_pct = 100.0 * row.correct_count / row.detected_count;
    }
    if (row.truth_count > 0) {
        row.has_recall = true;
        row.recall_pct = 100.0 * row.correct_count / row.truth_count;
    }
    return row;
}

}  // namespace

std::string format_pct(double value) {
    return fixed1(value);
}

std::string csv_field(const std::string& value) {
    bool needs_quotes = value.find_first_of(" ,\"\r\n") != std::string::npos;
    if (!needs_quotes)
        return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

bool instance_satisfied(const InstanceAssessment& instance) {
    for (const auto& member : instance.members)
        for (const auto& violation : member.violations)
            if (violation.status != VerificationStatus::Discarded)
                return false;
    return true;
}

std::vector<SummaryRow> summarize(const std::vector<InstanceAssessment>& assessments) {
    std::map<std::pair<std::string, std::string>, SummaryRow> grouped;
    for (const auto& instance : assessments) {
        auto key = std::make_pair(instance.candidate.project_name,
                                  instance.candidate.pattern_name);
        SummaryRow& row = grouped[key];
        row.project_name = key.first;
        row.pattern_name = key.second;
        ++row.instance_count;
        row.avg_score_pct += instance.total_pct;  // sum; divided below
        if (instance_satisfied(instance))
            ++row.satisfied_count;
        else
            ++row.violated_count;
    }
    std::vector<SummaryRow> rows;
    rows.reserve(grouped.size());
    for (auto& [key, row] : grouped) {
        row.avg_score_pct /= row.instance_count;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_results_csv(const std::vector<InstanceAssessment>& assessments) {
    std::ostringstream out;
    out << "project,pattern,instance_id,source,role,class,member_score_pct,"
           "violation_kind,expected,recommendation,verification_status,"
           "instance_total_pct\n";
    for (const auto& instance : assessments) {
        const auto& candidate = instance.candidate;
        const std::string prefix = csv_field(candidate.project_name) + "," +
                                   csv_field(candidate.pattern_name) + "," +
                                   std::to_string(candidate.instance_id) + "," +
                                   to_string(candidate.source) + ",";
        const std::string total = format_pct(instance.total_pct);
        for (const auto& member : instance.members) {
            const std::string member_part = csv_field(member.role_name) + "," +
                                            csv_field(member.class_name) + "," +
                                            format_pct(member.score_pct) + ",";
            if (member.violations.empty()) {
                out << prefix << member_part << ",,,," << total << "\n";
                continue;
            }
            for (const auto& violation : member.violations) {
                out << prefix << member_part << to_string(violation.kind) << ","
                    << csv_field(violation.expected) << ","
                    << csv_field(violation.recommendation) << ","
                    << to_string(violation.status) << "," << total << "\n";
            }
        }
    }
    return out.str();
}

std::string write_instance_report(const InstanceAssessment& assessment) {
    const auto& candidate = assessment.candidate;
    std::ostringstream out;
    out << "Candidate of Pattern " << candidate.pattern_name << " ("
        << candidate.instance_id << ")";
    if (candidate.source == CandidateSource::External)
        out << " [external]";
    out << ":\n";
    for (const auto& member : candidate.members)
        out << member.letter << "(" << humanize_role(member.role_name)
            << "): " << member.class_name << "\n";
    out << "\nDesign pattern violation identification:\n";
    for (const auto& member : assessment.members) {
        out << "\n" << member.class_name
            << " (Evaluation : " << format_pct(member.score_pct) << " %)";
        if (rescored(member.score_pct, member.initial_score_pct))
            out << " (before verification : "
                << format_pct(member.initial_score_pct) << " %)";
        out << "\n";
        for (const auto& violation : member.violations) {
            out << "Recommendation: " << violation.recommendation << "\n";
            out << status_line(violation) << "\n";
        }
    }
    out << "\nTotal score : " << format_pct(assessment.total_pct) << " %";
    if (rescored(assessment.total_pct, assessment.initial_total_pct))
        out << " (before verification : "
            << format_pct(assessment.initial_total_pct) << " %)";
    out << "\n";
    return out.str();
}

std::string render_summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "project,pattern,instance_count,avg_score_pct,satisfied_count,"
           "violated_count\n";
    for (const auto& row : rows)
        out << csv_field(row.project_name) << "," << csv_field(row.pattern_name)
            << "," << row.instance_count << "," << format_pct(row.avg_score_pct)
            << "," << row.satisfied_count << "," << row.violated_count << "\n";
    return out.str();
}

std::string render_ascii_chart(const std::vector<SummaryRow>& project_rows) {
    if (project_rows.empty())
        return "(no instances)\n";
    std::size_t width = 0;
    for (const auto& row : project_rows)
        width = std::max(width, row.pattern_name.size());
    std::ostringstream out;
    for (const auto& row : project_rows) {
        double pct = row.instance_count == 0
                         ? 0.0
                         : 100.0 * row.violated_count / row.instance_count;
        int filled = static_cast<int>(std::floor(pct / 100.0 * 40.0 + 0.5));
        out << row.pattern_name
            << std::string(width - row.pattern_name.size(), ' ') << " |"
            << std::string(filled, '#') << std::string(40 - filled, ' ')
            << "| " << format_pct(pct) << "% (" << row.violated_count << "/"
            << row.instance_count << ")\n";
    }
    return out.str();
}

std::string render_chart_svg(const std::string& project_name,
                             const std::vector<SummaryRow>& project_rows) {
    const double width = 640, height = 400;
    const double left = 60, right = 20, top = 48, bottom = 72;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
           "height=\"400\" viewBox=\"0 0 640 400\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\" fill=\"#333333\">"
        << project_name << ": violated instances per pattern</text>\n";
    for (int tick = 0; tick <= 100; tick += 20) {
        double y = top + plot_h - plot_h * tick / 100.0;
        out << "<line x1=\"" << fixed1(left) << "\" y1=\"" << fixed1(y)
            << "\" x2=\"" << fixed1(left + plot_w) << "\" y2=\"" << fixed1(y)
            << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fixed1(left - 8) << "\" y=\"" << fixed1(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\" fill=\"#333333\">" << tick << "</text>\n";
    }
    const std::size_t n = project_rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        const SummaryRow& row = project_rows[i];
        double pct = row.instance_count == 0
                         ? 0.0
                         : 100.0 * row.violated_count / row.instance_count;
        double slot = plot_w / static_cast<double>(n);
        double bar_w = slot * 0.6;
        double x = left + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
        double bar_h = plot_h * pct / 100.0;
        double y = top + plot_h - bar_h;
        out << "<rect x=\"" << fixed1(x) << "\" y=\"" << fixed1(y)
            << "\" width=\"" << fixed1(bar_w) << "\" height=\"" << fixed1(bar_h)
            << "\" fill=\"#4472a8\"/>\n";
        out << "<text x=\"" << fixed1(x + bar_w / 2.0) << "\" y=\""
            << fixed1(y - 6) << "\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">"
            << format_pct(pct) << "</text>\n";
        out << "<text x=\"" << fixed1(x + bar_w / 2.0) << "\" y=\""
            << fixed1(top + plot_h + 16) << "\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">"
            << row.pattern_name << "</text>\n";
    }
    out << "<line x1=\"" << fixed1(left) << "\" y1=\"" << fixed1(top)
        << "\" x2=\"" << fixed1(left) << "\" y2=\"" << fixed1(top + plot_h)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << fixed1(left) << "\" y1=\"" << fixed1(top + plot_h)
        << "\" x2=\"" << fixed1(left + plot_w) << "\" y2=\""
        << fixed1(top + plot_h) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_report_markdown(const std::vector<InstanceAssessment>& assessments,
                                   const std::vector<ProjectFacts>& projects,
                                   const std::vector<SummaryRow>& summary) {
    std::ostringstream out;
    out << "# Design pattern conformance report\n";
    for (const auto& project : projects) {
        out << "\n## Project " << project.project_name << "\n\n";
        out << "Files: " << project.file_count << " | Classes: "
            << project.classes.size() << " | Lines: " << project.loc_count
            << "\n";

        std::vector<const InstanceAssessment*> local;
        for (const auto& instance : assessments)
            if (instance.candidate.project_name == project.project_name)
                local.push_back(&instance);

        out << "\n### Instances\n";
        if (local.empty()) {
            out << "\nNo candidate instances.\n";
        } else {
            for (const auto* instance : local)
                out << "\n```text\n" << write_instance_report(*instance)
                    << "```\n";
        }

        std::vector<SummaryRow> local_summary;
        for (const auto& row : summary)
            if (row.project_name == project.project_name)
                local_summary.push_back(row);
        if (!local_summary.empty()) {
            out << "\n### Summary\n\n";
            out << "| Pattern | Instances | Avg score % | Satisfied | Violated |\n";
            out << "| --- | --- | --- | --- | --- |\n";
            for (const auto& row : local_summary)
                out << "| " << row.pattern_name << " | " << row.instance_count
                    << " | " << format_pct(row.avg_score_pct) << " | "
                    << row.satisfied_count << " | " << row.violated_count
                    << " |\n";
            out << "\n### Violated instances chart\n\n```text\n"
                << render_ascii_chart(local_summary) << "```\n";
        }

        if (!project.warnings.empty()) {
            out << "\n### Warnings\n\n";
            for (const auto& warning : project.warnings)
                out << "- " << warning << "\n";
        }
    }
    return out.str();
}

std::vector<SourceComparison>
compare_sources(const std::vector<CandidateInstance>& detected,
                const std::vector<CandidateInstance>& external,
                const std::vector<CandidateInstance>& truth) {
    std::set<std::string> truth_keys;
    for (const auto& candidate : truth)
        truth_keys.insert(binding_key(candidate));
    return {compare_one("detected", detected, truth_keys),
            compare_one("external", external, truth_keys)};
}

std::string render_comparison(const std::vector<SourceComparison>& rows) {
    std::ostringstream out;
    out << "| Source | Truth | Detected | Correct | Incorrect | Missed | "
           "Precision % | Recall % |\n";
    out << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
    for (const auto& row : rows) {
        out << "| " << row.source_label << " | " << row.truth_count << " | "
            << row.detected_count << " | " << row.correct_count << " | "
            << row.incorrect_count << " | " << row.missed_count << " | "
            << (row.has_precision ? format_pct(row.precision_pct) : "n/a")
            << " | " << (row.has_recall ? format_pct(row.recall_pct) : "n/a")
            << " |\n";
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw LoadError("cannot write " + path.string());
    out << content;
    if (!out)
        throw LoadError("write failed: " + path.string());
}

}  // namespace dpcheck
