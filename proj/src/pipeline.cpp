#include "dpcheck/pipeline.hpp"

#include "dpcheck/source_facts.hpp"
#include "dpcheck/srs.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace dpcheck {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError("cannot read " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const PatternDefinition*
definition_for(const std::vector<PatternDefinition>& definitions,
               const std::string& pattern_name) {
    for (const auto& def : definitions)
        if (def.rule.pattern_name == pattern_name)
            return &def;
    return nullptr;
}

// External candidates land in the project that defines most of their
// bound classes; ties and unmatched candidates go to the first project.
std::size_t assign_project(const CandidateInstance& candidate,
                           const std::vector<ProjectFacts>& projects) {
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t p = 0; p < projects.size(); ++p) {
        std::size_t count = 0;
        for (const auto& [letter, class_name] : candidate.bindings())
            if (projects[p].classes.count(class_name))
                ++count;
        if (count > best_count) {
            best = p;
            best_count = count;
        }
    }
    return best;
}

}  // namespace

RunResult execute(const RunConfig& config) {
    RunResult result;

    auto start = Clock::now();
    result.definitions = load_pattern_dir(config.pattern_dir);
    if (result.definitions.empty())
        throw LoadError("no patterns loaded from " + config.pattern_dir.string());
    result.timings.push_back({"load-rules", ms_since(start),
                              std::to_string(result.definitions.size()) +
                                  " patterns"});

    start = Clock::now();
    result.projects = parse_repository(config.repository_dir, config.jobs);
    {
        std::size_t files = 0, lines = 0;
        for (const auto& project : result.projects) {
            files += project.file_count;
            lines += project.loc_count;
        }
        result.timings.push_back({"parse-repository", ms_since(start),
                                  std::to_string(result.projects.size()) +
                                      " projects, " + std::to_string(files) +
                                      " files, " + std::to_string(lines) +
                                      " lines"});
    }

    std::vector<CandidateInstance> candidates;
    if (config.detect) {
        start = Clock::now();
        for (const auto& project : result.projects) {
            for (const auto& def : result.definitions) {
                auto found = detect_pattern(def.rule, project, config.jobs);
                if (config.dedupe)
                    found = dedupe_candidates(found, def.catalog, def.rule);
                for (auto& candidate : found)
                    candidates.push_back(std::move(candidate));
            }
        }
        result.timings.push_back({"detect", ms_since(start),
                                  std::to_string(candidates.size()) +
                                      " candidates"});
    }

    if (config.external_path) {
        start = Clock::now();
        std::vector<PatternRule> rules;
        for (const auto& def : result.definitions)
            rules.push_back(def.rule);
        auto external = parse_external_candidates(
            read_file(*config.external_path), config.external_path->string(),
            rules);
        if (result.projects.empty()) {
            // Nothing parsed from source; give imports a home so scoring
            // still runs (every member then counts as missing).
            ProjectFacts placeholder;
            placeholder.project_name = "external";
            result.projects.push_back(std::move(placeholder));
        }
        std::map<std::pair<std::string, std::string>, int> next_id;
        for (const auto& candidate : candidates)
            next_id[{candidate.project_name, candidate.pattern_name}] =
                candidate.instance_id;
        for (auto& candidate : external.candidates) {
            std::size_t p = assign_project(candidate, result.projects);
            candidate.project_name = result.projects[p].project_name;
            int& id = next_id[{candidate.project_name, candidate.pattern_name}];
            candidate.instance_id = ++id;
            candidates.push_back(std::move(candidate));
        }
        for (auto& warning : external.warnings)
            result.projects[0].warnings.push_back(std::move(warning));
        result.timings.push_back({"import-external", ms_since(start),
                                  std::to_string(external.candidates.size()) +
                                      " candidates"});
    }

    start = Clock::now();
    std::map<std::string, const ProjectFacts*> project_by_name;
    for (const auto& project : result.projects)
        project_by_name[project.project_name] = &project;
    for (const auto& candidate : candidates) {
        const PatternDefinition* def =
            definition_for(result.definitions, candidate.pattern_name);
        const ProjectFacts* facts = project_by_name.at(candidate.project_name);
        result.assessments.push_back(assess_instance(candidate, *def, *facts));
    }
    result.timings.push_back({"score", ms_since(start),
                              std::to_string(result.assessments.size()) +
                                  " instances"});

    if (config.srs_path) {
        start = Clock::now();
        auto triples = extract_triples(read_file(*config.srs_path));
        verify_violations(result.assessments, triples);
        int approved = 0, discarded = 0;
        for (const auto& instance : result.assessments)
            for (const auto& member : instance.members)
                for (const auto& violation : member.violations) {
                    if (violation.status == VerificationStatus::Approved)
                        ++approved;
                    if (violation.status == VerificationStatus::Discarded)
                        ++discarded;
                }
        result.timings.push_back({"verify", ms_since(start),
                                  std::to_string(triples.size()) + " triples, " +
                                      std::to_string(approved) + " approved, " +
                                      std::to_string(discarded) + " discarded"});
    }

    std::sort(result.assessments.begin(), result.assessments.end(),
              [](const InstanceAssessment& a, const InstanceAssessment& b) {
                  const auto& ca = a.candidate;
                  const auto& cb = b.candidate;
                  if (ca.project_name != cb.project_name)
                      return ca.project_name < cb.project_name;
                  if (ca.pattern_name != cb.pattern_name)
                      return ca.pattern_name < cb.pattern_name;
                  return ca.instance_id < cb.instance_id;
              });
    result.summary = summarize(result.assessments);
    return result;
}

int run(const RunConfig& config) {
    if (!std::filesystem::is_directory(config.repository_dir)) {
        std::cerr << "error: repository directory does not exist: "
                  << config.repository_dir.string()
                  << "\nrun with --help for usage\n";
        return 1;
    }
    if (!std::filesystem::is_directory(config.pattern_dir)) {
        std::cerr << "error: pattern directory does not exist: "
                  << config.pattern_dir.string()
                  << "\nrun with --help for usage\n";
        return 1;
    }

    auto total_start = Clock::now();
    RunResult result;
    try {
        result = execute(config);
    } catch (const LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        // Rule and catalog problems surface before any other phase runs.
        std::string what = e.what();
        bool rule_phase = what.find(".rules") != std::string::npos ||
                          what.find(".chars") != std::string::npos ||
                          what.find("no patterns loaded") != std::string::npos ||
                          what.find("characteristics file") != std::string::npos;
        return rule_phase ? 3 : 2;
    }

    try {
        write_text_file(config.out_dir / "results.csv",
                        render_results_csv(result.assessments));
        write_text_file(config.out_dir / "report.md",
                        render_report_markdown(result.assessments,
                                               result.projects, result.summary));
        write_text_file(config.out_dir / "summary.csv",
                        render_summary_csv(result.summary));
        for (const auto& project : result.projects) {
            std::vector<SummaryRow> rows;
            for (const auto& row : result.summary)
                if (row.project_name == project.project_name)
                    rows.push_back(row);
            write_text_file(config.out_dir / "charts" /
                                (project.project_name + ".svg"),
                            render_chart_svg(project.project_name, rows));
        }

        if (config.truth_path) {
            std::vector<PatternRule> rules;
            for (const auto& def : result.definitions)
                rules.push_back(def.rule);
            auto truth = parse_external_candidates(
                read_file(*config.truth_path), config.truth_path->string(),
                rules);
            std::vector<CandidateInstance> detected, external;
            for (const auto& instance : result.assessments) {
                if (instance.candidate.source == CandidateSource::Detected)
                    detected.push_back(instance.candidate);
                else
                    external.push_back(instance.candidate);
            }
            auto comparison =
                compare_sources(detected, external, truth.candidates);
            std::string table = render_comparison(comparison);
            write_text_file(config.out_dir / "compare.md", table);
            std::cout << table;
        }
    } catch (const LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (const auto& timing : result.timings)
        std::cout << timing.phase << ": " << format_pct(timing.milliseconds)
                  << " ms (" << timing.note << ")\n";
    std::cout << "total: " << format_pct(ms_since(total_start)) << " ms\n";
    return 0;
}

}  // namespace dpcheck
