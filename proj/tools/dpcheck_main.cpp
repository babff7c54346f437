#include "CLI11.hpp"

#include "dpcheck/pattern_rules.hpp"
#include "dpcheck/pipeline.hpp"

#include <filesystem>
#include <iostream>
#include <string>

namespace {

struct CliOptions {
    std::string repo = "Repository";
    std::string patterns = "pattern";
    std::string srs;
    std::string external;
    std::string truth;
    std::string out = "out";
    bool dedupe = false;
    int jobs = 0;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--repo", opt.repo,
                    "repository directory; each subdirectory is one project")
        ->capture_default_str();
    cmd->add_option("--patterns", opt.patterns,
                    "directory holding .rules and .chars files")
        ->capture_default_str();
    cmd->add_option("--srs", opt.srs,
                    "plain-text requirements document; enables violation "
                    "verification");
    cmd->add_option("--external", opt.external,
                    "instances detected by another tool (block format, End "
                    "terminated)");
    cmd->add_option("--truth", opt.truth,
                    "ground-truth instances for the precision/recall table");
    cmd->add_option("--out", opt.out, "output directory for reports")
        ->capture_default_str();
    cmd->add_flag("--dedupe", opt.dedupe,
                  "collapse candidates that agree on all required roles");
    cmd->add_option("--jobs", opt.jobs, "worker threads, 0 means all cores")
        ->capture_default_str();
}

dpcheck::RunConfig to_config(const CliOptions& opt, bool detect) {
    dpcheck::RunConfig config;
    config.repository_dir = opt.repo;
    config.pattern_dir = opt.patterns;
    if (!opt.srs.empty())
        config.srs_path = opt.srs;
    if (!opt.external.empty())
        config.external_path = opt.external;
    if (!opt.truth.empty())
        config.truth_path = opt.truth;
    config.out_dir = opt.out;
    config.dedupe = opt.dedupe;
    config.detect = detect;
    config.jobs = opt.jobs;
    return config;
}

int check_rules(const CliOptions& opt) {
    if (!std::filesystem::is_directory(opt.patterns)) {
        std::cerr << "error: pattern directory does not exist: " << opt.patterns
                  << "\n";
        return 1;
    }
    try {
        auto definitions = dpcheck::load_pattern_dir(opt.patterns);
        if (definitions.empty()) {
            std::cerr << "error: no patterns loaded from " << opt.patterns
                      << "\n";
            return 3;
        }
        std::cout << "ok: " << definitions.size() << " patterns validated\n";
        for (const auto& def : definitions)
            std::cout << "  " << def.rule.pattern_name << ": "
                      << def.rule.members.size() << " roles, "
                      << def.rule.connections.size() << " rule connections, "
                      << def.catalog.relationship_characteristics.size()
                      << " relationship characteristics\n";
        return 0;
    } catch (const dpcheck::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dpcheck: design pattern conformance and violation checker"};
    app.require_subcommand(0, 1);

    CliOptions root_opt;
    add_common_options(&app, root_opt);

    CliOptions analyze_opt;
    auto* analyze =
        app.add_subcommand("analyze", "detect, score, and report (default)");
    add_common_options(analyze, analyze_opt);

    CliOptions external_opt;
    auto* score_external = app.add_subcommand(
        "score-external", "score imported instances without detection");
    add_common_options(score_external, external_opt);

    CliOptions compare_opt;
    auto* compare = app.add_subcommand(
        "compare", "precision/recall of candidate sources against --truth");
    add_common_options(compare, compare_opt);

    CliOptions check_opt;
    auto* check =
        app.add_subcommand("check-rules", "validate rule and catalog files");
    add_common_options(check, check_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*check)
        return check_rules(check_opt);
    if (*score_external) {
        if (external_opt.external.empty()) {
            std::cerr << "error: score-external requires --external <file>\n";
            return 1;
        }
        return dpcheck::run(to_config(external_opt, false));
    }
    if (*compare) {
        if (compare_opt.truth.empty()) {
            std::cerr << "error: compare requires --truth <file>\n";
            return 1;
        }
        return dpcheck::run(to_config(compare_opt, true));
    }
    if (*analyze)
        return dpcheck::run(to_config(analyze_opt, true));
    return dpcheck::run(to_config(root_opt, true));
}
