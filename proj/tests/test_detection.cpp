#include "doctest.h"

#include "dpcheck/detection.hpp"
#include "dpcheck/pattern_rules.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

using namespace dpcheck;

namespace {

ProjectFacts project_with(
    const std::vector<std::pair<std::string, AbstractionKind>>& classes,
    const std::vector<std::tuple<std::string, ConnectionKind, std::string>>& edges) {
    ProjectFacts project;
    project.project_name = "mem";
    for (const auto& [name, kind] : classes) {
        ClassFact fact;
        fact.name = name;
        fact.abstraction = kind;
        project.classes.emplace(name, std::move(fact));
    }
    for (const auto& [from, kind, to] : edges)
        project.classes.at(from).connections.insert({kind, to});
    return project;
}

// Oracle: try every ordered injective assignment of classes to roles.
std::vector<std::vector<std::string>> brute_force(const PatternRule& rule,
                                                  const ProjectFacts& project) {
    std::vector<std::string> names;
    for (const auto& [name, fact] : project.classes)
        names.push_back(name);

    std::vector<std::vector<std::string>> found;
    std::vector<std::string> pick(rule.members.size());
    std::vector<bool> used(names.size(), false);

    auto satisfied = [&]() {
        for (std::size_t r = 0; r < rule.members.size(); ++r) {
            const ClassFact& fact = project.classes.at(pick[r]);
            if (!abstraction_matches(rule.members[r].abstraction, fact.abstraction))
                return false;
        }
        for (const auto& conn : rule.connections) {
            std::size_t from = static_cast<std::size_t>(conn.from - 'A');
            std::size_t to = static_cast<std::size_t>(conn.to - 'A');
            if (!project.classes.at(pick[from]).has_connection(conn.kind, pick[to]))
                return false;
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t role) {
        if (role == pick.size()) {
            if (satisfied())
                found.push_back(pick);
            return;
        }
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (used[c])
                continue;
            used[c] = true;
            pick[role] = names[c];
            rec(role + 1);
            used[c] = false;
        }
    };
    rec(0);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<std::vector<std::string>>
bindings_of(const std::vector<CandidateInstance>& candidates) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cand : candidates) {
        std::vector<std::string> row;
        for (const auto& member : cand.members)
            row.push_back(member.class_name);
        out.push_back(row);
    }
    return out;
}

ProjectFacts random_project(std::mt19937& rng, int max_classes) {
    std::uniform_int_distribution<int> count(3, max_classes);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = count(rng);

    std::vector<std::pair<std::string, AbstractionKind>> classes;
    for (int i = 0; i < n; ++i) {
        double roll = coin(rng);
        AbstractionKind kind = roll < 0.25   ? AbstractionKind::Interface
                               : roll < 0.40 ? AbstractionKind::Abstract
                                             : AbstractionKind::Normal;
        classes.push_back({"C" + std::to_string(i), kind});
    }
    std::vector<std::tuple<std::string, ConnectionKind, std::string>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b)
                continue;
            for (auto kind : kAllConnectionKinds)
                if (coin(rng) < 0.25)
                    edges.push_back({classes[a].first, kind, classes[b].first});
        }
    return project_with(classes, edges);
}

const PatternRule& strategy_rule() {
    static std::vector<PatternDefinition> defs = builtin_catalogs();
    for (const auto& def : defs)
        if (def.rule.pattern_name == "Strategy")
            return def.rule;
    throw std::runtime_error("no Strategy rule");
}

std::string fixture_text(const std::string& rel) {
    std::ifstream in(std::string(DPCHECK_FIXTURES_DIR) + "/" + rel,
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("detection finds exactly the satisfying role assignments") {
    auto project = project_with(
        {{"Impl", AbstractionKind::Normal},
         {"Api", AbstractionKind::Interface},
         {"Child", AbstractionKind::Normal},
         {"Holder", AbstractionKind::Normal},
         {"Noise", AbstractionKind::Normal}},
        {{"Impl", ConnectionKind::Inherits, "Api"},
         {"Child", ConnectionKind::Inherits, "Holder"},
         {"Holder", ConnectionKind::Has, "Api"},
         {"Noise", ConnectionKind::Calls, "Api"}});

    auto found = detect_pattern_serial(strategy_rule(), project);
    REQUIRE(found.size() == 1);
    const CandidateInstance& cand = found[0];
    CHECK(cand.pattern_name == "Strategy");
    CHECK(cand.project_name == "mem");
    CHECK(cand.instance_id == 1);
    CHECK(cand.source == CandidateSource::Detected);
    REQUIRE(cand.members.size() == 4);
    CHECK(cand.members[0].letter == 'A');
    CHECK(cand.members[0].class_name == "Impl");
    CHECK(cand.members[0].role_name == "ConcreteStrategy");
    CHECK(cand.members[1].class_name == "Api");
    CHECK(cand.members[2].class_name == "Child");
    CHECK(cand.members[3].class_name == "Holder");
    CHECK(cand.bindings().at('D') == "Holder");
}

TEST_CASE("bindings are injective") {
    // Loop has the holder shape against itself; no single class may fill
    // two roles, so nothing can match.
    auto project = project_with(
        {{"Loop", AbstractionKind::Normal}, {"Api", AbstractionKind::Interface}},
        {{"Loop", ConnectionKind::Inherits, "Api"},
         {"Loop", ConnectionKind::Inherits, "Loop"},
         {"Loop", ConnectionKind::Has, "Api"}});
    CHECK(detect_pattern_serial(strategy_rule(), project).empty());
}

TEST_CASE("results are sorted by bound class names and numbered from 1") {
    auto project = project_with(
        {{"Zed", AbstractionKind::Normal},
         {"Ann", AbstractionKind::Normal},
         {"Api", AbstractionKind::Interface},
         {"Child", AbstractionKind::Normal},
         {"Holder", AbstractionKind::Normal}},
        {{"Zed", ConnectionKind::Inherits, "Api"},
         {"Ann", ConnectionKind::Inherits, "Api"},
         {"Child", ConnectionKind::Inherits, "Holder"},
         {"Holder", ConnectionKind::Has, "Api"}});

    auto found = detect_pattern_serial(strategy_rule(), project);
    REQUIRE(found.size() == 2);
    CHECK(found[0].members[0].class_name == "Ann");
    CHECK(found[1].members[0].class_name == "Zed");
    CHECK(found[0].instance_id == 1);
    CHECK(found[1].instance_id == 2);
}

TEST_CASE("detection agrees with the brute-force oracle") {
    std::mt19937 rng(2024);
    auto definitions = builtin_catalogs();
    for (int round = 0; round < 60; ++round) {
        auto project = random_project(rng, 7);
        for (const auto& def : definitions) {
            auto expected = brute_force(def.rule, project);
            auto got = bindings_of(detect_pattern_serial(def.rule, project));
            // Detected order is already sorted by binding.
            CHECK(got == expected);
        }
    }
}

TEST_CASE("parallel detection equals the serial reference") {
    std::mt19937 rng(77);
    auto definitions = builtin_catalogs();
    for (int round = 0; round < 25; ++round) {
        auto project = random_project(rng, 8);
        for (const auto& def : definitions) {
            auto serial = detect_pattern_serial(def.rule, project);
            auto parallel = detect_pattern(def.rule, project, 0);
            CHECK(serial == parallel);
        }
    }
}

TEST_CASE("dedupe collapses candidates equal on required-abstraction roles") {
    // Strategy marks ConcreteContext optional, so two candidates that only
    // differ there fold into one.
    auto project = project_with(
        {{"Impl", AbstractionKind::Normal},
         {"Api", AbstractionKind::Interface},
         {"Kid1", AbstractionKind::Normal},
         {"Kid2", AbstractionKind::Normal},
         {"Holder", AbstractionKind::Normal}},
        {{"Impl", ConnectionKind::Inherits, "Api"},
         {"Kid1", ConnectionKind::Inherits, "Holder"},
         {"Kid2", ConnectionKind::Inherits, "Holder"},
         {"Holder", ConnectionKind::Has, "Api"}});

    std::vector<PatternDefinition> defs = builtin_catalogs();
    const PatternDefinition* strategy = nullptr;
    for (const auto& def : defs)
        if (def.rule.pattern_name == "Strategy")
            strategy = &def;
    REQUIRE(strategy != nullptr);

    auto found = detect_pattern_serial(strategy->rule, project);
    REQUIRE(found.size() == 2);
    auto folded = dedupe_candidates(found, strategy->catalog, strategy->rule);
    REQUIRE(folded.size() == 1);
    CHECK(folded[0].members[2].class_name == "Kid1");
    CHECK(folded[0].instance_id == 1);
}

TEST_CASE("external candidate blocks parse with roles and warnings") {
    auto rules = builtin_catalogs();
    std::vector<PatternRule> bare;
    for (const auto& def : rules)
        bare.push_back(def.rule);

    auto result = parse_external_candidates(fixture_text("external/other_tools.txt"),
                                            "other_tools.txt", bare);
    REQUIRE(result.candidates.size() == 2);

    const CandidateInstance& deco = result.candidates[0];
    CHECK(deco.pattern_name == "Decorator");
    CHECK(deco.source == CandidateSource::External);
    REQUIRE(deco.members.size() == 4);
    CHECK(deco.members[0].class_name == "Espresso");
    CHECK(deco.members[0].role_name == "Concrete Component");
    CHECK(deco.bindings().at('D') == "CondimentDecorator");

    const CandidateInstance& factory = result.candidates[1];
    CHECK(factory.pattern_name == "FactoryMethod");
    REQUIRE(factory.members.size() == 4);
    // The role text of a malformed line is kept verbatim.
    CHECK(factory.members[1].class_name == "Pizza");
    CHECK(factory.members[1].role_name == "Adapter B Product");
    // Letter C appears twice; the first binding wins.
    CHECK(factory.bindings().at('C') == "Pizza");
    CHECK(factory.bindings().count('B') == 0);
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("keeping the first binding") != std::string::npos);
}

TEST_CASE("external parse errors name the offending line") {
    std::vector<PatternRule> bare;
    for (const auto& def : builtin_catalogs())
        bare.push_back(def.rule);

    CHECK_THROWS_WITH_AS(
        parse_external_candidates("NoSuch Foo A Role\nEnd\n", "f.txt", bare),
        doctest::Contains("f.txt:1"), LoadError);
    CHECK_THROWS_WITH_AS(
        parse_external_candidates("Strategy Foo A Role\nState Bar B Role\nEnd\n",
                                  "f.txt", bare),
        doctest::Contains("f.txt:2"), LoadError);
    CHECK_THROWS_WITH_AS(
        parse_external_candidates("Strategy Foo A Role\nStrategy Foo A Role\nEnd\n",
                                  "f.txt", bare),
        doctest::Contains("duplicate"), LoadError);
    CHECK_THROWS_WITH_AS(
        parse_external_candidates("Strategy Foo A Role\n", "f.txt", bare),
        doctest::Contains("End"), LoadError);
    CHECK_THROWS_WITH_AS(parse_external_candidates("End\n", "f.txt", bare),
                         doctest::Contains("End without"), LoadError);
    CHECK_THROWS_WITH_AS(
        parse_external_candidates("Strategy Foo\nEnd\n", "f.txt", bare),
        doctest::Contains("f.txt:1"), LoadError);
}

TEST_CASE("external candidates round-trip structurally") {
    std::vector<PatternRule> bare;
    for (const auto& def : builtin_catalogs())
        bare.push_back(def.rule);

    std::string text = fixture_text("external/other_tools.txt");
    auto first = parse_external_candidates(text, "a.txt", bare);
    std::string serialized = serialize_external_candidates(first.candidates);
    auto second = parse_external_candidates(serialized, "b.txt", bare);

    REQUIRE(first.candidates.size() == second.candidates.size());
    for (std::size_t i = 0; i < first.candidates.size(); ++i) {
        CHECK(first.candidates[i].pattern_name == second.candidates[i].pattern_name);
        CHECK(first.candidates[i].members == second.candidates[i].members);
    }
}
