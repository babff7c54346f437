#include "doctest.h"

#include "dpcheck/pattern_rules.hpp"
#include "dpcheck/scoring.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

using namespace dpcheck;

namespace {

const PatternDefinition& strategy_def() {
    static std::vector<PatternDefinition> defs = builtin_catalogs();
    for (const auto& def : defs)
        if (def.rule.pattern_name == "Strategy")
            return def;
    throw std::runtime_error("no Strategy definition");
}

ClassFact make_class(const std::string& name, AbstractionKind kind) {
    ClassFact fact;
    fact.name = name;
    fact.abstraction = kind;
    return fact;
}

}  // namespace

TEST_CASE("hamming distance matches a positionwise xor oracle") {
    CHECK(hamming({1, 1, 0}, {1, 0, 0}) == 1);
    CHECK(hamming({}, {}) == 0);
    CHECK(hamming({1}, {0}) == 1);
    CHECK_THROWS_AS(hamming({1, 0}, {1}), std::invalid_argument);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(1, 32);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int round = 0; round < 300; ++round) {
        int n = len(rng);
        std::vector<int> a(n), b(n);
        int expected = 0;
        for (int i = 0; i < n; ++i) {
            a[i] = bit(rng);
            b[i] = bit(rng);
            expected += a[i] ^ b[i];
        }
        CHECK(hamming(a, b) == expected);
    }
}

TEST_CASE("matrix score follows 100 * (1 - distance/rows)") {
    CHECK(matrix_score({}) == doctest::Approx(100.0));
    ScoreMatrix five = {{1, 1, ""}, {1, 0, ""}, {1, 1, ""}, {1, 1, ""}, {1, 1, ""}};
    CHECK(matrix_score(five) == doctest::Approx(80.0));
    ScoreMatrix three = {{1, 1, ""}, {1, 1, ""}, {1, 0, ""}};
    CHECK(matrix_score(three) == doctest::Approx(66.6667).epsilon(0.001));
    ScoreMatrix mismatch = {{0, 1, ""}, {1, 1, ""}};
    CHECK(matrix_score(mismatch) == doctest::Approx(50.0));
}

TEST_CASE("conformance rows follow the catalog in file order") {
    const auto& def = strategy_def();
    ClassFact duck = make_class("Duck", AbstractionKind::Normal);
    duck.connections.insert({ConnectionKind::Has, "QuackBehavior"});
    duck.connections.insert({ConnectionKind::References, "QuackBehavior"});
    duck.connections.insert({ConnectionKind::Uses, "QuackBehavior"});
    // calls is absent on purpose.

    std::map<std::string, std::string> bound = {{"Strategy", "QuackBehavior"},
                                                {"Context", "Duck"}};
    MemberAssessment member = check_conformance(def.catalog, "Context", duck, bound);

    REQUIRE(member.matrix.size() == 5);
    CHECK(member.matrix[0].label == "abstraction->Normal");
    CHECK(member.matrix[0].definition_bit == 1);
    CHECK(member.matrix[0].implementation_bit == 1);
    CHECK(member.matrix[1].label == "calls->QuackBehavior");
    CHECK(member.matrix[1].definition_bit == 1);
    CHECK(member.matrix[1].implementation_bit == 0);
    CHECK(member.matrix[2].label == "has->QuackBehavior");
    CHECK(member.matrix[3].label == "references->QuackBehavior");
    CHECK(member.matrix[4].label == "uses->QuackBehavior");
    CHECK(member.score_pct == doctest::Approx(80.0));

    REQUIRE(member.violations.size() == 1);
    const ViolationRecord& violation = member.violations[0];
    CHECK(violation.kind == ViolationKind::MissingRequiredConnection);
    CHECK(violation.from_class == "Duck");
    CHECK(violation.to_class == "QuackBehavior");
    CHECK(violation.expected == "calls->QuackBehavior");
    CHECK(violation.row_index == 1);
    CHECK(violation.status == VerificationStatus::Pending);
    CHECK(violation.recommendation ==
          "Class( Duck ) should calls (invoke function) of class QuackBehavior");
}

TEST_CASE("absent optional characteristics leave no row") {
    const auto& def = strategy_def();
    ClassFact duck = make_class("Duck", AbstractionKind::Normal);
    duck.connections.insert({ConnectionKind::Has, "QuackBehavior"});
    // no calls, no references, no uses

    std::map<std::string, std::string> bound = {{"Strategy", "QuackBehavior"},
                                                {"Context", "Duck"}};
    MemberAssessment member = check_conformance(def.catalog, "Context", duck, bound);
    REQUIRE(member.matrix.size() == 3);
    CHECK(member.matrix[2].label == "has->QuackBehavior");
    CHECK(member.score_pct == doctest::Approx(200.0 / 3.0).epsilon(0.001));
    CHECK(member.violations.size() == 1);
}

TEST_CASE("abstraction mismatch scores [0,1] and raises a violation") {
    const auto& def = strategy_def();
    // ConcreteContext's abstraction row is optional, yet a mismatch is
    // still a violation: a class has exactly one declared kind.
    ClassFact context = make_class("Ctx", AbstractionKind::Interface);
    context.connections.insert({ConnectionKind::Inherits, "Base"});
    context.connections.insert({ConnectionKind::Creates, "Impl"});

    std::map<std::string, std::string> bound = {{"ConcreteContext", "Ctx"},
                                                {"ConcreteStrategy", "Impl"},
                                                {"Context", "Base"}};
    MemberAssessment member =
        check_conformance(def.catalog, "ConcreteContext", context, bound);
    REQUIRE(member.matrix.size() == 3);
    CHECK(member.matrix[0].definition_bit == 0);
    CHECK(member.matrix[0].implementation_bit == 1);
    REQUIRE(member.violations.size() == 1);
    CHECK(member.violations[0].kind == ViolationKind::AbstractionMismatch);
    CHECK(member.violations[0].expected_abstraction == AbstractionKind::Normal);
    CHECK(member.violations[0].recommendation ==
          "Class( Ctx ) should be declared as Normal");
}

TEST_CASE("rows whose to-role is unbound are skipped") {
    const auto& def = strategy_def();
    ClassFact duck = make_class("Duck", AbstractionKind::Normal);
    std::map<std::string, std::string> bound = {{"Context", "Duck"}};
    // Strategy role unbound: only the abstraction row remains.
    MemberAssessment member = check_conformance(def.catalog, "Context", duck, bound);
    REQUIRE(member.matrix.size() == 1);
    CHECK(member.matrix[0].label == "abstraction->Normal");
    CHECK(member.score_pct == doctest::Approx(100.0));
}

TEST_CASE("assessing an instance averages member scores") {
    const auto& def = strategy_def();
    ProjectFacts project;
    project.project_name = "mem";
    auto add = [&](ClassFact fact) { project.classes.emplace(fact.name, fact); };

    ClassFact impl = make_class("Impl", AbstractionKind::Normal);
    impl.connections.insert({ConnectionKind::Inherits, "Api"});
    add(impl);
    add(make_class("Api", AbstractionKind::Interface));
    ClassFact child = make_class("Child", AbstractionKind::Normal);
    child.connections.insert({ConnectionKind::Inherits, "Holder"});
    // does not create Impl -> one violation, 66.7
    add(child);
    ClassFact holder = make_class("Holder", AbstractionKind::Normal);
    holder.connections.insert({ConnectionKind::Has, "Api"});
    holder.connections.insert({ConnectionKind::Calls, "Api"});
    add(holder);

    CandidateInstance cand;
    cand.pattern_name = "Strategy";
    cand.project_name = "mem";
    cand.instance_id = 1;
    cand.members = {{'A', "Impl", "ConcreteStrategy"},
                    {'B', "Api", "Strategy"},
                    {'C', "Child", "ConcreteContext"},
                    {'D', "Holder", "Context"}};

    InstanceAssessment instance = assess_instance(cand, def, project);
    REQUIRE(instance.members.size() == 4);
    CHECK(instance.members[0].score_pct == doctest::Approx(100.0));
    CHECK(instance.members[1].score_pct == doctest::Approx(100.0));
    CHECK(instance.members[2].score_pct == doctest::Approx(200.0 / 3.0).epsilon(0.001));
    CHECK(instance.members[3].score_pct == doctest::Approx(100.0));
    CHECK(instance.total_pct == doctest::Approx((300.0 + 200.0 / 3.0) / 4.0).epsilon(0.001));
    CHECK(instance.initial_total_pct == doctest::Approx(instance.total_pct));
    CHECK(instance.warnings.empty());
}

TEST_CASE("a bound class missing from the project scores fully missing") {
    const auto& def = strategy_def();
    ProjectFacts project;
    project.project_name = "mem";

    CandidateInstance cand;
    cand.pattern_name = "Strategy";
    cand.members = {{'A', "GhostImpl", "ConcreteStrategy"},
                    {'B', "GhostApi", "Strategy"}};

    InstanceAssessment instance = assess_instance(cand, def, project);
    REQUIRE(instance.members.size() == 2);
    const MemberAssessment& impl = instance.members[0];
    // abstraction + inherits rows, both [1,0]; only required rows raise
    // violations.
    REQUIRE(impl.matrix.size() == 2);
    CHECK(impl.matrix[0].implementation_bit == 0);
    CHECK(impl.matrix[1].label == "inherits->GhostApi");
    CHECK(impl.score_pct == doctest::Approx(0.0));
    CHECK(impl.violations.size() == 2);
    CHECK(instance.warnings.size() == 2);
    CHECK(instance.warnings[0].find("not found in project") != std::string::npos);
}

TEST_CASE("letters outside the rule are reported, not scored") {
    const auto& def = strategy_def();
    ProjectFacts project;
    project.project_name = "mem";
    project.classes.emplace("Impl", make_class("Impl", AbstractionKind::Normal));

    CandidateInstance cand;
    cand.pattern_name = "Strategy";
    cand.members = {{'A', "Impl", "ConcreteStrategy"}, {'Z', "Impl", "Mystery"}};
    InstanceAssessment instance = assess_instance(cand, def, project);
    CHECK(instance.members.size() == 1);
    REQUIRE(instance.warnings.size() == 1);
    CHECK(instance.warnings[0].find("role Z") != std::string::npos);
}

TEST_CASE("recommendations cover every connection kind") {
    ViolationRecord v;
    v.kind = ViolationKind::MissingRequiredConnection;
    v.from_class = "A";
    v.to_class = "B";

    v.connection = ConnectionKind::Creates;
    CHECK(make_recommendation(v) == "Class( A ) should creates new object of class : B");
    v.connection = ConnectionKind::Uses;
    CHECK(make_recommendation(v) == "Class( A ) should uses class : B");
    v.connection = ConnectionKind::Has;
    CHECK(make_recommendation(v) == "Class( A ) should has an instance of class : B");
    v.connection = ConnectionKind::References;
    CHECK(make_recommendation(v) ==
          "Class( A ) should references (accept as parameter) class : B");
    v.connection = ConnectionKind::Inherits;
    CHECK(make_recommendation(v) ==
          "Class( A ) should inherits (extend or implement) class : B");
}

TEST_CASE("recompute keeps initial percentages") {
    const auto& def = strategy_def();
    ProjectFacts project;
    project.project_name = "mem";
    CandidateInstance cand;
    cand.pattern_name = "Strategy";
    cand.members = {{'A', "Ghost", "ConcreteStrategy"}, {'B', "Api", "Strategy"}};
    InstanceAssessment instance = assess_instance(cand, def, project);
    double before_total = instance.total_pct;

    // Simulate a verification pass discarding all rows of the first member.
    for (auto& row : instance.members[0].matrix)
        row.implementation_bit = 1;
    recompute_scores(instance);
    CHECK(instance.members[0].score_pct == doctest::Approx(100.0));
    CHECK(instance.members[0].initial_score_pct == doctest::Approx(0.0));
    CHECK(instance.initial_total_pct == doctest::Approx(before_total));
    CHECK(instance.total_pct > before_total);
}

TEST_CASE("score monotonicity under added rows") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int round = 0; round < 200; ++round) {
        ScoreMatrix matrix;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int d = bit(rng), m = bit(rng);
            if (d == 0 && m == 0)
                d = 1;  // (0,0) rows are never stored
            matrix.push_back({d, m, ""});
        }
        double base = matrix_score(matrix);

        ScoreMatrix satisfied = matrix;
        satisfied.push_back({1, 1, ""});
        CHECK(matrix_score(satisfied) >= base - 1e-9);

        ScoreMatrix violated = matrix;
        violated.push_back({1, 0, ""});
        CHECK(matrix_score(violated) <= base + 1e-9);
    }
}
