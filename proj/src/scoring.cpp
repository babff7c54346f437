#include "dpcheck/scoring.hpp"

#include <stdexcept>

namespace dpcheck {

namespace {

std::string abstraction_label(AbstractionKind kind) {
    return "abstraction->" + to_string(kind);
}

std::string relationship_label(ConnectionKind kind, const std::string& target) {
    return to_string(kind) + "->" + target;
}

ViolationRecord missing_connection(const std::string& from, const std::string& to,
                                   ConnectionKind kind, std::size_t row) {
    ViolationRecord violation;
    violation.kind = ViolationKind::MissingRequiredConnection;
    violation.from_class = from;
    violation.to_class = to;
    violation.connection = kind;
    violation.expected = relationship_label(kind, to);
    violation.row_index = row;
    violation.recommendation = make_recommendation(violation);
    return violation;
}

ViolationRecord abstraction_mismatch(const std::string& from,
                                     AbstractionKind expected, std::size_t row) {
    ViolationRecord violation;
    violation.kind = ViolationKind::AbstractionMismatch;
    violation.from_class = from;
    violation.expected_abstraction = expected;
    violation.expected = abstraction_label(expected);
    violation.row_index = row;
    violation.recommendation = make_recommendation(violation);
    return violation;
}

// Scoring path for a bound class that the repository does not define:
// every applicable row keeps definition 1, implementation 0.
MemberAssessment assess_missing_member(
    const CharacteristicsCatalog& catalog, const std::string& role_name,
    const std::string& class_name,
    const std::map<std::string, std::string>& bound_targets) {
    MemberAssessment member;
    member.role_name = role_name;
    member.class_name = class_name;

    const AbstractionCharacteristic* abstraction = catalog.abstraction_for(role_name);
    if (abstraction) {
        member.matrix.push_back({1, 0, abstraction_label(abstraction->kind)});
        if (abstraction->conforming == ConformingFlag::Required)
            member.violations.push_back(abstraction_mismatch(
                class_name, abstraction->kind, member.matrix.size() - 1));
    }
    for (const auto* row : catalog.relationships_from(role_name)) {
        auto target = bound_targets.find(row->to_role);
        if (target == bound_targets.end())
            continue;
        member.matrix.push_back(
            {1, 0, relationship_label(row->kind, target->second)});
        if (row->conforming == ConformingFlag::Required)
            member.violations.push_back(missing_connection(
                class_name, target->second, row->kind, member.matrix.size() - 1));
    }
    member.score_pct = matrix_score(member.matrix);
    member.initial_score_pct = member.score_pct;
    return member;
}

}  // namespace

std::string to_string(ViolationKind kind) {
    return kind == ViolationKind::MissingRequiredConnection
               ? "MissingRequiredConnection"
               : "AbstractionMismatch";
}

std::string to_string(VerificationStatus status) {
    switch (status) {
    case VerificationStatus::Pending: return "Pending";
    case VerificationStatus::Approved: return "Approved";
    case VerificationStatus::Discarded: return "Discarded";
    }
    return "Pending";
}

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument(
            "hamming distance requires equal-length vectors (" +
            std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    int distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            ++distance;
    return distance;
}

double matrix_score(const ScoreMatrix& matrix) {
    if (matrix.empty())
        return 100.0;
    std::vector<int> definition, implementation;
    definition.reserve(matrix.size());
    implementation.reserve(matrix.size());
    for (const auto& row : matrix) {
        definition.push_back(row.definition_bit);
        implementation.push_back(row.implementation_bit);
    }
    const int distance = hamming(definition, implementation);
    return (1.0 - static_cast<double>(distance) /
                      static_cast<double>(matrix.size())) *
           100.0;
}

MemberAssessment
check_conformance(const CharacteristicsCatalog& catalog,
                  const std::string& role_name, const ClassFact& member,
                  const std::map<std::string, std::string>& bound_targets) {
    MemberAssessment out;
    out.role_name = role_name;
    out.class_name = member.name;

    const AbstractionCharacteristic* abstraction = catalog.abstraction_for(role_name);
    if (abstraction) {
        if (abstraction_matches(abstraction->kind, member.abstraction)) {
            out.matrix.push_back({1, 1, abstraction_label(abstraction->kind)});
        } else {
            out.matrix.push_back({0, 1, abstraction_label(abstraction->kind)});
            out.violations.push_back(abstraction_mismatch(
                member.name, abstraction->kind, out.matrix.size() - 1));
        }
    }

    for (const auto* row : catalog.relationships_from(role_name)) {
        auto target = bound_targets.find(row->to_role);
        if (target == bound_targets.end())
            continue;
        const std::string& target_class = target->second;
        if (member.has_connection(row->kind, target_class)) {
            out.matrix.push_back(
                {1, 1, relationship_label(row->kind, target_class)});
        } else if (row->conforming == ConformingFlag::Required) {
            out.matrix.push_back(
                {1, 0, relationship_label(row->kind, target_class)});
            out.violations.push_back(missing_connection(
                member.name, target_class, row->kind, out.matrix.size() - 1));
        }
        // Absent optional characteristics leave no row at all.
    }

    out.score_pct = matrix_score(out.matrix);
    out.initial_score_pct = out.score_pct;
    return out;
}

InstanceAssessment assess_instance(const CandidateInstance& candidate,
                                   const PatternDefinition& definition,
                                   const ProjectFacts& facts) {
    InstanceAssessment instance;
    instance.candidate = candidate;

    const auto bindings = candidate.bindings();
    std::map<std::string, std::string> bound_targets;
    for (const auto& [letter, class_name] : bindings) {
        if (const RuleMember* role = definition.rule.member_for(letter))
            bound_targets[role->role_name] = class_name;
    }

    for (const auto& [letter, class_name] : bindings) {
        const RuleMember* role = definition.rule.member_for(letter);
        if (!role) {
            instance.warnings.push_back(
                std::string("role ") + letter + " is not part of pattern " +
                definition.rule.pattern_name + "; member " + class_name +
                " not scored");
            continue;
        }
        auto fact = facts.classes.find(class_name);
        MemberAssessment member;
        if (fact == facts.classes.end()) {
            member = assess_missing_member(definition.catalog, role->role_name,
                                           class_name, bound_targets);
            instance.warnings.push_back("class " + class_name +
                                        " not found in project " +
                                        facts.project_name +
                                        "; scored as fully missing");
        } else {
            member = check_conformance(definition.catalog, role->role_name,
                                       fact->second, bound_targets);
        }
        member.letter = letter;
        instance.members.push_back(std::move(member));
    }

    double sum = 0.0;
    for (const auto& member : instance.members)
        sum += member.score_pct;
    instance.total_pct =
        instance.members.empty() ? 0.0 : sum / instance.members.size();
    instance.initial_total_pct = instance.total_pct;
    return instance;
}

std::string make_recommendation(const ViolationRecord& violation) {
    const std::string& from = violation.from_class;
    const std::string& to = violation.to_class;
    if (violation.kind == ViolationKind::AbstractionMismatch)
        return "Class( " + from + " ) should be declared as " +
               to_string(violation.expected_abstraction);
    switch (violation.connection) {
    case ConnectionKind::Calls:
        return "Class( " + from + " ) should calls (invoke function) of class " + to;
    case ConnectionKind::Creates:
        return "Class( " + from + " ) should creates new object of class : " + to;
    case ConnectionKind::Uses:
        return "Class( " + from + " ) should uses class : " + to;
    case ConnectionKind::Has:
        return "Class( " + from + " ) should has an instance of class : " + to;
    case ConnectionKind::References:
        return "Class( " + from + " ) should references (accept as parameter) class : " + to;
    case ConnectionKind::Inherits:
        return "Class( " + from + " ) should inherits (extend or implement) class : " + to;
    }
    return "Class( " + from + " ) should connect to class : " + to;
}

void recompute_scores(InstanceAssessment& instance) {
    double sum = 0.0;
    for (auto& member : instance.members) {
        member.score_pct = matrix_score(member.matrix);
        sum += member.score_pct;
    }
    instance.total_pct =
        instance.members.empty() ? 0.0 : sum / instance.members.size();
}

}  // namespace dpcheck
