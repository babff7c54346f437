#pragma once

#include "dpcheck/detection.hpp"
#include "dpcheck/model.hpp"
#include "dpcheck/pattern_rules.hpp"

#include <map>
#include <string>
#include <vector>

namespace dpcheck {

enum class ViolationKind : std::uint8_t {
    MissingRequiredConnection,
    AbstractionMismatch,
};

enum class VerificationStatus : std::uint8_t { Pending, Approved, Discarded };

std::string to_string(ViolationKind kind);
std::string to_string(VerificationStatus status);

// One comparison row: was the characteristic in the definition, was it in
// the implementation. (0,0) rows are never stored.
struct MatrixRow {
    int definition_bit = 0;
    int implementation_bit = 0;
    std::string label;  // e.g. "calls->QuackBehavior", "abstraction->Interface"
};

using ScoreMatrix = std::vector<MatrixRow>;

struct ViolationRecord {
    ViolationKind kind = ViolationKind::MissingRequiredConnection;
    std::string from_class;
    std::string to_class;  // empty for AbstractionMismatch
    ConnectionKind connection = ConnectionKind::Calls;
    AbstractionKind expected_abstraction = AbstractionKind::Normal;
    std::string expected;  // matches the matrix row label
    std::string recommendation;
    VerificationStatus status = VerificationStatus::Pending;
    std::size_t row_index = 0;  // row of the member matrix this covers
};

struct MemberAssessment {
    char letter = 'A';
    std::string role_name;
    std::string class_name;
    ScoreMatrix matrix;
    double score_pct = 0.0;
    double initial_score_pct = 0.0;  // before any verification rescore
    std::vector<ViolationRecord> violations;
};

struct InstanceAssessment {
    CandidateInstance candidate;
    std::vector<MemberAssessment> members;
    double total_pct = 0.0;
    double initial_total_pct = 0.0;
    std::vector<std::string> warnings;
};

// Positions at which two equal-length bit vectors differ. Throws
// std::invalid_argument when lengths differ.
int hamming(const std::vector<int>& a, const std::vector<int>& b);

// Score of one matrix: (1 - hamming/N) * 100, full precision.
double matrix_score(const ScoreMatrix& matrix);

// Compare one bound member against its catalog rows. bound_targets maps
// role names to bound class names; relationship rows whose to-role is
// unbound are skipped, absent Optional rows are omitted, an abstraction
// mismatch scores (0,1) and always raises a violation.
MemberAssessment
check_conformance(const CharacteristicsCatalog& catalog,
                  const std::string& role_name, const ClassFact& member,
                  const std::map<std::string, std::string>& bound_targets);

// Score every bound role of a candidate. Classes missing from the project
// (possible for external candidates) score implementation 0 on every row
// and add a warning.
InstanceAssessment assess_instance(const CandidateInstance& candidate,
                                   const PatternDefinition& definition,
                                   const ProjectFacts& facts);

std::string make_recommendation(const ViolationRecord& violation);

// Refresh member scores and the total from the matrices, leaving the
// initial percentages untouched. Used after verification edits rows.
void recompute_scores(InstanceAssessment& instance);

}  // namespace dpcheck
