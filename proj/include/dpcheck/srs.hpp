#pragma once

#include "dpcheck/scoring.hpp"

#include <string>
#include <vector>

namespace dpcheck {

// One extracted requirement relation. Subject and object are lowercased
// single tokens; a multiword object is indexed twice, once joined
// ("controlpanel") and once as its head word ("panel").
struct RelationTriple {
    std::string subject;
    std::string relation;
    std::string object;
    int sentence_index = 0;

    friend bool operator==(const RelationTriple&, const RelationTriple&) = default;
};

// Rule-based extraction: sentences split on terminators, clauses on commas
// and coordinating conjunctions, the first clause donates its subject to
// the rest, modals are skipped, and a preposition right after the verb
// joins it ("fly with" -> "fly_with"). Deterministic; empty text gives an
// empty list.
std::vector<RelationTriple> extract_triples(const std::string& srs_text);

// Approve or discard every violation. A pair violation is Approved iff its
// two class names co-occur as a triple's subject and object in either
// order; abstraction violations are always Approved. Approved status never
// downgrades on a rerun. Discarded rows flip to (1,1) and scores are
// recomputed; initial percentages stay untouched.
void verify_violations(std::vector<InstanceAssessment>& assessments,
                       const std::vector<RelationTriple>& triples);

}  // namespace dpcheck
