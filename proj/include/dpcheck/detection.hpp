#pragma once

#include "dpcheck/model.hpp"
#include "dpcheck/pattern_rules.hpp"

#include <map>
#include <string>
#include <vector>

namespace dpcheck {

enum class CandidateSource : std::uint8_t { Detected, External };

std::string to_string(CandidateSource source);

struct CandidateMember {
    char letter = 'A';
    std::string class_name;
    std::string role_name;

    friend bool operator==(const CandidateMember&, const CandidateMember&) = default;
};

// One pattern occurrence. Detected instances list members in role-letter
// order; external instances keep the member lines in file order, which may
// repeat a letter. Bindings resolve each letter to its first class.
struct CandidateInstance {
    std::string pattern_name;
    std::string project_name;
    int instance_id = 0;
    CandidateSource source = CandidateSource::Detected;
    std::vector<CandidateMember> members;

    std::map<char, std::string> bindings() const;
    const CandidateMember* member_for(char letter) const;

    friend bool operator==(const CandidateInstance&, const CandidateInstance&) = default;
};

// All injective role assignments satisfying the rule, sorted by the bound
// class names in role order, instance_id numbered from 1.
std::vector<CandidateInstance> detect_pattern_serial(const PatternRule& rule,
                                                     const ProjectFacts& project);

// Same result as detect_pattern_serial; the search fans out across the
// choices for the first role. jobs: 0 = all cores, 1 = serial.
std::vector<CandidateInstance> detect_pattern(const PatternRule& rule,
                                              const ProjectFacts& project,
                                              int jobs = 0);

// Collapses candidates that agree on every role whose abstraction
// characteristic is required; the first of each group survives and ids are
// renumbered.
std::vector<CandidateInstance>
dedupe_candidates(const std::vector<CandidateInstance>& candidates,
                  const CharacteristicsCatalog& catalog,
                  const PatternRule& rule);

struct ExternalParseResult {
    std::vector<CandidateInstance> candidates;
    std::vector<std::string> warnings;
};

// Parses instance blocks produced by other detection tools. Each line is
// `<Pattern> <Class> <Letter> <RoleName words...>`; a block ends with `End`.
// A repeated letter with a different class keeps the first binding and
// warns; unknown patterns, open blocks, and empty blocks are errors.
ExternalParseResult
parse_external_candidates(const std::string& text, const std::string& file,
                          const std::vector<PatternRule>& rules);

std::string
serialize_external_candidates(const std::vector<CandidateInstance>& candidates);

}  // namespace dpcheck
