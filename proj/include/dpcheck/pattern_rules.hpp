#pragma once

#include "dpcheck/model.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dpcheck {

enum class ConformingFlag : std::uint8_t { Required, Optional };

std::string to_string(ConformingFlag flag);

// One pattern member on the detection side: a role letter, a display name,
// and the abstraction a bound class must carry.
struct RuleMember {
    char letter = 'A';
    std::string role_name;
    AbstractionKind abstraction = AbstractionKind::Normal;
};

struct RuleConnection {
    char from = 'A';
    ConnectionKind kind = ConnectionKind::Calls;
    char to = 'B';

    friend auto operator<=>(const RuleConnection&, const RuleConnection&) = default;
};

// Detection-side description of one pattern: role letters are unique and
// contiguous from A; every connection endpoint names a declared role.
struct PatternRule {
    std::string pattern_name;
    std::vector<RuleMember> members;
    std::vector<RuleConnection> connections;

    const RuleMember* member_for(char letter) const;
    const RuleMember* member_named(const std::string& role_name) const;
};

struct AbstractionCharacteristic {
    std::string role_name;
    AbstractionKind kind = AbstractionKind::Normal;
    ConformingFlag conforming = ConformingFlag::Required;
};

struct RelationshipCharacteristic {
    std::string relation_label;  // e.g. "Inheritance", "Aggregation"
    std::string from_role;
    std::string to_role;
    ConnectionKind kind = ConnectionKind::Calls;
    ConformingFlag conforming = ConformingFlag::Required;
};

// Scoring-side description: the required/optional rows a bound member is
// compared against. Rows carry no weights; every characteristic scores the
// same.
struct CharacteristicsCatalog {
    std::string pattern_name;
    std::vector<AbstractionCharacteristic> abstraction_characteristics;
    std::vector<RelationshipCharacteristic> relationship_characteristics;

    const AbstractionCharacteristic* abstraction_for(const std::string& role) const;
    std::vector<const RelationshipCharacteristic*>
    relationships_from(const std::string& role) const;
};

struct PatternDefinition {
    PatternRule rule;
    CharacteristicsCatalog catalog;
};

// Load every *.rules file in dir. Throws LoadError (with file and line) on
// unknown keywords, undeclared roles, or duplicate pattern names.
std::vector<PatternRule> load_pattern_rules(const std::filesystem::path& dir);

// Load every *.chars file in dir and cross-validate against the rules:
// every catalog role must exist in the matching rule, every role needs at
// least one required characteristic and exactly one abstraction row, and
// every rule connection must appear as a required catalog row.
std::vector<CharacteristicsCatalog>
load_characteristics(const std::filesystem::path& dir,
                     const std::vector<PatternRule>& rules);

// Parse one rule / catalog file from text (file name used for errors only).
PatternRule parse_rule_text(const std::string& text, const std::string& file);
CharacteristicsCatalog parse_catalog_text(const std::string& text,
                                          const std::string& file);

void validate_catalog(const CharacteristicsCatalog& catalog,
                      const PatternRule& rule, const std::string& file);

// Canonical text form; load(serialize(x)) == x, and serialize(load(f)) equals
// f after whitespace normalization and comment stripping.
std::string serialize_rule(const PatternRule& rule);
std::string serialize_catalog(const CharacteristicsCatalog& catalog);

// The seven shipped pattern definitions: SimpleFactory, FactoryMethod,
// Adapter, Decorator, Observer, State, Strategy.
std::vector<PatternDefinition> builtin_catalogs();

// Convenience: load a pattern directory into paired definitions.
std::vector<PatternDefinition> load_pattern_dir(const std::filesystem::path& dir);

}  // namespace dpcheck
