#include "dpcheck/pattern_rules.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dpcheck {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string word;
    while (in >> word)
        words.push_back(word);
    return words;
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
    throw LoadError(file + ":" + std::to_string(line) + ": " + msg);
}

bool is_role_letter(const std::string& word) {
    return word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z';
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError("cannot read " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::filesystem::path>
sorted_files_with_extension(const std::filesystem::path& dir, const std::string& ext) {
    if (!std::filesystem::is_directory(dir))
        throw LoadError("pattern directory does not exist: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ext)
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace

std::string to_string(ConformingFlag flag) {
    return flag == ConformingFlag::Required ? "required" : "optional";
}

const RuleMember* PatternRule::member_for(char letter) const {
    for (const auto& m : members)
        if (m.letter == letter)
            return &m;
    return nullptr;
}

const RuleMember* PatternRule::member_named(const std::string& role_name) const {
    for (const auto& m : members)
        if (m.role_name == role_name)
            return &m;
    return nullptr;
}

const AbstractionCharacteristic*
CharacteristicsCatalog::abstraction_for(const std::string& role) const {
    for (const auto& row : abstraction_characteristics)
        if (row.role_name == role)
            return &row;
    return nullptr;
}

std::vector<const RelationshipCharacteristic*>
CharacteristicsCatalog::relationships_from(const std::string& role) const {
    std::vector<const RelationshipCharacteristic*> rows;
    for (const auto& row : relationship_characteristics)
        if (row.from_role == role)
            rows.push_back(&row);
    return rows;
}

PatternRule parse_rule_text(const std::string& text, const std::string& file) {
    PatternRule rule;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto words = split_words(line);
        if (words.empty() || words[0][0] == '#')
            continue;
        const std::string& verb = words[0];
        if (verb == "pattern") {
            if (!rule.pattern_name.empty())
                fail(file, line_no, "second pattern declaration in one file");
            if (words.size() != 2)
                fail(file, line_no, "expected: pattern <Name>");
            rule.pattern_name = words[1];
        } else if (verb == "member") {
            if (words.size() != 4)
                fail(file, line_no, "expected: member <Letter> <RoleName> <Abstraction>");
            if (!is_role_letter(words[1]))
                fail(file, line_no, "role letter must be a single letter A-Z: " + words[1]);
            if (!is_abstraction_keyword(words[3]))
                fail(file, line_no, "unknown abstraction keyword: " + words[3]);
            RuleMember member;
            member.letter = words[1][0];
            member.role_name = words[2];
            member.abstraction = abstraction_from_keyword(words[3]);
            if (rule.member_for(member.letter))
                fail(file, line_no, std::string("duplicate role letter ") + member.letter);
            if (rule.member_named(member.role_name))
                fail(file, line_no, "duplicate role name " + member.role_name);
            rule.members.push_back(member);
        } else if (verb == "connection") {
            if (words.size() != 4)
                fail(file, line_no, "expected: connection <Letter> <kind> <Letter>");
            if (!is_role_letter(words[1]) || !is_role_letter(words[3]))
                fail(file, line_no, "connection endpoints must be role letters");
            if (!is_connection_keyword(words[2]))
                fail(file, line_no, "unknown connection keyword: " + words[2]);
            RuleConnection conn;
            conn.from = words[1][0];
            conn.kind = connection_from_keyword(words[2]);
            conn.to = words[3][0];
            if (!rule.member_for(conn.from))
                fail(file, line_no, std::string("undeclared role ") + conn.from);
            if (!rule.member_for(conn.to))
                fail(file, line_no, std::string("undeclared role ") + conn.to);
            rule.connections.push_back(conn);
        } else {
            fail(file, line_no, "unknown directive: " + verb);
        }
    }
    if (rule.pattern_name.empty())
        throw LoadError(file + ": missing pattern declaration");
    if (rule.members.size() < 2)
        throw LoadError(file + ": a pattern needs at least 2 members");
    // Letters must be contiguous from A in declaration order.
    for (std::size_t i = 0; i < rule.members.size(); ++i) {
        char expected = static_cast<char>('A' + i);
        if (rule.members[i].letter != expected)
            throw LoadError(file + ": role letters must be contiguous from A (found " +
                            std::string(1, rule.members[i].letter) + ", expected " +
                            std::string(1, expected) + ")");
    }
    return rule;
}

CharacteristicsCatalog parse_catalog_text(const std::string& text,
                                          const std::string& file) {
    CharacteristicsCatalog catalog;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto words = split_words(line);
        if (words.empty() || words[0][0] == '#')
            continue;
        const std::string& verb = words[0];
        if (verb == "pattern") {
            if (!catalog.pattern_name.empty())
                fail(file, line_no, "second pattern declaration in one file");
            if (words.size() != 2)
                fail(file, line_no, "expected: pattern <Name>");
            catalog.pattern_name = words[1];
        } else if (verb == "abstraction") {
            if (words.size() != 4)
                fail(file, line_no, "expected: abstraction <RoleName> <Kind> <required|optional>");
            if (!is_abstraction_keyword(words[2]))
                fail(file, line_no, "unknown abstraction keyword: " + words[2]);
            if (words[3] != "required" && words[3] != "optional")
                fail(file, line_no, "conforming flag must be required or optional: " + words[3]);
            AbstractionCharacteristic row;
            row.role_name = words[1];
            row.kind = abstraction_from_keyword(words[2]);
            row.conforming = words[3] == "required" ? ConformingFlag::Required
                                                    : ConformingFlag::Optional;
            catalog.abstraction_characteristics.push_back(row);
        } else if (verb == "relationship") {
            if (words.size() != 6)
                fail(file, line_no,
                     "expected: relationship <Label> <FromRole> <ToRole> <kind> <required|optional>");
            if (!is_connection_keyword(words[4]))
                fail(file, line_no, "unknown connection keyword: " + words[4]);
            if (words[5] != "required" && words[5] != "optional")
                fail(file, line_no, "conforming flag must be required or optional: " + words[5]);
            RelationshipCharacteristic row;
            row.relation_label = words[1];
            row.from_role = words[2];
            row.to_role = words[3];
            row.kind = connection_from_keyword(words[4]);
            row.conforming = words[5] == "required" ? ConformingFlag::Required
                                                    : ConformingFlag::Optional;
            catalog.relationship_characteristics.push_back(row);
        } else {
            fail(file, line_no, "unknown directive: " + verb);
        }
    }
    if (catalog.pattern_name.empty())
        throw LoadError(file + ": missing pattern declaration");
    return catalog;
}

void validate_catalog(const CharacteristicsCatalog& catalog,
                      const PatternRule& rule, const std::string& file) {
    std::set<std::string> rule_roles;
    for (const auto& m : rule.members)
        rule_roles.insert(m.role_name);

    std::set<std::string> abstraction_roles;
    for (const auto& row : catalog.abstraction_characteristics) {
        if (!rule_roles.count(row.role_name))
            throw LoadError(file + ": catalog role " + row.role_name +
                            " does not exist in the " + rule.pattern_name + " rule");
        if (!abstraction_roles.insert(row.role_name).second)
            throw LoadError(file + ": duplicate abstraction row for role " + row.role_name);
    }
    for (const auto& row : catalog.relationship_characteristics) {
        if (!rule_roles.count(row.from_role))
            throw LoadError(file + ": catalog role " + row.from_role +
                            " does not exist in the " + rule.pattern_name + " rule");
        if (!rule_roles.count(row.to_role))
            throw LoadError(file + ": catalog role " + row.to_role +
                            " does not exist in the " + rule.pattern_name + " rule");
    }
    for (const auto& role : rule_roles) {
        if (!abstraction_roles.count(role))
            throw LoadError(file + ": role " + role + " has no abstraction row");
        bool has_required = false;
        const auto* abs = catalog.abstraction_for(role);
        if (abs && abs->conforming == ConformingFlag::Required)
            has_required = true;
        for (const auto* rel : catalog.relationships_from(role))
            if (rel->conforming == ConformingFlag::Required)
                has_required = true;
        if (!has_required)
            throw LoadError(file + ": role " + role +
                            " has no required characteristic");
    }
    // Detection only demands connections the catalog marks required.
    for (const auto& conn : rule.connections) {
        const auto* from = rule.member_for(conn.from);
        const auto* to = rule.member_for(conn.to);
        bool found = false;
        for (const auto& row : catalog.relationship_characteristics) {
            if (row.from_role == from->role_name && row.to_role == to->role_name &&
                row.kind == conn.kind && row.conforming == ConformingFlag::Required)
                found = true;
        }
        if (!found)
            throw LoadError(file + ": rule connection " + std::string(1, conn.from) +
                            " " + to_string(conn.kind) + " " + std::string(1, conn.to) +
                            " has no required catalog row");
    }
}

std::vector<PatternRule> load_pattern_rules(const std::filesystem::path& dir) {
    std::vector<PatternRule> rules;
    std::set<std::string> names;
    for (const auto& path : sorted_files_with_extension(dir, ".rules")) {
        PatternRule rule = parse_rule_text(read_file(path), path.string());
        if (!names.insert(rule.pattern_name).second)
            throw LoadError(path.string() + ": duplicate pattern name " +
                            rule.pattern_name);
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::vector<CharacteristicsCatalog>
load_characteristics(const std::filesystem::path& dir,
                     const std::vector<PatternRule>& rules) {
    std::vector<CharacteristicsCatalog> catalogs;
    std::set<std::string> names;
    for (const auto& path : sorted_files_with_extension(dir, ".chars")) {
        CharacteristicsCatalog catalog = parse_catalog_text(read_file(path), path.string());
        if (!names.insert(catalog.pattern_name).second)
            throw LoadError(path.string() + ": duplicate pattern name " +
                            catalog.pattern_name);
        const PatternRule* rule = nullptr;
        for (const auto& r : rules)
            if (r.pattern_name == catalog.pattern_name)
                rule = &r;
        if (!rule)
            throw LoadError(path.string() + ": no rule file for pattern " +
                            catalog.pattern_name);
        validate_catalog(catalog, *rule, path.string());
        catalogs.push_back(std::move(catalog));
    }
    return catalogs;
}

std::string serialize_rule(const PatternRule& rule) {
    std::ostringstream out;
    out << "pattern " << rule.pattern_name << "\n";
    for (const auto& m : rule.members)
        out << "member " << m.letter << " " << m.role_name << " "
            << to_string(m.abstraction) << "\n";
    for (const auto& c : rule.connections)
        out << "connection " << c.from << " " << to_string(c.kind) << " "
            << c.to << "\n";
    return out.str();
}

std::string serialize_catalog(const CharacteristicsCatalog& catalog) {
    std::ostringstream out;
    out << "pattern " << catalog.pattern_name << "\n";
    for (const auto& row : catalog.abstraction_characteristics)
        out << "abstraction " << row.role_name << " " << to_string(row.kind)
            << " " << to_string(row.conforming) << "\n";
    for (const auto& row : catalog.relationship_characteristics)
        out << "relationship " << row.relation_label << " " << row.from_role
            << " " << row.to_role << " " << to_string(row.kind) << " "
            << to_string(row.conforming) << "\n";
    return out.str();
}

std::vector<PatternDefinition> load_pattern_dir(const std::filesystem::path& dir) {
    auto rules = load_pattern_rules(dir);
    auto catalogs = load_characteristics(dir, rules);
    std::vector<PatternDefinition> defs;
    for (const auto& rule : rules) {
        const CharacteristicsCatalog* catalog = nullptr;
        for (const auto& c : catalogs)
            if (c.pattern_name == rule.pattern_name)
                catalog = &c;
        if (!catalog)
            throw LoadError(dir.string() + ": pattern " + rule.pattern_name +
                            " has a rule file but no characteristics file");
        defs.push_back(PatternDefinition{rule, *catalog});
    }
    return defs;
}

}  // namespace dpcheck
