#include "dpcheck/detection.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dpcheck {

namespace {

bool binding_less(const CandidateInstance& a, const CandidateInstance& b) {
    const std::size_t n = std::min(a.members.size(), b.members.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.members[i].class_name != b.members[i].class_name)
            return a.members[i].class_name < b.members[i].class_name;
    }
    return a.members.size() < b.members.size();
}

void number_instances(std::vector<CandidateInstance>& instances) {
    int id = 1;
    for (auto& instance : instances)
        instance.instance_id = id++;
}

// Depth-first role assignment. Classes are tried in name order, so results
// come out already sorted by binding tuple.
struct RoleSearch {
    const PatternRule& rule;
    const std::vector<const ClassFact*>& classes;
    std::vector<int> binding;
    std::vector<bool> used;
    std::vector<CandidateInstance>& out;

    RoleSearch(const PatternRule& rule_,
               const std::vector<const ClassFact*>& classes_,
               std::vector<CandidateInstance>& out_)
        : rule(rule_), classes(classes_),
          binding(rule_.members.size(), -1), used(classes_.size(), false),
          out(out_) {}

    // Connections become checkable the moment their later endpoint binds.
    bool connections_hold(std::size_t role) const {
        for (const auto& conn : rule.connections) {
            const std::size_t from = static_cast<std::size_t>(conn.from - 'A');
            const std::size_t to = static_cast<std::size_t>(conn.to - 'A');
            if (std::max(from, to) != role)
                continue;
            const ClassFact* source = classes[binding[from]];
            const ClassFact* target = classes[binding[to]];
            if (!source->has_connection(conn.kind, target->name))
                return false;
        }
        return true;
    }

    bool admissible(std::size_t role, std::size_t cls) {
        if (used[cls])
            return false;
        if (!abstraction_matches(rule.members[role].abstraction,
                                 classes[cls]->abstraction))
            return false;
        binding[role] = static_cast<int>(cls);
        bool ok = connections_hold(role);
        if (!ok)
            binding[role] = -1;
        return ok;
    }

    void emit() {
        CandidateInstance instance;
        instance.pattern_name = rule.pattern_name;
        for (std::size_t role = 0; role < rule.members.size(); ++role)
            instance.members.push_back({rule.members[role].letter,
                                        classes[binding[role]]->name,
                                        rule.members[role].role_name});
        out.push_back(std::move(instance));
    }

    void assign_from(std::size_t role) {
        if (role == rule.members.size()) {
            emit();
            return;
        }
        for (std::size_t cls = 0; cls < classes.size(); ++cls) {
            if (!admissible(role, cls))
                continue;
            used[cls] = true;
            assign_from(role + 1);
            used[cls] = false;
            binding[role] = -1;
        }
    }
};

std::vector<const ClassFact*> sorted_classes(const ProjectFacts& project) {
    std::vector<const ClassFact*> classes;
    classes.reserve(project.classes.size());
    for (const auto& [name, fact] : project.classes)
        classes.push_back(&fact);
    return classes;
}

void finalize(std::vector<CandidateInstance>& instances,
              const ProjectFacts& project) {
    for (auto& instance : instances)
        instance.project_name = project.project_name;
    std::sort(instances.begin(), instances.end(), binding_less);
    number_instances(instances);
}

}  // namespace

std::string to_string(CandidateSource source) {
    return source == CandidateSource::Detected ? "detected" : "external";
}

std::map<char, std::string> CandidateInstance::bindings() const {
    std::map<char, std::string> map;
    for (const auto& member : members)
        map.emplace(member.letter, member.class_name);
    return map;
}

const CandidateMember* CandidateInstance::member_for(char letter) const {
    for (const auto& member : members)
        if (member.letter == letter)
            return &member;
    return nullptr;
}

std::vector<CandidateInstance>
detect_pattern_serial(const PatternRule& rule, const ProjectFacts& project) {
    auto classes = sorted_classes(project);
    std::vector<CandidateInstance> out;
    RoleSearch search(rule, classes, out);
    search.assign_from(0);
    finalize(out, project);
    return out;
}

std::vector<CandidateInstance> detect_pattern(const PatternRule& rule,
                                              const ProjectFacts& project,
                                              int jobs) {
    auto classes = sorted_classes(project);
    const int n = static_cast<int>(classes.size());
    std::vector<std::vector<CandidateInstance>> per_first(classes.size());
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int first = 0; first < n; ++first) {
        RoleSearch search(rule, classes, per_first[first]);
        if (search.admissible(0, static_cast<std::size_t>(first))) {
            search.used[first] = true;
            search.assign_from(1);
        }
    }
    std::vector<CandidateInstance> out;
    for (auto& chunk : per_first)
        for (auto& instance : chunk)
            out.push_back(std::move(instance));
    finalize(out, project);
    return out;
}

std::vector<CandidateInstance>
dedupe_candidates(const std::vector<CandidateInstance>& candidates,
                  const CharacteristicsCatalog& catalog,
                  const PatternRule& rule) {
    std::vector<CandidateInstance> kept;
    std::set<std::string> seen;
    for (const auto& candidate : candidates) {
        std::string key;
        for (const auto& member : candidate.members) {
            const RuleMember* role = rule.member_for(member.letter);
            const AbstractionCharacteristic* row =
                role ? catalog.abstraction_for(role->role_name) : nullptr;
            if (row && row->conforming == ConformingFlag::Optional)
                continue;
            key += member.letter;
            key += member.class_name;
            key += '\n';
        }
        if (seen.insert(key).second)
            kept.push_back(candidate);
    }
    number_instances(kept);
    return kept;
}

ExternalParseResult
parse_external_candidates(const std::string& text, const std::string& file,
                          const std::vector<PatternRule>& rules) {
    ExternalParseResult result;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    CandidateInstance current;
    bool open = false;
    int block_start = 0;

    auto fail = [&](int at, const std::string& msg) {
        throw LoadError(file + ":" + std::to_string(at) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::vector<std::string> tokens;
        std::string word;
        while (words >> word)
            tokens.push_back(word);
        if (tokens.empty())
            continue;
        if (tokens.size() == 1 && tokens[0] == "End") {
            if (!open)
                fail(line_no, "End without a preceding instance block");
            if (current.members.empty())
                fail(line_no, "empty instance block");
            result.candidates.push_back(std::move(current));
            current = CandidateInstance{};
            open = false;
            continue;
        }
        if (tokens.size() < 4)
            fail(line_no, "expected: <Pattern> <Class> <Letter> <RoleName>");
        const std::string& pattern = tokens[0];
        const std::string& class_name = tokens[1];
        const std::string& letter_word = tokens[2];
        if (letter_word.size() != 1 || letter_word[0] < 'A' || letter_word[0] > 'Z')
            fail(line_no, "role letter must be a single letter A-Z: " + letter_word);
        bool known_pattern = false;
        for (const auto& rule : rules)
            if (rule.pattern_name == pattern)
                known_pattern = true;
        if (!known_pattern)
            fail(line_no, "unknown pattern: " + pattern);
        if (!open) {
            current.pattern_name = pattern;
            current.source = CandidateSource::External;
            open = true;
            block_start = line_no;
        } else if (current.pattern_name != pattern) {
            fail(line_no, "pattern changed inside a block (" +
                              current.pattern_name + " vs " + pattern + ")");
        }
        std::string role_name = tokens[3];
        for (std::size_t i = 4; i < tokens.size(); ++i)
            role_name += " " + tokens[i];
        char letter = letter_word[0];
        if (const CandidateMember* existing = current.member_for(letter)) {
            if (existing->class_name == class_name)
                fail(line_no, std::string("duplicate member line for role ") +
                                  letter + " class " + class_name);
            result.warnings.push_back(
                file + ":" + std::to_string(line_no) + ": role " +
                std::string(1, letter) + " already bound to " +
                existing->class_name + "; keeping the first binding");
        }
        current.members.push_back({letter, class_name, role_name});
    }
    if (open)
        fail(block_start, "instance block not terminated by End");
    return result;
}

std::string
serialize_external_candidates(const std::vector<CandidateInstance>& candidates) {
    std::ostringstream out;
    for (const auto& candidate : candidates) {
        for (const auto& member : candidate.members)
            out << candidate.pattern_name << " " << member.class_name << " "
                << member.letter << " " << member.role_name << "\n";
        out << "End\n";
    }
    return out.str();
}

}  // namespace dpcheck
