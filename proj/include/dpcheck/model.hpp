#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcheck {

// Class-level abstraction. Abstracted is a matcher-only value: it matches
// Abstract or Interface in rules and catalogs, but no parsed class ever
// carries it.
enum class AbstractionKind : std::uint8_t {
    Normal,
    Abstract,
    Interface,
    Abstracted,
};

// The six directed relations between classes, always read as "A <verb> B".
enum class ConnectionKind : std::uint8_t {
    Calls,
    Creates,
    Uses,
    Has,
    References,
    Inherits,
};

inline constexpr ConnectionKind kAllConnectionKinds[] = {
    ConnectionKind::Calls,      ConnectionKind::Creates,
    ConnectionKind::Uses,       ConnectionKind::Has,
    ConnectionKind::References, ConnectionKind::Inherits,
};

std::string to_string(AbstractionKind kind);
std::string to_string(ConnectionKind kind);

// Parse the lowercase keyword used in rule files ("calls", "inherits", ...).
// Throws std::invalid_argument on unknown keywords.
ConnectionKind connection_from_keyword(const std::string& word);
AbstractionKind abstraction_from_keyword(const std::string& word);

bool is_connection_keyword(const std::string& word);
bool is_abstraction_keyword(const std::string& word);

// True when a concrete class abstraction satisfies a rule/catalog abstraction.
inline bool abstraction_matches(AbstractionKind wanted, AbstractionKind actual) {
    if (wanted == AbstractionKind::Abstracted)
        return actual == AbstractionKind::Abstract ||
               actual == AbstractionKind::Interface;
    return wanted == actual;
}

struct Connection {
    ConnectionKind kind;
    std::string target;

    friend auto operator<=>(const Connection&, const Connection&) = default;
};

// One analyzed type: its abstraction and every outgoing connection whose
// target lives in the same project.
struct ClassFact {
    std::string name;
    AbstractionKind abstraction = AbstractionKind::Normal;
    std::set<Connection> connections;
    std::string source_file;
    int line = 1;

    bool has_connection(ConnectionKind kind, const std::string& target) const {
        return connections.count(Connection{kind, target}) > 0;
    }
};

struct ProjectFacts {
    std::string project_name;
    std::map<std::string, ClassFact> classes;  // keyed by class name
    std::size_t loc_count = 0;
    std::size_t file_count = 0;
    std::vector<std::string> warnings;
};

// Input-layer failure (bad file, duplicate class, malformed rule line).
class LoadError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace dpcheck
