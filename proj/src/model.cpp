#include "dpcheck/model.hpp"

namespace dpcheck {

std::string to_string(AbstractionKind kind) {
    switch (kind) {
    case AbstractionKind::Normal: return "Normal";
    case AbstractionKind::Abstract: return "Abstract";
    case AbstractionKind::Interface: return "Interface";
    case AbstractionKind::Abstracted: return "Abstracted";
    }
    return "Normal";
}

std::string to_string(ConnectionKind kind) {
    switch (kind) {
    case ConnectionKind::Calls: return "calls";
    case ConnectionKind::Creates: return "creates";
    case ConnectionKind::Uses: return "uses";
    case ConnectionKind::Has: return "has";
    case ConnectionKind::References: return "references";
    case ConnectionKind::Inherits: return "inherits";
    }
    return "calls";
}

ConnectionKind connection_from_keyword(const std::string& word) {
    if (word == "calls") return ConnectionKind::Calls;
    if (word == "creates") return ConnectionKind::Creates;
    if (word == "uses") return ConnectionKind::Uses;
    if (word == "has") return ConnectionKind::Has;
    if (word == "references") return ConnectionKind::References;
    if (word == "inherits") return ConnectionKind::Inherits;
    throw std::invalid_argument("unknown connection keyword: " + word);
}

AbstractionKind abstraction_from_keyword(const std::string& word) {
    if (word == "Normal") return AbstractionKind::Normal;
    if (word == "Abstract") return AbstractionKind::Abstract;
    if (word == "Interface") return AbstractionKind::Interface;
    if (word == "Abstracted") return AbstractionKind::Abstracted;
    throw std::invalid_argument("unknown abstraction keyword: " + word);
}

bool is_connection_keyword(const std::string& word) {
    return word == "calls" || word == "creates" || word == "uses" ||
           word == "has" || word == "references" || word == "inherits";
}

bool is_abstraction_keyword(const std::string& word) {
    return word == "Normal" || word == "Abstract" || word == "Interface" ||
           word == "Abstracted";
}

}  // namespace dpcheck
