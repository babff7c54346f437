#include "dpcheck/srs.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace dpcheck {

namespace {

const std::unordered_set<std::string> kDeterminers = {
    "the",  "a",     "an",    "all",  "this", "that",  "these", "those",
    "its",  "their", "his",   "her",  "my",   "our",   "your",  "some",
    "any",  "each",  "every", "both", "few",  "many",  "much",  "most",
    "other", "another", "such", "only", "no",
};

const std::unordered_set<std::string> kModals = {
    "should", "shall", "must",  "can",  "could",
    "may",    "might", "will",  "would",
};

const std::unordered_set<std::string> kPrepositions = {
    "with", "to",   "of",   "on",    "in",    "at",      "for",  "from",
    "by",   "into", "onto", "upon",  "about", "over",    "under", "through",
};

const std::unordered_set<std::string> kConjunctions = {"and", "or", "but"};

std::string lowercase(const std::string& word) {
    std::string out = word;
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

bool is_determiner(const std::string& word) {
    return kDeterminers.count(lowercase(word)) > 0;
}

// A sentence as word tokens plus clause breaks at commas and conjunctions.
std::vector<std::vector<std::string>> split_clauses(const std::string& sentence) {
    std::vector<std::vector<std::string>> clauses;
    std::vector<std::string> current;
    std::string word;
    auto flush_word = [&] {
        if (word.empty())
            return;
        if (kConjunctions.count(lowercase(word))) {
            if (!current.empty())
                clauses.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(word);
        }
        word.clear();
    };
    for (char c : sentence) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            word += c;
        } else {
            flush_word();
            if (c == ',' && !current.empty()) {
                clauses.push_back(std::move(current));
                current.clear();
            }
        }
    }
    flush_word();
    if (!current.empty())
        clauses.push_back(std::move(current));
    return clauses;
}

void emit_clause_triples(const std::vector<std::string>& clause,
                         bool first_clause, std::string& subject,
                         int sentence_index,
                         std::vector<RelationTriple>& out) {
    std::size_t i = 0;
    if (first_clause) {
        while (i < clause.size() && is_determiner(clause[i]))
            ++i;
        if (i >= clause.size())
            return;
        subject = lowercase(clause[i]);
        ++i;
    }
    if (subject.empty())
        return;
    while (i < clause.size() && kModals.count(lowercase(clause[i])))
        ++i;
    if (i >= clause.size())
        return;
    std::string relation = lowercase(clause[i]);
    ++i;
    if (i < clause.size() && kPrepositions.count(lowercase(clause[i]))) {
        relation += "_" + lowercase(clause[i]);
        ++i;
    }
    std::vector<std::string> object_words;
    for (; i < clause.size(); ++i) {
        std::string low = lowercase(clause[i]);
        if (kDeterminers.count(low) || kModals.count(low) ||
            kPrepositions.count(low))
            continue;
        object_words.push_back(low);
    }
    if (object_words.empty())
        return;
    std::string joined;
    for (const auto& w : object_words)
        joined += w;
    out.push_back({subject, relation, joined, sentence_index});
    const std::string& head = object_words.back();
    if (head != joined)
        out.push_back({subject, relation, head, sentence_index});
}

}  // namespace

std::vector<RelationTriple> extract_triples(const std::string& srs_text) {
    std::vector<RelationTriple> triples;
    std::vector<std::string> sentences;
    std::string current;
    for (char c : srs_text) {
        if (c == '.' || c == '!' || c == '?' || c == ';') {
            sentences.push_back(current);
            current.clear();
        } else {
            current += c == '\n' || c == '\r' || c == '\t' ? ' ' : c;
        }
    }
    sentences.push_back(current);

    for (std::size_t s = 0; s < sentences.size(); ++s) {
        auto clauses = split_clauses(sentences[s]);
        std::string subject;
        for (std::size_t c = 0; c < clauses.size(); ++c)
            emit_clause_triples(clauses[c], c == 0, subject,
                                static_cast<int>(s), triples);
    }
    return triples;
}

void verify_violations(std::vector<InstanceAssessment>& assessments,
                       const std::vector<RelationTriple>& triples) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& triple : triples) {
        std::pair<std::string, std::string> key{triple.subject, triple.object};
        if (key.second < key.first)
            std::swap(key.first, key.second);
        pairs.insert(std::move(key));
    }

    for (auto& instance : assessments) {
        for (auto& member : instance.members) {
            for (auto& violation : member.violations) {
                if (violation.kind == ViolationKind::AbstractionMismatch) {
                    violation.status = VerificationStatus::Approved;
                    continue;
                }
                std::pair<std::string, std::string> key{
                    lowercase(violation.from_class),
                    lowercase(violation.to_class)};
                if (key.second < key.first)
                    std::swap(key.first, key.second);
                bool found = pairs.count(key) > 0;
                // Approval is sticky: rerunning with more triples may only
                // promote Discarded violations.
                if (violation.status != VerificationStatus::Approved)
                    violation.status = found ? VerificationStatus::Approved
                                             : VerificationStatus::Discarded;
                MatrixRow& row = member.matrix.at(violation.row_index);
                row.implementation_bit =
                    violation.status == VerificationStatus::Discarded ? 1 : 0;
            }
        }
        recompute_scores(instance);
    }
}

}  // namespace dpcheck
