#pragma once

#include "dpcheck/model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dpcheck {

struct SourceToken {
    std::string text;
    int line = 1;
};

// A type as written at a declaration site: base name (last segment when
// qualified), top-level generic argument names, and array depth.
struct TypeRef {
    std::string base;
    std::vector<std::string> type_args;
    int array_dims = 0;
};

struct ParsedParam {
    TypeRef type;
    std::string name;
};

struct ParsedField {
    TypeRef type;
    std::string name;
    int line = 1;
    std::vector<SourceToken> initializer;
};

struct ParsedMethod {
    TypeRef return_type;
    std::string name;
    bool is_constructor = false;
    std::vector<ParsedParam> params;
    std::vector<SourceToken> body;
    int line = 1;
};

// Syntax-only view of one top-level type; no cross-class resolution yet.
struct ParsedClass {
    std::string name;
    AbstractionKind abstraction = AbstractionKind::Normal;
    std::vector<std::string> supertypes;  // extends and implements, in order
    std::vector<ParsedField> fields;
    std::vector<ParsedMethod> methods;
    int line = 1;
};

struct ParsedFile {
    std::string file;
    std::vector<ParsedClass> classes;
    std::size_t loc = 0;  // non-blank source lines
    std::vector<std::string> warnings;
};

// Comments become spaces, string and char literals become blanks; newlines
// survive so token line numbers stay true to the original file.
std::string strip_comments_and_literals(const std::string& text);

std::vector<SourceToken> tokenize_java(const std::string& code);

// Parse one source file. Nested and anonymous types are skipped with a
// warning. Throws LoadError on syntax the subset cannot handle.
ParsedFile parse_java_source(const std::string& text, const std::string& file);

// Resolve one parsed class against the names defined in its project.
// Only connections whose target is a known class are recorded.
ClassFact extract_connections(const ParsedClass& parsed,
                              const std::set<std::string>& known_classes,
                              const std::string& source_file,
                              std::vector<std::string>& warnings);

// Merge parsed files into one project graph. Throws LoadError when two
// files define the same class name.
ProjectFacts build_project_facts(const std::string& project_name,
                                 const std::vector<ParsedFile>& files);

// Analyze a repository directory: every immediate subdirectory holding
// .java files becomes a project; loose .java files in the root form a
// project named after the root. Files that fail to parse are skipped with
// a warning. jobs: 0 = all cores, 1 = serial, n = n worker threads.
std::vector<ProjectFacts> parse_repository(const std::filesystem::path& root,
                                           int jobs = 0);

}  // namespace dpcheck
