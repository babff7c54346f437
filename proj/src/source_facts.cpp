#include "dpcheck/source_facts.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dpcheck {

namespace {

const std::unordered_set<std::string> kModifiers = {
    "public", "private",      "protected", "static",   "final",
    "abstract", "synchronized", "native",    "transient", "volatile",
    "strictfp", "default",      "sealed",
};

// Words that can never start a declared type or name a variable.
const std::unordered_set<std::string> kStatementKeywords = {
    "return", "if",    "else",  "while",  "do",      "switch", "case",
    "break",  "continue", "throw", "try",  "catch",   "finally", "new",
    "this",   "super", "instanceof", "assert", "null", "true",  "false",
};

bool is_ident(const std::string& text) {
    if (text.empty())
        return false;
    char c = text[0];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool can_start_type(const std::string& text) {
    return is_ident(text) && !kStatementKeywords.count(text) &&
           !kModifiers.count(text);
}

std::size_t count_nonblank_lines(const std::string& text) {
    std::size_t lines = 0;
    bool nonblank = false;
    for (char c : text) {
        if (c == '\n') {
            if (nonblank)
                ++lines;
            nonblank = false;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            nonblank = true;
        }
    }
    if (nonblank)
        ++lines;
    return lines;
}

struct FileParser {
    const std::vector<SourceToken>& toks;
    const std::string& file;
    ParsedFile& out;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = i < toks.size() ? toks[i].line
                                   : (toks.empty() ? 1 : toks.back().line);
        throw LoadError(file + ":" + std::to_string(line) + ": " + msg);
    }

    bool done() const { return i >= toks.size(); }
    const std::string& cur() const {
        static const std::string empty;
        return i < toks.size() ? toks[i].text : empty;
    }
    const std::string& peek(std::size_t k) const {
        static const std::string empty;
        return i + k < toks.size() ? toks[i + k].text : empty;
    }
    int cur_line() const { return i < toks.size() ? toks[i].line : 0; }

    void expect(const std::string& text) {
        if (cur() != text)
            fail("expected '" + text + "', found '" + cur() + "'");
        ++i;
    }

    std::string expect_ident() {
        if (!is_ident(cur()))
            fail("expected identifier, found '" + cur() + "'");
        return toks[i++].text;
    }

    // Current token is `open`; advance past its matching `close`.
    void skip_balanced(const std::string& open, const std::string& close) {
        expect(open);
        int depth = 1;
        while (depth > 0) {
            if (done())
                fail("unbalanced '" + open + "'");
            if (cur() == open)
                ++depth;
            else if (cur() == close)
                --depth;
            ++i;
        }
    }

    void skip_annotation() {
        expect("@");
        expect_ident();
        while (cur() == "." && is_ident(peek(1))) {
            i += 2;
        }
        if (cur() == "(")
            skip_balanced("(", ")");
    }

    // Collects modifiers and annotations; reports whether abstract was seen.
    bool skip_modifiers() {
        bool saw_abstract = false;
        while (!done()) {
            if (cur() == "@" && peek(1) != "interface") {
                skip_annotation();
            } else if (kModifiers.count(cur())) {
                if (cur() == "abstract")
                    saw_abstract = true;
                ++i;
            } else {
                break;
            }
        }
        return saw_abstract;
    }

    void skip_generic_args() { skip_balanced("<", ">"); }

    // Dotted name; qualified types collapse to their last segment.
    std::string parse_scoped_name() {
        std::string name = expect_ident();
        while (cur() == "." && is_ident(peek(1))) {
            ++i;
            name = toks[i++].text;
        }
        return name;
    }

    TypeRef parse_type() {
        TypeRef type;
        type.base = parse_scoped_name();
        if (cur() == "<") {
            ++i;
            int depth = 1;
            bool at_arg_start = true;
            while (depth > 0) {
                if (done())
                    fail("unbalanced '<' in type");
                const std::string& t = cur();
                if (t == "<") {
                    ++depth;
                    at_arg_start = false;
                } else if (t == ">") {
                    --depth;
                } else if (t == "," && depth == 1) {
                    at_arg_start = true;
                } else {
                    if (depth == 1 && at_arg_start && is_ident(t) &&
                        t != "extends" && t != "super" && t != "?")
                        type.type_args.push_back(t);
                    at_arg_start = false;
                }
                ++i;
            }
        }
        while (cur() == "[" && peek(1) == "]") {
            ++type.array_dims;
            i += 2;
        }
        return type;
    }

    // Capture tokens from the current '{' through its matching '}'; the
    // braces themselves are dropped.
    std::vector<SourceToken> capture_block() {
        expect("{");
        std::vector<SourceToken> body;
        int depth = 1;
        while (true) {
            if (done())
                fail("unbalanced '{'");
            if (cur() == "{")
                ++depth;
            else if (cur() == "}") {
                --depth;
                if (depth == 0) {
                    ++i;
                    return body;
                }
            }
            body.push_back(toks[i]);
            ++i;
        }
    }

    // Capture a field initializer up to the terminating ';' or a ',' that
    // starts the next declarator. Parens, brackets, and braces balance.
    std::vector<SourceToken> capture_initializer() {
        std::vector<SourceToken> init;
        int parens = 0, braces = 0, brackets = 0;
        while (!done()) {
            const std::string& t = cur();
            if (parens == 0 && braces == 0 && brackets == 0 &&
                (t == ";" || t == ","))
                return init;
            if (t == "(") ++parens;
            else if (t == ")") --parens;
            else if (t == "{") ++braces;
            else if (t == "}") --braces;
            else if (t == "[") ++brackets;
            else if (t == "]") --brackets;
            init.push_back(toks[i]);
            ++i;
        }
        fail("unterminated field initializer");
    }

    void skip_type_declaration(const std::string& what) {
        out.warnings.push_back(file + ":" + std::to_string(cur_line()) +
                               ": skipped " + what);
        // Move past the header (name, type parameters, supertypes) to the
        // body and drop it whole.
        while (!done() && cur() != "{") {
            if (cur() == "<")
                skip_generic_args();
            else
                ++i;
        }
        if (done())
            fail("missing body for skipped declaration");
        skip_balanced("{", "}");
    }

    void parse_params(ParsedMethod& method) {
        expect("(");
        while (cur() != ")") {
            if (done())
                fail("unbalanced parameter list");
            if (cur() == ",") {
                ++i;
                continue;
            }
            while (cur() == "@")
                skip_annotation();
            if (cur() == "final")
                ++i;
            ParsedParam param;
            param.type = parse_type();
            if (cur() == "." && peek(1) == "." && peek(2) == ".")
                i += 3;  // varargs
            param.name = expect_ident();
            while (cur() == "[" && peek(1) == "]")
                i += 2;
            method.params.push_back(std::move(param));
        }
        ++i;
    }

    void parse_class_body(ParsedClass& cls) {
        expect("{");
        while (true) {
            if (done())
                fail("unbalanced class body");
            if (cur() == "}") {
                ++i;
                return;
            }
            if (cur() == ";") {
                ++i;
                continue;
            }
            skip_modifiers();
            if (cur() == "{") {  // initializer block
                skip_balanced("{", "}");
                continue;
            }
            if (cur() == "class" || cur() == "interface" || cur() == "enum" ||
                (cur() == "@" && peek(1) == "interface")) {
                skip_type_declaration("nested type in class " + cls.name);
                continue;
            }
            if (cur() == "<")  // generic method type parameters
                skip_generic_args();

            int member_line = cur_line();
            if (!can_start_type(cur()))
                fail("expected member declaration, found '" + cur() + "'");
            TypeRef first = parse_type();

            if (cur() == "(") {
                // No separate name token: a constructor.
                ParsedMethod ctor;
                ctor.name = first.base;
                ctor.is_constructor = true;
                ctor.line = member_line;
                if (first.base != cls.name)
                    fail("method '" + first.base + "' has no return type");
                parse_params(ctor);
                finish_method(ctor);
                cls.methods.push_back(std::move(ctor));
                continue;
            }

            std::string name = expect_ident();
            if (cur() == "(") {
                ParsedMethod method;
                method.return_type = std::move(first);
                method.name = std::move(name);
                method.line = member_line;
                parse_params(method);
                finish_method(method);
                cls.methods.push_back(std::move(method));
                continue;
            }

            // One or more field declarators sharing a type.
            while (true) {
                ParsedField field;
                field.type = first;
                field.name = name;
                field.line = member_line;
                while (cur() == "[" && peek(1) == "]")
                    i += 2;
                if (cur() == "=") {
                    ++i;
                    field.initializer = capture_initializer();
                }
                cls.fields.push_back(std::move(field));
                if (cur() == ",") {
                    ++i;
                    name = expect_ident();
                    continue;
                }
                expect(";");
                break;
            }
        }
    }

    void finish_method(ParsedMethod& method) {
        if (cur() == "throws") {
            ++i;
            parse_scoped_name();
            while (cur() == ",") {
                ++i;
                parse_scoped_name();
            }
        }
        if (cur() == ";") {
            ++i;  // abstract or interface method
            return;
        }
        if (cur() == "{") {
            method.body = capture_block();
            return;
        }
        fail("expected method body or ';', found '" + cur() + "'");
    }

    void parse_compilation_unit() {
        while (!done()) {
            if (cur() == ";") {
                ++i;
                continue;
            }
            if (cur() == "package" || cur() == "import") {
                while (!done() && cur() != ";")
                    ++i;
                if (!done())
                    ++i;
                continue;
            }
            if (cur() == "@" && peek(1) != "interface") {
                skip_annotation();
                continue;
            }
            bool is_abstract = skip_modifiers();
            if (done())
                return;
            if (cur() == "enum" || (cur() == "@" && peek(1) == "interface")) {
                skip_type_declaration(cur() == "enum" ? "enum" : "annotation type");
                continue;
            }
            if (cur() != "class" && cur() != "interface")
                fail("expected type declaration, found '" + cur() + "'");

            ParsedClass cls;
            bool is_interface = cur() == "interface";
            ++i;
            cls.line = cur_line();
            cls.name = expect_ident();
            cls.abstraction = is_interface ? AbstractionKind::Interface
                              : is_abstract ? AbstractionKind::Abstract
                                            : AbstractionKind::Normal;
            if (cur() == "<")
                skip_generic_args();
            if (cur() == "extends") {
                ++i;
                cls.supertypes.push_back(parse_type().base);
                // Interfaces may extend a list.
                while (cur() == ",") {
                    ++i;
                    cls.supertypes.push_back(parse_type().base);
                }
            }
            if (cur() == "implements") {
                ++i;
                cls.supertypes.push_back(parse_type().base);
                while (cur() == ",") {
                    ++i;
                    cls.supertypes.push_back(parse_type().base);
                }
            }
            if (cur() == "permits") {
                ++i;
                parse_type();
                while (cur() == ",") {
                    ++i;
                    parse_type();
                }
            }
            parse_class_body(cls);
            out.classes.push_back(std::move(cls));
        }
    }
};

// Marks token ranges belonging to anonymous class bodies (`new T(...) {`)
// so the statement scanner does not attribute their internals to the
// enclosing class.
std::vector<bool> mask_anonymous_bodies(const std::vector<SourceToken>& body,
                                        const std::string& class_name,
                                        const std::string& file,
                                        std::vector<std::string>& warnings) {
    std::vector<bool> masked(body.size(), false);
    for (std::size_t i = 0; i + 2 < body.size(); ++i) {
        if (body[i].text != "new" || !is_ident(body[i + 1].text))
            continue;
        std::size_t j = i + 2;
        if (j < body.size() && body[j].text == "<") {
            int depth = 1;
            ++j;
            while (j < body.size() && depth > 0) {
                if (body[j].text == "<") ++depth;
                else if (body[j].text == ">") --depth;
                ++j;
            }
        }
        if (j >= body.size() || body[j].text != "(")
            continue;
        int parens = 1;
        ++j;
        while (j < body.size() && parens > 0) {
            if (body[j].text == "(") ++parens;
            else if (body[j].text == ")") --parens;
            ++j;
        }
        if (j >= body.size() || body[j].text != "{")
            continue;
        std::size_t open = j;
        int braces = 1;
        ++j;
        while (j < body.size() && braces > 0) {
            if (body[j].text == "{") ++braces;
            else if (body[j].text == "}") --braces;
            ++j;
        }
        warnings.push_back(file + ":" + std::to_string(body[open].line) +
                           ": skipped anonymous class in " + class_name);
        for (std::size_t k = open; k < j; ++k)
            masked[k] = true;
    }
    return masked;
}

struct BodyScanner {
    const std::vector<SourceToken>& body;
    const std::vector<bool>& masked;
    const std::set<std::string>& known;
    std::map<std::string, std::string> receiver;  // var name -> known class
    ClassFact& fact;

    const std::string& text(std::size_t k) const {
        static const std::string empty;
        return k < body.size() && !masked[k] ? body[k].text : empty;
    }

    void add(ConnectionKind kind, const std::string& target) {
        fact.connections.insert(Connection{kind, target});
    }

    // Matches a type at position k without consuming; on success fills base
    // and returns the index just past the type, else returns k.
    std::size_t match_type(std::size_t k, std::string& base) const {
        if (!can_start_type(text(k)))
            return k;
        base = text(k);
        std::size_t j = k + 1;
        while (text(j) == "." && is_ident(text(j + 1))) {
            base = text(j + 1);
            j += 2;
        }
        if (text(j) == "<") {
            int depth = 1;
            ++j;
            while (j < body.size() && depth > 0) {
                if (text(j) == "<") ++depth;
                else if (text(j) == ">") --depth;
                else if (!is_ident(text(j)) && text(j) != "," &&
                         text(j) != "?" && text(j) != "." &&
                         text(j) != "[" && text(j) != "]")
                    return k;  // expression, not a type
                ++j;
            }
            if (depth > 0)
                return k;
        }
        while (text(j) == "[" && text(j + 1) == "]")
            j += 2;
        return j;
    }

    void scan() {
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (masked[i])
                continue;
            const std::string& t = text(i);

            if (t == "new" && is_ident(text(i + 1))) {
                std::string base;
                std::size_t j = match_type(i + 1, base);
                if (j > i + 1 && text(j) == "(" && known.count(base))
                    add(ConnectionKind::Creates, base);
                continue;
            }

            // Enhanced for introduces a typed loop variable.
            if (t == "for" && text(i + 1) == "(") {
                std::string base;
                std::size_t j = match_type(i + 2, base);
                if (j > i + 2 && is_ident(text(j)) && text(j + 1) == ":" &&
                    known.count(base))
                    receiver[text(j)] = base;
                continue;
            }

            // Local declaration: Type name = ... / Type name ;
            if (can_start_type(t) && (i == 0 || text(i - 1) != "new") &&
                (i == 0 || text(i - 1) != ".")) {
                std::string base;
                std::size_t j = match_type(i, base);
                if (j > i && is_ident(text(j)) &&
                    !kStatementKeywords.count(text(j)) &&
                    (text(j + 1) == "=" || text(j + 1) == ";" ||
                     text(j + 1) == ",") &&
                    known.count(base)) {
                    receiver[text(j)] = base;
                    // fall through: `i` may also start a call chain
                }
            }

            // Receiver call: var.method( or KnownClass.method(
            if (is_ident(t) && text(i + 1) == "." && is_ident(text(i + 2)) &&
                text(i + 3) == "(") {
                auto it = receiver.find(t);
                if (it != receiver.end())
                    add(ConnectionKind::Calls, it->second);
                else if (known.count(t))
                    add(ConnectionKind::Calls, t);
            }
        }
    }
};

void collect_type_targets(const TypeRef& type, const std::set<std::string>& known,
                          std::vector<std::string>& out) {
    if (known.count(type.base))
        out.push_back(type.base);
    for (const auto& arg : type.type_args)
        if (known.count(arg))
            out.push_back(arg);
}

std::vector<std::filesystem::path>
sorted_java_files(const std::filesystem::path& dir, bool recursive) {
    std::vector<std::filesystem::path> files;
    if (recursive) {
        for (const auto& entry : std::filesystem::recursive_directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".java")
                files.push_back(entry.path());
    } else {
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".java")
                files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError("cannot read " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

std::string strip_comments_and_literals(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    enum class State { Code, LineComment, BlockComment, Str, Chr };
    State state = State::Code;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        char next = i + 1 < text.size() ? text[i + 1] : '\0';
        switch (state) {
        case State::Code:
            if (c == '/' && next == '/') {
                state = State::LineComment;
                out += "  ";
                ++i;
            } else if (c == '/' && next == '*') {
                state = State::BlockComment;
                out += "  ";
                ++i;
            } else if (c == '"') {
                state = State::Str;
                out += ' ';
            } else if (c == '\'') {
                state = State::Chr;
                out += ' ';
            } else {
                out += c;
            }
            break;
        case State::LineComment:
            if (c == '\n') {
                state = State::Code;
                out += '\n';
            } else {
                out += ' ';
            }
            break;
        case State::BlockComment:
            if (c == '*' && next == '/') {
                state = State::Code;
                out += "  ";
                ++i;
            } else {
                out += c == '\n' ? '\n' : ' ';
            }
            break;
        case State::Str:
        case State::Chr:
            if (c == '\\' && next != '\0') {
                out += "  ";
                ++i;
            } else if ((state == State::Str && c == '"') ||
                       (state == State::Chr && c == '\'')) {
                state = State::Code;
                out += ' ';
            } else {
                out += c == '\n' ? '\n' : ' ';
            }
            break;
        }
    }
    return out;
}

std::vector<SourceToken> tokenize_java(const std::string& code) {
    std::vector<SourceToken> tokens;
    int line = 1;
    std::size_t i = 0;
    while (i < code.size()) {
        char c = code[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            std::size_t j = i;
            while (j < code.size() &&
                   (std::isalnum(static_cast<unsigned char>(code[j])) ||
                    code[j] == '_' || code[j] == '$'))
                ++j;
            tokens.push_back({code.substr(i, j - i), line});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < code.size() &&
                   (std::isalnum(static_cast<unsigned char>(code[j])) ||
                    code[j] == '_' ||
                    (code[j] == '.' && j + 1 < code.size() &&
                     std::isdigit(static_cast<unsigned char>(code[j + 1])))))
                ++j;
            tokens.push_back({code.substr(i, j - i), line});
            i = j;
            continue;
        }
        tokens.push_back({std::string(1, c), line});
        ++i;
    }
    return tokens;
}

ParsedFile parse_java_source(const std::string& text, const std::string& file) {
    ParsedFile out;
    out.file = file;
    out.loc = count_nonblank_lines(text);
    auto tokens = tokenize_java(strip_comments_and_literals(text));
    FileParser parser{tokens, file, out};
    parser.parse_compilation_unit();
    return out;
}

ClassFact extract_connections(const ParsedClass& parsed,
                              const std::set<std::string>& known_classes,
                              const std::string& source_file,
                              std::vector<std::string>& warnings) {
    ClassFact fact;
    fact.name = parsed.name;
    fact.abstraction = parsed.abstraction;
    fact.source_file = source_file;
    fact.line = parsed.line;

    for (const auto& super : parsed.supertypes)
        if (known_classes.count(super))
            fact.connections.insert({ConnectionKind::Inherits, super});

    std::map<std::string, std::string> field_types;
    for (const auto& field : parsed.fields) {
        std::vector<std::string> targets;
        collect_type_targets(field.type, known_classes, targets);
        for (const auto& target : targets)
            fact.connections.insert({ConnectionKind::Has, target});
        if (field.type.array_dims == 0 && known_classes.count(field.type.base))
            field_types[field.name] = field.type.base;
    }

    for (const auto& field : parsed.fields) {
        if (field.initializer.empty())
            continue;
        auto masked = mask_anonymous_bodies(field.initializer, parsed.name,
                                            source_file, warnings);
        BodyScanner scanner{field.initializer, masked, known_classes,
                            field_types, fact};
        scanner.scan();
    }

    for (const auto& method : parsed.methods) {
        if (!method.is_constructor) {
            std::vector<std::string> targets;
            collect_type_targets(method.return_type, known_classes, targets);
            for (const auto& target : targets)
                fact.connections.insert({ConnectionKind::Uses, target});
        }
        auto receiver = field_types;
        for (const auto& param : method.params) {
            std::vector<std::string> targets;
            collect_type_targets(param.type, known_classes, targets);
            for (const auto& target : targets)
                fact.connections.insert({ConnectionKind::References, target});
            if (param.type.array_dims == 0 &&
                known_classes.count(param.type.base))
                receiver[param.name] = param.type.base;
        }
        if (method.body.empty())
            continue;
        auto masked = mask_anonymous_bodies(method.body, parsed.name,
                                            source_file, warnings);
        BodyScanner scanner{method.body, masked, known_classes, receiver, fact};
        scanner.scan();
    }
    return fact;
}

ProjectFacts build_project_facts(const std::string& project_name,
                                 const std::vector<ParsedFile>& files) {
    ProjectFacts facts;
    facts.project_name = project_name;

    std::map<std::string, std::string> defined_in;
    for (const auto& file : files) {
        facts.loc_count += file.loc;
        ++facts.file_count;
        for (const auto& warning : file.warnings)
            facts.warnings.push_back(warning);
        for (const auto& cls : file.classes) {
            auto [it, inserted] = defined_in.emplace(cls.name, file.file);
            if (!inserted)
                throw LoadError("class " + cls.name + " defined in both " +
                                it->second + " and " + file.file);
        }
    }

    std::set<std::string> known;
    for (const auto& [name, where] : defined_in)
        known.insert(name);

    for (const auto& file : files) {
        for (const auto& cls : file.classes) {
            ClassFact fact = extract_connections(cls, known, file.file,
                                                 facts.warnings);
            std::string key = fact.name;
            facts.classes.emplace(std::move(key), std::move(fact));
        }
    }
    return facts;
}

std::vector<ProjectFacts> parse_repository(const std::filesystem::path& root,
                                           int jobs) {
    if (!std::filesystem::is_directory(root))
        throw LoadError("repository directory does not exist: " + root.string());

    struct FileJob {
        std::size_t project = 0;
        std::filesystem::path path;
    };
    std::vector<std::string> project_names;
    std::vector<FileJob> file_jobs;

    auto loose = sorted_java_files(root, false);
    if (!loose.empty()) {
        project_names.push_back(root.filename().string());
        for (auto& path : loose)
            file_jobs.push_back({0, std::move(path)});
    }

    std::vector<std::filesystem::path> subdirs;
    for (const auto& entry : std::filesystem::directory_iterator(root))
        if (entry.is_directory())
            subdirs.push_back(entry.path());
    std::sort(subdirs.begin(), subdirs.end());
    for (const auto& dir : subdirs) {
        auto files = sorted_java_files(dir, true);
        if (files.empty())
            continue;
        project_names.push_back(dir.filename().string());
        for (auto& path : files)
            file_jobs.push_back({project_names.size() - 1, std::move(path)});
    }

    std::vector<ParsedFile> parsed(file_jobs.size());
    std::vector<std::string> errors(file_jobs.size());
    const int n = static_cast<int>(file_jobs.size());
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int k = 0; k < n; ++k) {
        const auto& job = file_jobs[k];
        try {
            parsed[k] = parse_java_source(read_file(job.path), job.path.string());
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }

    std::vector<ProjectFacts> projects;
    for (std::size_t p = 0; p < project_names.size(); ++p) {
        std::vector<ParsedFile> files;
        std::vector<std::string> skip_warnings;
        for (std::size_t k = 0; k < file_jobs.size(); ++k) {
            if (file_jobs[k].project != p)
                continue;
            if (!errors[k].empty()) {
                skip_warnings.push_back("skipped unparseable file: " + errors[k]);
                continue;
            }
            files.push_back(std::move(parsed[k]));
        }
        ProjectFacts facts = build_project_facts(project_names[p], files);
        facts.warnings.insert(facts.warnings.begin(), skip_warnings.begin(),
                              skip_warnings.end());
        projects.push_back(std::move(facts));
    }
    std::sort(projects.begin(), projects.end(),
              [](const ProjectFacts& a, const ProjectFacts& b) {
                  return a.project_name < b.project_name;
              });
    return projects;
}

}  // namespace dpcheck
