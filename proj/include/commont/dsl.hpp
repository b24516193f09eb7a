#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commont::dsl {

/// 1-based source position attached to every diagnostic.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;
};

enum class Severity { Error, Warning };

/// A parser or loader finding. `code` is a stable identifier intended for
/// tooling; `message` is free text for humans.
struct Diagnostic {
    Severity severity = Severity::Error;
    SourceSpan span;
    std::string code;
    std::string message;
};

std::string format_diagnostic(const Diagnostic& d);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

// ---------------------------------------------------------------------------
// Ontology files.
//
//   content <Name> [: <Parent> (, <Parent>)*]
//   act <Name> : <Parent> (, <Parent>)* [content=<C>] [replyto=<A>]
//                                       [system=<Tag>] [condition=<C>]
//
// Lines starting with '#' are comments. Identifiers match
// [A-Za-z][A-Za-z0-9_-]* (hyphens occur in application-layer names such as
// A-RequestPulse).
// ---------------------------------------------------------------------------

struct ContentDecl {
    std::string name;
    std::vector<std::string> parents;
    SourceSpan span;
};

struct ActDecl {
    std::string name;
    std::vector<std::string> parents;
    std::optional<std::string> content;
    std::optional<std::string> reply_to;
    std::optional<std::string> system;
    std::optional<std::string> condition;
    SourceSpan span;
};

struct OntologyFile {
    std::vector<ContentDecl> contents;
    std::vector<ActDecl> acts;
};

// ---------------------------------------------------------------------------
// Protocol files.
//
//   protocol <Name>
//   roles <R1> <R2>
//   state <Id> [initial] [final]
//   transition <Src> -> <Dst> on <ActClass> from <Role> to <Role>
//
// Exactly one `protocol` and one `roles` statement, exactly one state marked
// initial, at least one marked final.
// ---------------------------------------------------------------------------

struct StateDecl {
    std::string name;
    bool initial = false;
    bool final = false;
    SourceSpan span;
};

struct TransitionDecl {
    std::string source;
    std::string target;
    std::string act_class;
    std::string sender;
    std::string receiver;
    SourceSpan span;
};

struct ProtocolFile {
    std::string name;
    std::array<std::string, 2> roles;
    std::vector<StateDecl> states;
    std::vector<TransitionDecl> transitions;
};

struct OntologyParse {
    OntologyFile file;
    std::vector<Diagnostic> diagnostics;
};

struct ProtocolParse {
    ProtocolFile file;  // meaningful only when diagnostics carry no errors
    std::vector<Diagnostic> diagnostics;
};

/// Parses ontology source text. Malformed lines produce diagnostics and are
/// skipped; well-formed declarations are returned in file order.
OntologyParse parse_ontology_file(std::string_view text,
                                  std::string_view filename = "<ontology>");

/// Parses protocol source text. File-level rules (single protocol/roles
/// statement, initial/final discipline, referenced states and roles declared)
/// are checked here so every violation carries a source span.
ProtocolParse parse_protocol_file(std::string_view text,
                                  std::string_view filename = "<protocol>");

/// Canonical text for a declaration set: contents before acts, declaration
/// order preserved, one statement per line. Re-parsing yields an equal value.
std::string serialize(const OntologyFile& file);
std::string serialize(const ProtocolFile& file);

bool is_identifier(std::string_view token);

}  // namespace commont::dsl
