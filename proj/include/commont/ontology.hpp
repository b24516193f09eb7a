#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commont/dsl.hpp"
#include "commont/error.hpp"

namespace commont {

// One communication-act class. Annotations capture the axiom fragments the
// engine consumes: the content filler, the replied-to request class, an
// owning-system tag, and (for commissive acts) the committed condition.
struct ActClass {
    std::string name;
    std::vector<std::string> parents;           // declaration order
    std::optional<std::string> content_class;   // content=
    std::optional<std::string> in_reply_to;     // replyto=
    std::optional<std::string> system_tag;      // system=
    std::optional<std::string> condition_class; // condition=
};

// One content (proposition) class. A parentless content class is a root of
// its own hierarchy.
struct ContentClass {
    std::string name;
    std::vector<std::string> parents;  // declaration order
};

// Immutable class catalog: the nine built-in act roots plus whatever the
// loaded files declare. Class names are unique across both hierarchies, so
// every name resolves without a kind hint.
class Ontology {
public:
    // Ontology holding only the built-in act roots.
    Ontology();

    // Adds declarations from a parsed file. Throws OntologyError on duplicate
    // names, unknown or cross-hierarchy parents, cycles, or a content
    // annotation that is not subsumed by an ancestor's annotation.
    void add_file(const dsl::OntologyFile& file);

    bool has_act(const std::string& name) const;
    bool has_content(const std::string& name) const;

    // Throw OntologyError{unknown class} when absent.
    const ActClass& act(const std::string& name) const;
    const ContentClass& content(const std::string& name) const;

    // True iff `specific` reaches `general` through the reflexive-transitive
    // parent closure. Both names must exist and live in the same hierarchy.
    bool subsumes(const std::string& general, const std::string& specific) const;

    // Nearest annotation up the act hierarchy (breadth-first; the class's own
    // annotation wins). Conflicting values at the same minimal distance are
    // an error; absent everywhere yields nullopt.
    std::optional<std::string> content_of(const std::string& act_name) const;
    std::optional<std::string> reply_to_of(const std::string& act_name) const;
    std::optional<std::string> condition_of(const std::string& act_name) const;

    // Closest ancestor (reflexive) of `act_name` among `candidates`, by
    // minimal parent-edge distance. A tie is resolved toward the unique
    // subsumption-least candidate; an incomparable tie is an error.
    std::string closest_ancestor_among(const std::string& act_name,
                                       const std::vector<std::string>& candidates) const;

    bool is_builtin(const std::string& name) const;
    static const std::vector<std::string>& builtin_act_names();

    // Declaration order, built-ins first for acts.
    std::vector<std::string> act_names() const;
    std::vector<std::string> content_names() const;

    // User-declared classes only, in declaration order; feeding the result to
    // dsl::serialize reproduces a canonical source text.
    dsl::OntologyFile to_file() const;

private:
    std::optional<std::string> nearest_annotation(
        const std::string& act_name,
        std::optional<std::string> ActClass::*slot, const char* what) const;

    std::map<std::string, ActClass> acts_;
    std::map<std::string, ContentClass> contents_;
    std::vector<std::string> act_order_;
    std::vector<std::string> content_order_;
};

// Parses and checks one ontology file. Throws LoadError (with diagnostics) on
// parse failure and OntologyError on semantic violations.
Ontology load_ontology(std::string_view text,
                       std::string_view filename = "<ontology>");

// Merges several files into one catalog, left to right.
Ontology load_ontology_files(
    const std::vector<std::pair<std::string, std::string>>& named_texts);

}  // namespace commont
