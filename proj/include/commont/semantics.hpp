#pragma once

#include <map>
#include <string>
#include <vector>

#include "commont/fluent.hpp"
#include "commont/ontology.hpp"

namespace commont {

// One communication act as it happens: who sent what to whom.
struct ActEvent {
    std::string act_class;
    std::string sender;
    std::string receiver;
};

bool operator==(const ActEvent& a, const ActEvent& b);

// The five act families that carry an effect template. Expressive acts and
// bare Declaratives/Directives have none; resolving to them is an error.
enum class TemplateKind { Request, Accept, Assertive, Commissive, Responsive };

// Maps act classes to effect templates. The standard registry covers exactly
// the five built-in families; acts inherit the template of their closest
// registered ancestor.
class SemanticsRegistry {
public:
    static const SemanticsRegistry& standard();

    bool has_template(const std::string& act_class) const;
    TemplateKind template_kind(const std::string& act_class) const;
    const std::vector<std::string>& registered_classes() const {
        return order_;
    }

private:
    void add(std::string act_class, TemplateKind kind);

    std::map<std::string, TemplateKind> templates_;
    std::vector<std::string> order_;
};

// Closest registered ancestor (reflexive) of `act_class`; SemanticsError when
// none exists, OntologyError on an ambiguous tie.
std::string most_specific_semantic_ancestor(const Ontology& ont,
                                            const SemanticsRegistry& registry,
                                            const std::string& act_class);

// The instantiated effect template of one event: fluents to initiate and
// patterns whose active matches must be terminated.
struct Effects {
    std::vector<Fluent> initiated;
    std::vector<Fluent> terminated;
};

Effects effect_template(const Ontology& ont, const SemanticsRegistry& registry,
                        const ActEvent& event);

// True iff `concrete` fits `pattern`: same kind, identical roles, and every
// content class of `concrete` subsumed by its counterpart in `pattern`
// (recursively through commitment descriptors).
bool matches(const Ontology& ont, const Fluent& concrete, const Fluent& pattern);

// Applies one event to a store snapshot: advances the clock, applies the
// act's template, then runs the commitment rules to fixpoint. Pure — the
// input store is untouched.
FluentStore apply_event(const FluentStore& store, const Ontology& ont,
                        const SemanticsRegistry& registry, const ActEvent& event);

}  // namespace commont
