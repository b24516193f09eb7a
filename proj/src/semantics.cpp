#include "commont/semantics.hpp"

#include <algorithm>

namespace commont {

bool operator==(const ActEvent& a, const ActEvent& b) {
    return a.act_class == b.act_class && a.sender == b.sender &&
           a.receiver == b.receiver;
}

void SemanticsRegistry::add(std::string act_class, TemplateKind kind) {
    order_.push_back(act_class);
    templates_.emplace(std::move(act_class), kind);
}

const SemanticsRegistry& SemanticsRegistry::standard() {
    static const SemanticsRegistry registry = [] {
        SemanticsRegistry r;
        r.add("Request", TemplateKind::Request);
        r.add("Accept", TemplateKind::Accept);
        r.add("Assertive", TemplateKind::Assertive);
        r.add("Commissive", TemplateKind::Commissive);
        r.add("Responsive", TemplateKind::Responsive);
        return r;
    }();
    return registry;
}

bool SemanticsRegistry::has_template(const std::string& act_class) const {
    return templates_.count(act_class) != 0;
}

TemplateKind SemanticsRegistry::template_kind(const std::string& act_class) const {
    auto it = templates_.find(act_class);
    if (it == templates_.end())
        throw SemanticsError("no effect template registered for act class '" +
                             act_class + "'");
    return it->second;
}

std::string most_specific_semantic_ancestor(const Ontology& ont,
                                            const SemanticsRegistry& registry,
                                            const std::string& act_class) {
    try {
        return ont.closest_ancestor_among(act_class, registry.registered_classes());
    } catch (const OntologyError& e) {
        // No registered ancestor means the act carries no effect template;
        // report that in semantics terms. Ambiguity stays an ontology error.
        if (std::string(e.what()).find("no ancestor") != std::string::npos)
            throw SemanticsError("act class '" + act_class +
                                 "' resolves to no effect template (not under "
                                 "Request/Accept/Assertive/Commissive/Responsive)");
        throw;
    }
}

namespace {

// The content class an act communicates; every template requires one.
std::string required_content(const Ontology& ont, const std::string& act_class) {
    auto content = ont.content_of(act_class);
    if (!content)
        throw SemanticsError("act class '" + act_class +
                             "' fixes no content class");
    return *content;
}

}  // namespace

Effects effect_template(const Ontology& ont, const SemanticsRegistry& registry,
                        const ActEvent& event) {
    const std::string root = most_specific_semantic_ancestor(ont, registry,
                                                             event.act_class);
    const std::string& s = event.sender;
    const std::string& r = event.receiver;
    Effects effects;
    switch (registry.template_kind(root)) {
        case TemplateKind::Request: {
            // The receiver conditionally commits: once it accepts, it owes
            // the requested proposition.
            std::string p = required_content(ont, event.act_class);
            effects.initiated.push_back(Fluent::conditional_commitment(
                r, s, Fluent::acceptance(r, s, p), Fluent::proposition(p)));
            break;
        }
        case TemplateKind::Accept: {
            std::string p = required_content(ont, event.act_class);
            effects.initiated.push_back(Fluent::acceptance(s, r, p));
            break;
        }
        case TemplateKind::Assertive: {
            std::string p = required_content(ont, event.act_class);
            effects.initiated.push_back(Fluent::proposition(p));
            break;
        }
        case TemplateKind::Commissive: {
            std::string p = required_content(ont, event.act_class);
            auto c = ont.condition_of(event.act_class);
            if (!c)
                throw SemanticsError(
                    "commissive act class '" + event.act_class +
                    "' carries no condition annotation (condition=...)");
            effects.initiated.push_back(Fluent::conditional_commitment(
                s, r, Fluent::proposition(*c), Fluent::proposition(p)));
            break;
        }
        case TemplateKind::Responsive: {
            std::string p = required_content(ont, event.act_class);
            auto ra = ont.reply_to_of(event.act_class);
            if (!ra)
                throw SemanticsError("responsive act class '" + event.act_class +
                                     "' carries no replyto annotation");
            std::string ra_content = required_content(ont, *ra);
            effects.initiated.push_back(Fluent::proposition(p));
            effects.terminated.push_back(
                Fluent::commitment(s, r, Fluent::proposition(ra_content)));
            break;
        }
    }
    return effects;
}

bool matches(const Ontology& ont, const Fluent& concrete, const Fluent& pattern) {
    if (concrete.kind() != pattern.kind()) return false;
    switch (concrete.kind()) {
        case FluentKind::Proposition:
            return ont.subsumes(pattern.content(), concrete.content());
        case FluentKind::Acceptance:
            return concrete.signatory() == pattern.signatory() &&
                   concrete.addressee() == pattern.addressee() &&
                   ont.subsumes(pattern.object(), concrete.object());
        case FluentKind::ConditionalCommitment:
            if (!matches(ont, concrete.conditioned_to(), pattern.conditioned_to()))
                return false;
            [[fallthrough]];
        case FluentKind::Commitment:
            return concrete.debtor() == pattern.debtor() &&
                   concrete.creditor() == pattern.creditor() &&
                   matches(ont, concrete.condition(), pattern.condition());
    }
    return false;
}

FluentStore apply_event(const FluentStore& store, const Ontology& ont,
                        const SemanticsRegistry& registry, const ActEvent& event) {
    const Effects effects = effect_template(ont, registry, event);
    FluentStore next = store;

    // One tick for the act; all its template effects share it.
    const Tick act_tick = next.next_tick();
    for (const Fluent& pattern : effects.terminated) {
        std::vector<Fluent> victims;
        for (const StampedFluent& sf : next.active())
            if (matches(ont, sf.fluent, pattern)) victims.push_back(sf.fluent);
        for (const Fluent& v : victims) next.terminate(v);
    }
    for (const Fluent& f : effects.initiated) next.initiate(f, act_tick);

    // Rule 2, to fixpoint: an active conditional commitment whose condition
    // is matched by any active fluent turns into the base-level commitment it
    // promised, one extra tick per firing, oldest trigger first.
    for (;;) {
        const StampedFluent* fired = nullptr;
        for (const StampedFluent& cc : next.active()) {
            if (cc.fluent.kind() != FluentKind::ConditionalCommitment) continue;
            bool triggered = false;
            for (const StampedFluent& f : next.active())
                if (matches(ont, f.fluent, cc.fluent.condition())) {
                    triggered = true;
                    break;
                }
            if (triggered) {
                fired = &cc;
                break;  // active() is stamp-ordered; first hit is oldest
            }
        }
        if (!fired) break;
        const Fluent cc = fired->fluent;
        next.terminate(cc);
        next.initiate(Fluent::commitment(cc.debtor(), cc.creditor(),
                                         cc.conditioned_to()),
                      next.next_tick());
    }

    // Rule 1: a commitment is discharged when its debtor just brought about a
    // fluent matching its condition. Only fluents initiated by this event
    // count as "just brought about".
    std::vector<Fluent> discharged;
    for (const StampedFluent& sf : next.active()) {
        if (sf.fluent.kind() != FluentKind::Commitment) continue;
        if (sf.fluent.debtor() != event.sender) continue;
        for (const Fluent& f : effects.initiated)
            if (next.contains(f) && matches(ont, f, sf.fluent.condition())) {
                discharged.push_back(sf.fluent);
                break;
            }
    }
    for (const Fluent& c : discharged) next.terminate(c);

    return next;
}

}  // namespace commont
