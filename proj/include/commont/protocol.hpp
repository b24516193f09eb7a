#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "commont/dsl.hpp"
#include "commont/error.hpp"
#include "commont/fluent.hpp"
#include "commont/ontology.hpp"
#include "commont/semantics.hpp"

namespace commont {

struct Transition {
    std::string source;
    std::string target;
    std::string act_class;
    std::string sender;
    std::string receiver;
};

bool operator==(const Transition& a, const Transition& b);

// One complete conversation: events along a path from the initial state to a
// state where the conversation may end.
struct Run {
    std::vector<ActEvent> events;
};

bool operator==(const Run& a, const Run& b);

// A deterministic two-party state transition system whose transitions are
// labeled with communication-act classes.
class Protocol {
public:
    // Structural mapping from a parsed file; no semantic checks. Use
    // load_protocol for a fully verified protocol.
    static Protocol from_decl(const dsl::ProtocolFile& file);

    const std::string& name() const { return name_; }
    const std::array<std::string, 2>& roles() const { return roles_; }
    const std::vector<std::string>& states() const { return states_; }
    const std::string& initial() const { return initial_; }
    const std::set<std::string>& finals() const { return finals_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    bool has_state(const std::string& state) const;
    bool is_final(const std::string& state) const;

    // Outgoing transitions of `state`, ordered by act class name; the order
    // fixes the enumeration order of runs.
    std::vector<const Transition*> outgoing(const std::string& state) const;

    dsl::ProtocolFile to_file() const;

private:
    std::string name_;
    std::array<std::string, 2> roles_;
    std::vector<std::string> states_;  // declaration order
    std::string initial_;
    std::set<std::string> finals_;
    std::vector<Transition> transitions_;  // declaration order
};

// One violated protocol invariant, with a stable code such as
// "protocol.nondeterministic" or "protocol.dead-end".
struct ValidationIssue {
    std::string code;
    std::string message;
};

// The outcome of simulating one run: whether the final store is free of
// commitments, and the offenders when it is not.
struct RunCheck {
    Run run;
    std::string final_state;
    bool clean = true;
    std::vector<StampedFluent> lingering;
};

struct ValidationReport {
    std::vector<ValidationIssue> structural;
    bool cyclic = false;
    bool runs_checked = false;
    std::vector<RunCheck> runs;

    // True when no structural issue was found and every checked run reached a
    // commitment-free final store. A cycle only suppresses run checking.
    bool clean() const;
};

// Structural invariants: known act classes, label-determinism, reachability
// of every state, and a path to a final state from every reachable state.
std::vector<ValidationIssue> check_structure(const Protocol& p, const Ontology& ont);

// True iff a cycle is reachable from the initial state.
bool has_cycle(const Protocol& p);

// Parses and fully checks a protocol file. Throws LoadError on syntax errors
// and ProtocolError on structural violations. Cyclic protocols load fine;
// only trace operations reject them.
Protocol load_protocol(std::string_view text, const Ontology& ont,
                       std::string_view filename = "<protocol>");

// Every run, exhaustively: a run ends at each final state a path reaches.
// Branches enumerate in act-class order. Throws CyclicProtocolError on a
// cyclic protocol (bounded simulation is the tool for those).
std::vector<Run> enumerate_runs(const Protocol& p);

// Full report: structural issues, cycle note, and a commitment check of each
// run's final store (skipped when structure is broken or the graph cycles).
ValidationReport validate(const Protocol& p, const Ontology& ont,
                          const SemanticsRegistry& registry);

// Resolves a scripted act-class sequence to events along states, starting at
// the initial state. Throws ProtocolError naming the allowed follow-up acts
// when a step does not label any outgoing transition. The path may stop at
// any state, final or not.
std::vector<ActEvent> events_from_acts(const Protocol& p,
                                       const std::vector<std::string>& act_classes);

}  // namespace commont
