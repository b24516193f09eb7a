#include "commont/protocol.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace commont {

bool operator==(const Transition& a, const Transition& b) {
    return a.source == b.source && a.target == b.target &&
           a.act_class == b.act_class && a.sender == b.sender &&
           a.receiver == b.receiver;
}

bool operator==(const Run& a, const Run& b) { return a.events == b.events; }

Protocol Protocol::from_decl(const dsl::ProtocolFile& file) {
    Protocol p;
    p.name_ = file.name;
    p.roles_ = file.roles;
    for (const dsl::StateDecl& s : file.states) {
        p.states_.push_back(s.name);
        if (s.initial) p.initial_ = s.name;
        if (s.final) p.finals_.insert(s.name);
    }
    for (const dsl::TransitionDecl& t : file.transitions)
        p.transitions_.push_back(
            {t.source, t.target, t.act_class, t.sender, t.receiver});
    return p;
}

bool Protocol::has_state(const std::string& state) const {
    return std::find(states_.begin(), states_.end(), state) != states_.end();
}

bool Protocol::is_final(const std::string& state) const {
    return finals_.count(state) != 0;
}

std::vector<const Transition*> Protocol::outgoing(const std::string& state) const {
    std::vector<const Transition*> out;
    for (const Transition& t : transitions_)
        if (t.source == state) out.push_back(&t);
    std::sort(out.begin(), out.end(), [](const Transition* a, const Transition* b) {
        return a->act_class < b->act_class;
    });
    return out;
}

dsl::ProtocolFile Protocol::to_file() const {
    dsl::ProtocolFile file;
    file.name = name_;
    file.roles = roles_;
    for (const std::string& s : states_) {
        dsl::StateDecl decl;
        decl.name = s;
        decl.initial = (s == initial_);
        decl.final = is_final(s);
        file.states.push_back(std::move(decl));
    }
    for (const Transition& t : transitions_) {
        dsl::TransitionDecl decl;
        decl.source = t.source;
        decl.target = t.target;
        decl.act_class = t.act_class;
        decl.sender = t.sender;
        decl.receiver = t.receiver;
        file.transitions.push_back(std::move(decl));
    }
    return file;
}

bool ValidationReport::clean() const {
    if (!structural.empty()) return false;
    return std::all_of(runs.begin(), runs.end(),
                       [](const RunCheck& rc) { return rc.clean; });
}

std::vector<ValidationIssue> check_structure(const Protocol& p,
                                             const Ontology& ont) {
    std::vector<ValidationIssue> issues;

    for (const Transition& t : p.transitions()) {
        if (ont.has_act(t.act_class)) continue;
        std::string message = "transition " + t.source + " -> " + t.target +
                              " uses unknown act class '" + t.act_class + "'";
        if (ont.has_content(t.act_class))
            message = "transition " + t.source + " -> " + t.target +
                      " labels with content class '" + t.act_class +
                      "', not an act class";
        issues.push_back({"protocol.unknown-act", message});
    }

    std::map<std::pair<std::string, std::string>, const Transition*> seen;
    for (const Transition& t : p.transitions()) {
        auto [it, fresh] = seen.emplace(std::make_pair(t.source, t.act_class), &t);
        if (!fresh)
            issues.push_back(
                {"protocol.nondeterministic",
                 "state " + t.source + " has two transitions labeled '" +
                     t.act_class + "'"});
    }

    // Forward reachability from the initial state.
    std::set<std::string> reachable{p.initial()};
    std::deque<std::string> queue{p.initial()};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const Transition& t : p.transitions())
            if (t.source == cur && reachable.insert(t.target).second)
                queue.push_back(t.target);
    }
    for (const std::string& s : p.states())
        if (!reachable.count(s))
            issues.push_back({"protocol.unreachable-state",
                              "state " + s + " is unreachable from " + p.initial()});

    // Backward reachability from the final states.
    std::set<std::string> alive(p.finals().begin(), p.finals().end());
    std::deque<std::string> back(alive.begin(), alive.end());
    while (!back.empty()) {
        std::string cur = back.front();
        back.pop_front();
        for (const Transition& t : p.transitions())
            if (t.target == cur && alive.insert(t.source).second)
                back.push_back(t.source);
    }
    for (const std::string& s : p.states())
        if (reachable.count(s) && !alive.count(s))
            issues.push_back({"protocol.dead-end",
                              "no final state is reachable from state " + s});

    return issues;
}

bool has_cycle(const Protocol& p) {
    std::map<std::string, int> color;  // 0 new, 1 open, 2 done
    std::vector<std::pair<std::string, std::size_t>> stack;
    stack.emplace_back(p.initial(), 0);
    color[p.initial()] = 1;
    while (!stack.empty()) {
        auto& [state, next] = stack.back();
        auto out = p.outgoing(state);
        if (next >= out.size()) {
            color[state] = 2;
            stack.pop_back();
            continue;
        }
        const std::string& target = out[next++]->target;
        int& c = color[target];
        if (c == 1) return true;
        if (c == 0) {
            c = 1;
            stack.emplace_back(target, 0);
        }
    }
    return false;
}

Protocol load_protocol(std::string_view text, const Ontology& ont,
                       std::string_view filename) {
    dsl::ProtocolParse parsed = dsl::parse_protocol_file(text, filename);
    if (dsl::has_errors(parsed.diagnostics))
        throw LoadError("protocol file '" + std::string(filename) +
                            "' has syntax errors",
                        parsed.diagnostics);
    Protocol p = Protocol::from_decl(parsed.file);
    std::vector<ValidationIssue> issues = check_structure(p, ont);
    if (!issues.empty()) {
        std::ostringstream out;
        out << "protocol '" << p.name() << "' is invalid:";
        for (const ValidationIssue& issue : issues)
            out << "\n  " << issue.message << " [" << issue.code << ']';
        throw ProtocolError(out.str());
    }
    return p;
}

std::vector<Run> enumerate_runs(const Protocol& p) {
    if (has_cycle(p))
        throw CyclicProtocolError(
            "protocol '" + p.name() +
            "' is cyclic; its run set is infinite — use bounded simulation "
            "(--max-steps) instead of trace operations");
    std::vector<Run> runs;
    std::vector<ActEvent> path;
    // Iterative depth-first walk; runs surface in act-class order per branch,
    // shorter prefixes before their extensions.
    struct Frame {
        std::string state;
        std::vector<const Transition*> out;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({p.initial(), p.outgoing(p.initial()), 0});
    if (p.is_final(p.initial())) runs.push_back({path});
    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.next >= frame.out.size()) {
            stack.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        const Transition* t = frame.out[frame.next++];
        path.push_back({t->act_class, t->sender, t->receiver});
        if (p.is_final(t->target)) runs.push_back({path});
        stack.push_back({t->target, p.outgoing(t->target), 0});
    }
    return runs;
}

ValidationReport validate(const Protocol& p, const Ontology& ont,
                          const SemanticsRegistry& registry) {
    ValidationReport report;
    report.structural = check_structure(p, ont);
    report.cyclic = has_cycle(p);
    if (!report.structural.empty() || report.cyclic) return report;

    report.runs_checked = true;
    for (const Run& run : enumerate_runs(p)) {
        RunCheck check;
        check.run = run;
        std::string state = p.initial();
        FluentStore store;
        for (const ActEvent& event : run.events) {
            store = apply_event(store, ont, registry, event);
            for (const Transition* t : p.outgoing(state))
                if (t->act_class == event.act_class) {
                    state = t->target;
                    break;
                }
        }
        check.final_state = state;
        for (const StampedFluent& sf : store.active())
            if (sf.fluent.is_commitment_kind()) check.lingering.push_back(sf);
        check.clean = check.lingering.empty();
        report.runs.push_back(std::move(check));
    }
    return report;
}

std::vector<ActEvent> events_from_acts(const Protocol& p,
                                       const std::vector<std::string>& act_classes) {
    std::vector<ActEvent> events;
    std::string state = p.initial();
    for (const std::string& act : act_classes) {
        const Transition* taken = nullptr;
        for (const Transition* t : p.outgoing(state))
            if (t->act_class == act) {
                taken = t;
                break;
            }
        if (!taken) {
            std::ostringstream out;
            out << "act '" << act << "' is not allowed at state " << state
                << " of protocol '" << p.name() << "'; allowed: {";
            auto out_transitions = p.outgoing(state);
            for (std::size_t i = 0; i < out_transitions.size(); ++i)
                out << (i ? ", " : "") << out_transitions[i]->act_class;
            out << '}';
            throw ProtocolError(out.str());
        }
        events.push_back({taken->act_class, taken->sender, taken->receiver});
        state = taken->target;
    }
    return events;
}

}  // namespace commont
