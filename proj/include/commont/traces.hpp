#pragma once

#include <set>
#include <string>
#include <vector>

#include "commont/protocol.hpp"

namespace commont {

// One trace element: a non-commitment fluent at its normalized rank.
struct TraceEntry {
    Fluent fluent;
    Tick rank = 0;
};

bool operator==(const TraceEntry& a, const TraceEntry& b);
bool operator<(const TraceEntry& a, const TraceEntry& b);

// The effects of one run: the non-commitment fluents holding at its final
// state, in stamp order, with stamps normalized to ranks 1..n. Two runs
// produce the same trace when the same effects appear in the same relative
// order, whatever the absolute clocks were.
class ProtocolTrace {
public:
    ProtocolTrace() = default;

    static ProtocolTrace from_final_store(const FluentStore& store);

    const std::vector<TraceEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const ProtocolTrace& a, const ProtocolTrace& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ProtocolTrace& a, const ProtocolTrace& b) {
        return !(a == b);
    }
    friend bool operator<(const ProtocolTrace& a, const ProtocolTrace& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<TraceEntry> entries_;
};

// T(A): every trace the protocol can generate.
using TraceSet = std::set<ProtocolTrace>;

// A trace with time abstracted away: the multiset of its fluents, kept in a
// canonical sorted form.
class AbstractTraceMultiset {
public:
    AbstractTraceMultiset() = default;
    explicit AbstractTraceMultiset(std::vector<Fluent> fluents);

    const std::vector<Fluent>& fluents() const { return fluents_; }
    std::size_t size() const { return fluents_.size(); }

    friend bool operator==(const AbstractTraceMultiset& a,
                           const AbstractTraceMultiset& b) {
        return a.fluents_ == b.fluents_;
    }
    friend bool operator!=(const AbstractTraceMultiset& a,
                           const AbstractTraceMultiset& b) {
        return !(a == b);
    }
    friend bool operator<(const AbstractTraceMultiset& a,
                          const AbstractTraceMultiset& b) {
        return a.fluents_ < b.fluents_;
    }

private:
    std::vector<Fluent> fluents_;  // sorted
};

// S(A): the time-abstracted image of T(A).
using AbstractTraceSet = std::set<AbstractTraceMultiset>;

// Replays an event sequence from the empty store; element i is the store
// after the first i events (so the result has events.size()+1 elements).
std::vector<FluentStore> replay(const std::vector<ActEvent>& events,
                                const Ontology& ont,
                                const SemanticsRegistry& registry);

// Simulates one run and reads the trace off its final store. Throws
// FinalStateError when a commitment is still active there.
ProtocolTrace trace_of_run(const Protocol& p, const Run& run, const Ontology& ont,
                           const SemanticsRegistry& registry);

// T(A) over all runs. Requires an acyclic protocol.
TraceSet trace_set(const Protocol& p, const Ontology& ont,
                   const SemanticsRegistry& registry);

AbstractTraceMultiset abstract_time(const ProtocolTrace& trace);

AbstractTraceSet abstract_trace_set(const TraceSet& traces);

}  // namespace commont
