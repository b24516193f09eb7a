#include "commont/traces.hpp"

#include <algorithm>
#include <sstream>

#include "commont/render.hpp"

namespace commont {

bool operator==(const TraceEntry& a, const TraceEntry& b) {
    return a.rank == b.rank && a.fluent == b.fluent;
}

bool operator<(const TraceEntry& a, const TraceEntry& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.fluent < b.fluent;
}

ProtocolTrace ProtocolTrace::from_final_store(const FluentStore& store) {
    ProtocolTrace trace;
    // active() is already stamp-ordered; normalization just renumbers.
    for (const StampedFluent& sf : store.active()) {
        if (sf.fluent.is_commitment_kind()) continue;
        trace.entries_.push_back(
            {sf.fluent, static_cast<Tick>(trace.entries_.size() + 1)});
    }
    return trace;
}

AbstractTraceMultiset::AbstractTraceMultiset(std::vector<Fluent> fluents)
    : fluents_(std::move(fluents)) {
    std::sort(fluents_.begin(), fluents_.end());
}

std::vector<FluentStore> replay(const std::vector<ActEvent>& events,
                                const Ontology& ont,
                                const SemanticsRegistry& registry) {
    std::vector<FluentStore> stores;
    stores.emplace_back();
    for (const ActEvent& event : events)
        stores.push_back(apply_event(stores.back(), ont, registry, event));
    return stores;
}

ProtocolTrace trace_of_run(const Protocol& p, const Run& run, const Ontology& ont,
                           const SemanticsRegistry& registry) {
    FluentStore store;
    for (const ActEvent& event : run.events)
        store = apply_event(store, ont, registry, event);
    std::vector<const StampedFluent*> lingering;
    for (const StampedFluent& sf : store.active())
        if (sf.fluent.is_commitment_kind()) lingering.push_back(&sf);
    if (!lingering.empty()) {
        std::ostringstream out;
        out << "run of protocol '" << p.name()
            << "' reaches its final state with active commitments:";
        for (const StampedFluent* sf : lingering) out << ' ' << to_text(*sf);
        throw FinalStateError(out.str());
    }
    return ProtocolTrace::from_final_store(store);
}

TraceSet trace_set(const Protocol& p, const Ontology& ont,
                   const SemanticsRegistry& registry) {
    TraceSet traces;
    for (const Run& run : enumerate_runs(p))
        traces.insert(trace_of_run(p, run, ont, registry));
    return traces;
}

AbstractTraceMultiset abstract_time(const ProtocolTrace& trace) {
    std::vector<Fluent> fluents;
    fluents.reserve(trace.size());
    for (const TraceEntry& entry : trace.entries()) fluents.push_back(entry.fluent);
    return AbstractTraceMultiset(std::move(fluents));
}

AbstractTraceSet abstract_trace_set(const TraceSet& traces) {
    AbstractTraceSet result;
    for (const ProtocolTrace& t : traces) result.insert(abstract_time(t));
    return result;
}

}  // namespace commont
